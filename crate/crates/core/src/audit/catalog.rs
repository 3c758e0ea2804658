//! The identity catalog.
//!
//! Every entry evaluates both sides exactly at one index assignment using the
//! sequence and quaternion primitives. Identities with a rational factor are
//! compared after clearing the denominator, and chained equalities report
//! the first link that breaks.

use num_bigint::BigInt;

use crate::quat::{q_progression_sum, qconj, qnorm, seq_quaternion, QuatSeqKind, Quaternion};
use crate::seqcore::{derived_scalar, tribonacci, tribonacci_lucas, SequenceKind};
use crate::series::{builtin_series, SeriesName};
use crate::{Error, Result};

/// Both sides of an identity at one index assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sides {
    pub lhs: Quaternion,
    pub rhs: Quaternion,
}

impl Sides {
    fn new(lhs: Quaternion, rhs: Quaternion) -> Self {
        Sides { lhs, rhs }
    }

    /// `lhs = rest[0] = rest[1] = ...`: keeps the first link that differs
    /// from `lhs`, otherwise the last one.
    fn chain(lhs: Quaternion, rest: Vec<Quaternion>) -> Self {
        let pick = match rest.iter().position(|r| *r != lhs) {
            Some(i) => rest[i].clone(),
            None => rest.last().cloned().unwrap_or_else(|| lhs.clone()),
        };
        Sides::new(lhs, pick)
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

type Eval = fn(&[i64]) -> Result<Sides>;

#[derive(Debug, Clone, Copy)]
pub struct IdentityCase {
    pub id: &'static str,
    /// Index variable names, in lexicographic comparison order.
    pub vars: &'static [&'static str],
    /// Lower bound per variable; `None` when every integer is allowed.
    pub domain_min: &'static [Option<i64>],
    pub description: &'static str,
    pub reference: &'static str,
    eval: Eval,
}

impl IdentityCase {
    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    /// e.g. `m>=3, n>=0` or `all integers`.
    pub fn domain(&self) -> String {
        let parts: Vec<String> = self
            .vars
            .iter()
            .zip(self.domain_min)
            .filter_map(|(v, min)| min.map(|m| format!("{v}>={m}")))
            .collect();
        if parts.is_empty() {
            "all integers".to_string()
        } else {
            parts.join(", ")
        }
    }

    pub fn accepts(&self, indices: &[i64]) -> bool {
        indices.len() == self.arity()
            && indices
                .iter()
                .zip(self.domain_min)
                .all(|(i, min)| min.is_none_or(|m| *i >= m))
    }

    pub fn evaluate(&self, indices: &[i64]) -> Result<Sides> {
        if !self.accepts(indices) {
            return Err(Error::InvalidArgument(format!(
                "{}: {:?} is outside {}",
                self.id,
                indices,
                self.domain()
            )));
        }
        (self.eval)(indices)
    }
}

fn q(n: i64) -> Result<Quaternion> {
    seq_quaternion(QuatSeqKind::Q, n)
}

fn qt(n: i64) -> Result<Quaternion> {
    seq_quaternion(QuatSeqKind::Qtilde, n)
}

fn ut(n: i64) -> Result<Quaternion> {
    seq_quaternion(QuatSeqKind::Utilde, n)
}

fn cu(n: i64) -> Result<Quaternion> {
    seq_quaternion(QuatSeqKind::Cunder, n)
}

fn c(n: i64) -> Result<BigInt> {
    derived_scalar(SequenceKind::C, n)
}

fn s(m: i64) -> Result<BigInt> {
    derived_scalar(SequenceKind::S, m)
}

/// `Q[0] + ... + Q[n]`.
fn shat(n: i64) -> Result<Quaternion> {
    q_progression_sum(QuatSeqKind::Q, 0, 1, (n + 1) as u64)
}

fn sum(kind: QuatSeqKind, start: i64, stride: i64, count: i64) -> Result<Quaternion> {
    q_progression_sum(kind, start, stride, count.max(0) as u64)
}

fn quat(a0: i64, a1: i64, a2: i64, a3: i64) -> Quaternion {
    Quaternion::new(a0, a1, a2, a3)
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn i1_1(ix: &[i64]) -> Result<Sides> {
    let n = ix[0];
    let qn = q(n)?;
    let rhs = &qn.scale(&(2 * tribonacci(n))) - &(&qn * &qconj(&qn));
    Ok(Sides::new(qn.square(), rhs))
}

fn i1_2(ix: &[i64]) -> Result<Sides> {
    let n = ix[0];
    let qn = q(n)?;
    Ok(Sides::new(&qn + &qconj(&qn), Quaternion::scalar(2 * tribonacci(n))))
}

fn i1_3(ix: &[i64]) -> Result<Sides> {
    let n = ix[0];
    let rhs = &(&q(n)? + &q(n - 1)?.scale(&big(2))) + &q(n - 2)?.scale(&big(3));
    Ok(Sides::new(qt(n)?, rhs))
}

fn i2_1(ix: &[i64]) -> Result<Sides> {
    let (m, n) = (ix[0], ix[1]);
    let rhs = &(&q(m)?.scale(&tribonacci_lucas(n)) - &q(m - n)?.scale(&c(n)?)) + &q(m - 2 * n)?;
    Ok(Sides::new(q(m + n)?, rhs))
}

fn i2_2(ix: &[i64]) -> Result<Sides> {
    let (m, n) = (ix[0], ix[1]);
    let rhs = &(&qt(m)?.scale(&tribonacci_lucas(n)) - &qt(m - n)?.scale(&c(n)?)) + &cu(2 * n - m)?;
    Ok(Sides::new(qt(m + n)?, rhs))
}

fn i2_3(ix: &[i64]) -> Result<Sides> {
    let (m, n) = (ix[0], ix[1]);
    let rhs = &(&q(n + m)?.scale(&tribonacci_lucas(m)) - &q(n)?.scale(&tribonacci_lucas(-m))) + &q(n - 2 * m)?;
    Ok(Sides::new(q(n + 2 * m)?, rhs))
}

fn i3(ix: &[i64]) -> Result<Sides> {
    let (m, n) = (ix[0], ix[1]);
    let rhs = &(&q(n)?.scale(&tribonacci(m - 2)) + &q(n + 1)?.scale(&(tribonacci(m - 3) + tribonacci(m - 2))))
        + &q(n + 2)?.scale(&tribonacci(m - 1));
    Ok(Sides::new(q(n + m)?, rhs))
}

fn i4_1(ix: &[i64]) -> Result<Sides> {
    let n = ix[0];
    Ok(Sides::new(q(n)?.scale(&big(2)), &shat(n)? - &shat(n - 4)?))
}

fn i4_2(ix: &[i64]) -> Result<Sides> {
    let (m, n) = (ix[0], ix[1]);
    let rhs = &(&(&shat(n + 3)?.scale(&s(m - 2)?) - &shat(n)?.scale(&s(m - 3)?)) - &shat(n + 1)?.scale(&s(m - 4)?))
        - &shat(n + 2)?.scale(&s(m - 5)?);
    Ok(Sides::new(shat(n + m)?, rhs))
}

fn i5(ix: &[i64]) -> Result<Sides> {
    let n = ix[0];
    let q0 = q(n)?;
    let cross = &(&q(n + 1)? + &q(n + 2)?).scale(&big(2)) * &q(n + 3)?;
    let lhs = &(&q0 * &q(n + 4)?).square() + &cross.square();
    let rhs = (&q0.square() + &cross).square();
    Ok(Sides::new(lhs, rhs))
}

fn recurrence(kind: QuatSeqKind, n: i64) -> Result<Sides> {
    let x = |d| seq_quaternion(kind, n + d);
    Ok(Sides::new(x(3)?, &(&x(2)? + &x(1)?) + &x(0)?))
}

fn i6_1(ix: &[i64]) -> Result<Sides> {
    recurrence(QuatSeqKind::Rtilde, ix[0])
}

fn i6_2(ix: &[i64]) -> Result<Sides> {
    recurrence(QuatSeqKind::Utilde, ix[0])
}

fn i6_3a(ix: &[i64]) -> Result<Sides> {
    let n = ix[0];
    Ok(Sides::new(
        &q(n)?.square() - &q(n - 1)?.square(),
        &ut(n + 1)? * &ut(n - 1)?,
    ))
}

fn i6_3b(ix: &[i64]) -> Result<Sides> {
    let n = ix[0];
    Ok(Sides::new(
        &q(n)?.square() - &q(n - 1)?.square(),
        &ut(n - 1)? * &ut(n + 1)?,
    ))
}

fn i6_4(ix: &[i64]) -> Result<Sides> {
    let n = ix[0];
    let lhs = &ut(n + 1)?.square() + &ut(n - 1)?.square();
    let rhs = (&q(n - 1)?.square() + &q(n)?.square()).scale(&big(2));
    Ok(Sides::new(lhs, rhs))
}

fn i7_1(ix: &[i64]) -> Result<Sides> {
    let n = ix[0];
    let lhs = sum(QuatSeqKind::Q, 0, 1, n + 1)?.scale(&big(2));
    let rhs = &(&(&q(n + 2)? + &q(n)?) + &q(0)?) - &q(2)?;
    Ok(Sides::new(lhs, rhs))
}

fn i7_2(ix: &[i64]) -> Result<Sides> {
    let n = ix[0];
    let lhs = sum(QuatSeqKind::Q, 0, 2, n + 1)?.scale(&big(2));
    let rhs = &(&q(2 * n + 1)? + &q(2 * n)?) - &quat(1, 0, 1, 2);
    Ok(Sides::new(lhs, rhs))
}

fn i7_3(ix: &[i64]) -> Result<Sides> {
    let n = ix[0];
    let lhs = sum(QuatSeqKind::Q, 1, 2, n + 1)?.scale(&big(2));
    let rhs = &(&q(2 * n + 2)? + &q(2 * n + 1)?) - &quat(0, 1, 2, 3);
    Ok(Sides::new(lhs, rhs))
}

fn i7_4(ix: &[i64]) -> Result<Sides> {
    let n = ix[0];
    let lhs = sum(QuatSeqKind::Q, 0, 3, n + 1)?.scale(&big(2));
    let middle = (&sum(QuatSeqKind::Q, 0, 1, 3 * n)? + &q(0)?).scale(&big(2));
    let closed = &(&q(3 * n + 2)? - &q(3 * n)?) - &quat(1, -1, 1, 1);
    Ok(Sides::chain(lhs, vec![middle, closed]))
}

fn i7_5(ix: &[i64]) -> Result<Sides> {
    let n = ix[0];
    let lhs = sum(QuatSeqKind::Q, 0, 4, n + 1)?.scale(&big(4));
    let rhs = &(&q(4 * n + 2)? + &q(4 * n)?) - &quat(1, -1, 1, 1);
    Ok(Sides::new(lhs, rhs))
}

fn i7_6(ix: &[i64]) -> Result<Sides> {
    let n = ix[0];
    Ok(Sides::new(
        sum(QuatSeqKind::Utilde, 0, 1, n + 1)?,
        &q(n + 1)? - &quat(1, 1, 1, 2),
    ))
}

fn i7_7(ix: &[i64]) -> Result<Sides> {
    let n = ix[0];
    let rhs = &(&ut(n + 2)?.scale(&big(2)) + &ut(n)?) - &quat(3, 4, 7, 14);
    Ok(Sides::new(sum(QuatSeqKind::Qtilde, 1, 1, n)?, rhs))
}

fn i7_8(ix: &[i64]) -> Result<Sides> {
    let n = ix[0];
    let lhs = sum(QuatSeqKind::Q, 0, 1, n + 1)?.scale(&big(2));
    let rhs = &(&ut(n + 2)? + &ut(n + 1)?) - &quat(1, 1, 3, 5);
    Ok(Sides::new(lhs, rhs))
}

fn i7_9(ix: &[i64]) -> Result<Sides> {
    let n = ix[0];
    let lhs = sum(QuatSeqKind::Rtilde, 0, 1, n + 1)?.scale(&big(2));
    let rhs = &(&(&ut(n + 3)?.scale(&big(3)) + &ut(n + 2)?.scale(&big(2))) - &ut(n + 1)?) - &quat(2, 8, 12, 22);
    Ok(Sides::new(lhs, rhs))
}

fn i7_10(ix: &[i64]) -> Result<Sides> {
    let n = ix[0];
    Ok(Sides::new(
        sum(QuatSeqKind::Utilde, 0, 3, n + 1)?,
        &q(3 * n)? - &quat(0, 1, 0, 0),
    ))
}

fn i7_11(ix: &[i64]) -> Result<Sides> {
    let n = ix[0];
    Ok(Sides::new(
        sum(QuatSeqKind::Utilde, 1, 3, n + 1)?,
        &q(3 * n + 1)? - &quat(1, 0, 0, 1),
    ))
}

fn n1(ix: &[i64]) -> Result<Sides> {
    let n = ix[0];
    let qn = q(n)?;
    let squares: BigInt = (0..4).map(|d| tribonacci(n + d).pow(2)).sum();
    let coeff = builtin_series(SeriesName::NormT)
        .expand(n as usize + 1)?
        .pop()
        .expect("n + 1 coefficients");
    Ok(Sides::chain(
        &qn * &qconj(&qn),
        vec![Quaternion::scalar(qnorm(&qn)), Quaternion::scalar(squares), coeff],
    ))
}

fn x1(ix: &[i64]) -> Result<Sides> {
    let (m, n) = (ix[0], ix[1]);
    let under = Sides::new(cu(2 * n - m)?, qt(m - 2 * n)?);
    if !under.holds() {
        return Ok(under);
    }
    Ok(Sides::new(
        Quaternion::scalar(c(n)?),
        Quaternion::scalar(tribonacci_lucas(-n)),
    ))
}

const N: &[&str] = &["n"];
const MN: &[&str] = &["m", "n"];

const fn single(
    id: &'static str,
    min: &'static [Option<i64>],
    description: &'static str,
    reference: &'static str,
    eval: Eval,
) -> IdentityCase {
    IdentityCase {
        id,
        vars: N,
        domain_min: min,
        description,
        reference,
        eval,
    }
}

const fn pair(
    id: &'static str,
    min: &'static [Option<i64>],
    description: &'static str,
    reference: &'static str,
    eval: Eval,
) -> IdentityCase {
    IdentityCase {
        id,
        vars: MN,
        domain_min: min,
        description,
        reference,
        eval,
    }
}

const N0: &[Option<i64>] = &[Some(0)];
const N1: &[Option<i64>] = &[Some(1)];
const N2: &[Option<i64>] = &[Some(2)];
const N4: &[Option<i64>] = &[Some(4)];
const ANY: &[Option<i64>] = &[None];
const ANY2: &[Option<i64>] = &[None, None];

static CATALOG: [IdentityCase; 28] = [
    single("I1.1", N0, "Q[n]^2 = 2 T[n] Q[n] - Q[n] Q[n]*", "identities 1.1", i1_1),
    single("I1.2", N0, "Q[n] + Q[n]* = 2 T[n]", "identities 1.2", i1_2),
    single(
        "I1.3",
        ANY,
        "Qt[n] = Q[n] + 2 Q[n-1] + 3 Q[n-2]",
        "identities 1.3",
        i1_3,
    ),
    pair(
        "I2.1",
        ANY2,
        "Q[m+n] = Q[m] K[n] - Q[m-n] C[n] + Q[m-2n]",
        "identities 2.1",
        i2_1,
    ),
    pair(
        "I2.2",
        ANY2,
        "Qt[m+n] = Qt[m] K[n] - Qt[m-n] C[n] + Cu[2n-m]",
        "identities 2.2",
        i2_2,
    ),
    pair(
        "I2.3",
        ANY2,
        "Q[n+2m] = K[m] Q[n+m] - K[-m] Q[n] + Q[n-2m]",
        "identities 2.3",
        i2_3,
    ),
    pair(
        "I3",
        &[Some(3), Some(0)],
        "Q[n+m] = T[m-2] Q[n] + (T[m-3] + T[m-2]) Q[n+1] + T[m-1] Q[n+2]",
        "identity 3",
        i3,
    ),
    single(
        "I4.1",
        N4,
        "2 Q[n] = Sh[n] - Sh[n-4], Sh[n] = Q[0] + ... + Q[n]",
        "identities 4.1",
        i4_1,
    ),
    pair(
        "I4.2",
        &[Some(5), Some(0)],
        "Sh[n+m] = -S[m-3] Sh[n] - S[m-4] Sh[n+1] - S[m-5] Sh[n+2] + S[m-2] Sh[n+3]",
        "identities 4.2",
        i4_2,
    ),
    single(
        "I5",
        N0,
        "(Q[n] Q[n+4])^2 + (2 (Q[n+1] + Q[n+2]) Q[n+3])^2 = (Q[n]^2 + 2 (Q[n+1] + Q[n+2]) Q[n+3])^2",
        "identity 5",
        i5,
    ),
    single(
        "I6.1",
        N0,
        "Rt[n+3] = Rt[n+2] + Rt[n+1] + Rt[n]",
        "identities 6.1",
        i6_1,
    ),
    single(
        "I6.2",
        N0,
        "Ut[n+3] = Ut[n+2] + Ut[n+1] + Ut[n]",
        "identities 6.2",
        i6_2,
    ),
    single(
        "I6.3a",
        N2,
        "Q[n]^2 - Q[n-1]^2 = Ut[n+1] Ut[n-1]",
        "identities 6.3",
        i6_3a,
    ),
    single(
        "I6.3b",
        N2,
        "Q[n]^2 - Q[n-1]^2 = Ut[n-1] Ut[n+1]",
        "identities 6.3, reversed product",
        i6_3b,
    ),
    single(
        "I6.4",
        N2,
        "Ut[n+1]^2 + Ut[n-1]^2 = 2 (Q[n-1]^2 + Q[n]^2)",
        "identities 6.4",
        i6_4,
    ),
    single(
        "I7.1",
        N0,
        "2 sum_{k=0}^{n} Q[k] = Q[n+2] + Q[n] + Q[0] - Q[2]",
        "identities 7.1",
        i7_1,
    ),
    single(
        "I7.2",
        N0,
        "2 sum_{k=0}^{n} Q[2k] = Q[2n+1] + Q[2n] - (1 + j + 2k)",
        "identities 7.2",
        i7_2,
    ),
    single(
        "I7.3",
        N0,
        "2 sum_{k=0}^{n} Q[2k+1] = Q[2n+2] + Q[2n+1] - (i + 2j + 3k)",
        "identities 7.3",
        i7_3,
    ),
    single(
        "I7.4",
        N0,
        "2 sum_{k=0}^{n} Q[3k] = 2 (sum_{k=0}^{3n-1} Q[k] + Q[0]) = Q[3n+2] - Q[3n] - (1 - i + j + k)",
        "identities 7.4",
        i7_4,
    ),
    single(
        "I7.5",
        N0,
        "4 sum_{k=0}^{n} Q[4k] = Q[4n+2] + Q[4n] - (1 - i + j + k)",
        "identities 7.5",
        i7_5,
    ),
    single(
        "I7.6",
        N0,
        "sum_{k=0}^{n} Ut[k] = Q[n+1] - (1 + i + j + 2k)",
        "identities 7.6",
        i7_6,
    ),
    single(
        "I7.7",
        N1,
        "sum_{k=1}^{n} Qt[k] = 2 Ut[n+2] + Ut[n] - (3 + 4i + 7j + 14k)",
        "identities 7.7",
        i7_7,
    ),
    single(
        "I7.8",
        N0,
        "2 sum_{k=0}^{n} Q[k] = Ut[n+2] + Ut[n+1] - (1 + i + 3j + 5k)",
        "identities 7.8",
        i7_8,
    ),
    single(
        "I7.9",
        N0,
        "2 sum_{k=0}^{n} Rt[k] = 3 Ut[n+3] + 2 Ut[n+2] - Ut[n+1] - (2 + 8i + 12j + 22k)",
        "identities 7.9",
        i7_9,
    ),
    single(
        "I7.10",
        N0,
        "sum_{k=0}^{n} Ut[3k] = Q[3n] - i",
        "identities 7.10",
        i7_10,
    ),
    single(
        "I7.11",
        N0,
        "sum_{k=0}^{n} Ut[3k+1] = Q[3n+1] - (1 + k)",
        "identities 7.11",
        i7_11,
    ),
    single(
        "N1",
        N0,
        "Q[n] Q[n]* = T[n]^2 + T[n+1]^2 + T[n+2]^2 + T[n+3]^2 = [x^n] normT",
        "norm series",
        n1,
    ),
    pair(
        "X1",
        ANY2,
        "Cu[2n-m] = Qt[m-2n] and C[n] = K[-n]",
        "derived consistency",
        x1,
    ),
];

/// All identities, in report order.
pub fn catalog() -> &'static [IdentityCase] {
    &CATALOG
}

pub fn lookup(id: &str) -> Result<&'static IdentityCase> {
    CATALOG.iter().find(|c| c.id == id).ok_or_else(|| Error::Unknown {
        what: "identity",
        name: id.to_string(),
    })
}
