//! Closed forms over the roots of `x^3 - x^2 - x - 1`.
//!
//! With roots `alpha` (real, about 1.8393) and the complex pair
//! `beta`, `gamma = conj(beta)`:
//!
//! ```text
//! T[n] = sum_r r^(n+1) / prod_{s != r} (r - s)
//! K[n] = alpha^n + beta^n + gamma^n
//! ```
//!
//! and the quaternion forms replace each root power `r^m` by `r^m * w(r)`,
//! where `w(r) = 1 + r i + r^2 j + r^3 k`. Everything is evaluated in
//! [`BigFloat`] arithmetic and rounded back to integers; a rounding residue
//! of 1/4 or more is reported as an error instead of being rounded silently.

mod bigfloat;
mod complex;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;

pub use bigfloat::BigFloat;
pub use complex::BigComplex;

use crate::quat::{QuatSeqKind, Quaternion};
use crate::seqcore::SequenceKind;
use crate::{Error, Result};

pub const MIN_PRECISION_BITS: u32 = 64;

/// Extra bits carried while solving for the roots.
const ROOT_GUARD_BITS: u32 = 32;

/// Working precision for index `n`: `ceil(0.88 |n|) + 96` bits.
pub fn policy_precision(n: i64) -> u32 {
    let growth = (88 * n.unsigned_abs()).div_ceil(100);
    u32::try_from(growth + 96).unwrap_or(u32::MAX)
}

fn check_precision(precision_bits: u32) -> Result<()> {
    if precision_bits < MIN_PRECISION_BITS {
        return Err(Error::Config(format!(
            "precision must be at least {MIN_PRECISION_BITS} bits, got {precision_bits}"
        )));
    }
    Ok(())
}

/// The three roots at a fixed precision.
#[derive(Debug, Clone)]
pub struct Roots {
    pub alpha: BigComplex,
    pub beta: BigComplex,
    pub gamma: BigComplex,
    pub precision_bits: u32,
}

impl Roots {
    pub fn all(&self) -> [&BigComplex; 3] {
        [&self.alpha, &self.beta, &self.gamma]
    }

    /// `1 / ((r - s)(r - t))` for each root `r` against the other two.
    pub fn tribonacci_weights(&self) -> [BigComplex; 3] {
        let [a, b, c] = self.all();
        let w = |r: &BigComplex, s: &BigComplex, t: &BigComplex| r.sub(s).mul(&r.sub(t)).recip();
        [w(a, b, c), w(b, a, c), w(c, a, b)]
    }
}

/// `x^3 - x^2 - x - 1` scaled by `den^3` at `x = num / den`.
fn cubic_scaled(num: i64, den: i64) -> i64 {
    num.pow(3) - num.pow(2) * den - num * den.pow(2) - den.pow(3)
}

fn cubic(x: &BigComplex) -> BigComplex {
    let prec = x.precision();
    let one = BigComplex::one(prec);
    x.sub(&one).mul(x).sub(&one).mul(x).sub(&one)
}

fn cubic_derivative(x: &BigComplex) -> BigComplex {
    let prec = x.precision();
    let three_x = x.scale(&BigFloat::from_i64(3, prec));
    three_x
        .sub(&BigComplex::from_i64(2, prec))
        .mul(x)
        .sub(&BigComplex::one(prec))
}

fn newton_step(x: &BigComplex) -> (BigComplex, BigComplex) {
    let dx = cubic(x).div(&cubic_derivative(x));
    (x.sub(&dx), dx)
}

fn max_abs_diff(a: &BigComplex, b: &BigComplex) -> BigFloat {
    let d = a.sub(b);
    let (re, im) = (d.re.abs(), d.im.abs());
    if re.cmp_value(&im).is_ge() {
        re
    } else {
        im
    }
}

fn below_pow2(x: &BigFloat, e: i64) -> bool {
    x.log2_floor().is_none_or(|l| l < e)
}

/// Solves the cubic by Newton iteration from bracketed seeds and checks the
/// result against the radical closed forms.
pub fn compute_roots(precision_bits: u32) -> Result<Roots> {
    check_precision(precision_bits)?;
    let wp = precision_bits + ROOT_GUARD_BITS;

    // Real root bracket [1.8, 1.9]: exact sign change.
    if !(cubic_scaled(9, 5) < 0 && cubic_scaled(19, 10) > 0) {
        return Err(Error::RootCheck("seed bracket [1.8, 1.9] has no sign change".into()));
    }

    let mut alpha = BigComplex::from_real(BigFloat::from_ratio(46, 25, wp));
    for _ in 0..200 {
        let (next, dx) = newton_step(&alpha);
        alpha = BigComplex::from_real(next.re);
        if below_pow2(&dx.re.abs(), -(wp as i64)) {
            break;
        }
    }
    let lo = BigFloat::from_ratio(9, 5, wp);
    let hi = BigFloat::from_ratio(19, 10, wp);
    if !(alpha.re.cmp_value(&lo).is_gt() && alpha.re.cmp_value(&hi).is_lt()) {
        return Err(Error::RootCheck(format!("real root {:.12} left [1.8, 1.9]", alpha.re)));
    }
    let eps = BigComplex::from_real(BigFloat::pow2(-(precision_bits as i64) + 4, wp));
    if !(cubic(&alpha.sub(&eps)).re.is_negative() && !cubic(&alpha.add(&eps)).re.is_negative()) {
        return Err(Error::RootCheck(
            "real root is not isolated at the working precision".into(),
        ));
    }

    // Complex pair from beta + gamma = 1 - alpha and beta * gamma = 1 / alpha,
    // polished on the cubic itself. Positive imaginary part for beta.
    let one = BigFloat::from_i64(1, wp);
    let s = one.sub(&alpha.re);
    let disc = BigFloat::from_i64(4, wp).div(&alpha.re).sub(&s.mul(&s));
    let mut beta = BigComplex::new(s.mul_pow2(-1), disc.sqrt().mul_pow2(-1));
    for _ in 0..200 {
        let (next, dx) = newton_step(&beta);
        beta = next;
        if below_pow2(&max_abs_diff(&dx, &BigComplex::zero(wp)), -(wp as i64)) {
            break;
        }
    }

    let roots = Roots {
        alpha: with_precision(&alpha, precision_bits),
        gamma: with_precision(&beta.conj(), precision_bits),
        beta: with_precision(&beta, precision_bits),
        precision_bits,
    };
    cross_check_radicals(&roots, wp)?;
    Ok(roots)
}

fn with_precision(z: &BigComplex, prec: u32) -> BigComplex {
    BigComplex::new(z.re.with_precision(prec), z.im.with_precision(prec))
}

/// Radical forms: with `A = cbrt(19 + 3 sqrt 33)`, `B = cbrt(19 - 3 sqrt 33)`
/// and `w = (-1 + i sqrt 3) / 2`, the roots are `(1 + A + B) / 3`,
/// `(1 + w A + w^2 B) / 3` and `(1 + w^2 A + w B) / 3`.
pub fn radical_roots(precision_bits: u32) -> [BigComplex; 3] {
    let p = precision_bits;
    let three_sqrt33 = BigFloat::from_i64(33, p).sqrt().mul_i64(3);
    let nineteen = BigFloat::from_i64(19, p);
    let a = BigComplex::from_real(nineteen.add(&three_sqrt33).cbrt());
    let b = BigComplex::from_real(nineteen.sub(&three_sqrt33).cbrt());
    let w = BigComplex::new(
        BigFloat::from_ratio(-1, 2, p),
        BigFloat::from_i64(3, p).sqrt().mul_pow2(-1),
    );
    let w2 = w.conj();
    let one = BigComplex::one(p);
    let third = BigFloat::from_ratio(1, 3, p);
    let root = |x: BigComplex, y: BigComplex| one.add(&x).add(&y).scale(&third);
    [
        root(a.clone(), b.clone()),
        root(w.mul(&a), w2.mul(&b)),
        root(w2.mul(&a), w.mul(&b)),
    ]
}

fn cross_check_radicals(roots: &Roots, wp: u32) -> Result<()> {
    let radicals = radical_roots(wp);
    let tol = -(roots.precision_bits as i64) + 8;
    for (name, (newton, radical)) in ["alpha", "beta", "gamma"]
        .iter()
        .zip(roots.all().into_iter().zip(&radicals))
    {
        let d = max_abs_diff(newton, radical);
        if !below_pow2(&d, tol) {
            return Err(Error::RootCheck(format!(
                "{name}: Newton and radical forms differ by 2^{:.1}",
                d.log2_approx()
            )));
        }
    }
    Ok(())
}

/// Shared, immutable roots per precision.
pub fn roots(precision_bits: u32) -> Result<Arc<Roots>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Roots>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(r) = cache.lock().expect("roots cache poisoned").get(&precision_bits) {
        return Ok(Arc::clone(r));
    }
    let r = Arc::new(compute_roots(precision_bits)?);
    cache
        .lock()
        .expect("roots cache poisoned")
        .insert(precision_bits, Arc::clone(&r));
    Ok(r)
}

/// Quaternion with complex coefficients; the complex unit commutes with
/// `i`, `j`, `k`.
#[derive(Debug, Clone)]
pub struct QuaternionC {
    pub a0: BigComplex,
    pub a1: BigComplex,
    pub a2: BigComplex,
    pub a3: BigComplex,
}

impl QuaternionC {
    pub fn zero(prec: u32) -> Self {
        let z = BigComplex::zero(prec);
        QuaternionC {
            a0: z.clone(),
            a1: z.clone(),
            a2: z.clone(),
            a3: z,
        }
    }

    /// `1 + r i + r^2 j + r^3 k`.
    pub fn root_weight(r: &BigComplex) -> Self {
        let r2 = r.mul(r);
        QuaternionC {
            a0: BigComplex::one(r.precision()),
            a1: r.clone(),
            a3: r2.mul(r),
            a2: r2,
        }
    }

    pub fn components(&self) -> [&BigComplex; 4] {
        [&self.a0, &self.a1, &self.a2, &self.a3]
    }

    pub fn add(&self, rhs: &Self) -> Self {
        QuaternionC {
            a0: self.a0.add(&rhs.a0),
            a1: self.a1.add(&rhs.a1),
            a2: self.a2.add(&rhs.a2),
            a3: self.a3.add(&rhs.a3),
        }
    }

    pub fn scale(&self, s: &BigComplex) -> Self {
        QuaternionC {
            a0: self.a0.mul(s),
            a1: self.a1.mul(s),
            a2: self.a2.mul(s),
            a3: self.a3.mul(s),
        }
    }
}

impl fmt::Display for QuaternionC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = f.precision().unwrap_or(30);
        write!(
            f,
            "({:.d$}) + ({:.d$}) i + ({:.d$}) j + ({:.d$}) k",
            self.a0, self.a1, self.a2, self.a3
        )
    }
}

/// Distance from `z` to the nearest integer, together with that integer.
/// When fewer than three fractional bits survive, the residue is reported as
/// 1/2 because the true distance is unknown.
fn round_with_residue(z: &BigComplex) -> (BigInt, BigFloat) {
    let rounded = z.re.round();
    let prec = z.precision();
    if z.re.log2_floor().is_some_and(|e| e >= prec as i64 - 3) {
        return (rounded, BigFloat::from_ratio(1, 2, prec));
    }
    let frac = z.re.sub(&BigFloat::from_bigint(&rounded, prec)).abs();
    let im = z.im.abs();
    let residue = if frac.cmp_value(&im).is_ge() { frac } else { im };
    (rounded, residue)
}

fn accept_residue(residue: &BigFloat, precision_bits: u32) -> Result<()> {
    if residue
        .cmp_value(&BigFloat::from_ratio(1, 4, residue.precision()))
        .is_ge()
    {
        return Err(Error::PrecisionInsufficient {
            precision_bits,
            residue_log2: residue.log2_approx(),
        });
    }
    Ok(())
}

#[derive(Debug, Clone)]
pub struct BinetScalar {
    pub approx: BigComplex,
    pub rounded: BigInt,
    /// `max(|Re - rounded|, |Im|)`.
    pub residue: BigFloat,
    pub precision_bits: u32,
}

#[derive(Debug, Clone)]
pub struct BinetQuaternion {
    pub approx: QuaternionC,
    pub rounded: Quaternion,
    /// Largest per-component residue.
    pub residue: BigFloat,
    pub precision_bits: u32,
}

/// Per-root coefficient `c_r` and exponent `e` such that the value is
/// `sum_r c_r r^e` (times `w(r)` for quaternions).
fn terms(kind: SequenceKind, n: i64, roots: &Roots) -> Result<[(BigComplex, BigComplex); 3]> {
    let prec = roots.precision_bits;
    let rs = roots.all();
    Ok(match kind {
        SequenceKind::T => {
            let w = roots.tribonacci_weights();
            [0, 1, 2].map(|i| (w[i].clone(), rs[i].powi(n + 1)))
        }
        SequenceKind::K => [0, 1, 2].map(|i| (BigComplex::one(prec), rs[i].powi(n))),
        other => {
            return Err(Error::InvalidArgument(format!(
                "closed forms exist for T and K only, not {other}"
            )))
        }
    })
}

pub fn binet_scalar(kind: SequenceKind, n: i64, precision_bits: u32) -> Result<BinetScalar> {
    check_precision(precision_bits)?;
    let roots = roots(precision_bits)?;
    let approx = terms(kind, n, &roots)?
        .iter()
        .fold(BigComplex::zero(precision_bits), |acc, (c, p)| acc.add(&c.mul(p)));
    let (rounded, residue) = round_with_residue(&approx);
    accept_residue(&residue, precision_bits)?;
    Ok(BinetScalar {
        approx,
        rounded,
        residue,
        precision_bits,
    })
}

pub fn binet_quaternion(kind: QuatSeqKind, n: i64, precision_bits: u32) -> Result<BinetQuaternion> {
    check_precision(precision_bits)?;
    let scalar_kind = match kind {
        QuatSeqKind::Q => SequenceKind::T,
        QuatSeqKind::Qtilde => SequenceKind::K,
        other => {
            return Err(Error::InvalidArgument(format!(
                "closed forms exist for Q and Qtilde only, not {other}"
            )))
        }
    };
    let roots = roots(precision_bits)?;
    let approx = terms(scalar_kind, n, &roots)?
        .iter()
        .zip(roots.all())
        .fold(QuaternionC::zero(precision_bits), |acc, ((c, p), r)| {
            acc.add(&QuaternionC::root_weight(r).scale(&c.mul(p)))
        });

    let mut parts = approx.components().map(round_with_residue).into_iter();
    let mut next = || parts.next().expect("four components");
    let ((a0, r0), (a1, r1), (a2, r2), (a3, r3)) = (next(), next(), next(), next());
    let residue = [r1, r2, r3]
        .into_iter()
        .fold(r0, |m, r| if r.cmp_value(&m).is_gt() { r } else { m });
    accept_residue(&residue, precision_bits)?;
    Ok(BinetQuaternion {
        approx,
        rounded: Quaternion { a0, a1, a2, a3 },
        residue,
        precision_bits,
    })
}

/// `alpha^n beta^n + alpha^n gamma^n + beta^n gamma^n`, evaluated numerically.
pub fn pairwise_power_sum(n: i64, precision_bits: u32) -> Result<BigComplex> {
    check_precision(precision_bits)?;
    let r = roots(precision_bits)?;
    let [a, b, c] = r.all().map(|x| x.powi(n));
    Ok(a.mul(&b).add(&a.mul(&c)).add(&b.mul(&c)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::seq_quaternion;
    use crate::seqcore::{tribonacci, tribonacci_lucas};

    #[test]
    fn policy() {
        assert_eq!(policy_precision(0), 96);
        assert_eq!(policy_precision(1), 97);
        assert_eq!(policy_precision(-300), 360);
        assert_eq!(policy_precision(100), 184);
    }

    #[test]
    fn rejects_low_precision() {
        assert!(matches!(compute_roots(63), Err(Error::Config(_))));
        assert!(matches!(binet_scalar(SequenceKind::T, 3, 32), Err(Error::Config(_))));
    }

    #[test]
    fn alpha_digits_and_vieta() {
        let r = compute_roots(64).unwrap();
        assert_eq!(r.alpha.re.to_decimal(9), "1.839286755");
        assert!(r.alpha.im.is_zero());
        let vieta_tol = -32;
        let one = BigComplex::one(64);
        let sum = r.alpha.add(&r.beta).add(&r.gamma);
        assert!(below_pow2(&max_abs_diff(&sum, &one), vieta_tol));
        let pairs = r
            .alpha
            .mul(&r.beta)
            .add(&r.alpha.mul(&r.gamma))
            .add(&r.beta.mul(&r.gamma));
        assert!(below_pow2(&max_abs_diff(&pairs, &one.neg()), vieta_tol));
        let prod = r.alpha.mul(&r.beta).mul(&r.gamma);
        assert!(below_pow2(&max_abs_diff(&prod, &one), vieta_tol));
        assert!(!r.beta.im.is_negative());
        assert!(below_pow2(
            &max_abs_diff(&r.beta.add(&r.gamma), &one.sub(&r.alpha)),
            vieta_tol
        ));
    }

    #[test]
    fn vieta_tightens_with_precision() {
        for p in [64, 128, 256, 512] {
            let r = compute_roots(p).unwrap();
            let prod = r.alpha.mul(&r.beta).mul(&r.gamma);
            assert!(below_pow2(&max_abs_diff(&prod, &BigComplex::one(p)), -(p as i64) / 2));
        }
    }

    #[test]
    fn radicals_agree_with_newton() {
        let r = compute_roots(200).unwrap();
        let rad = radical_roots(232);
        for (a, b) in r.all().into_iter().zip(&rad) {
            assert!(below_pow2(&max_abs_diff(a, b), -192));
        }
    }

    #[test]
    fn scalar_examples() {
        assert_eq!(
            binet_scalar(SequenceKind::T, 10, 128).unwrap().rounded,
            BigInt::from(149)
        );
        assert_eq!(binet_scalar(SequenceKind::K, 0, 128).unwrap().rounded, BigInt::from(3));
        assert_eq!(
            binet_scalar(SequenceKind::T, -3, 128).unwrap().rounded,
            BigInt::from(-1)
        );
        assert!(binet_scalar(SequenceKind::U, 3, 128).is_err());
    }

    #[test]
    fn quaternion_examples() {
        assert_eq!(
            binet_quaternion(QuatSeqKind::Q, 5, 128).unwrap().rounded,
            Quaternion::new(7, 13, 24, 44)
        );
        assert_eq!(
            binet_quaternion(QuatSeqKind::Qtilde, 0, 128).unwrap().rounded,
            Quaternion::new(3, 1, 3, 7)
        );
        assert_eq!(
            binet_quaternion(QuatSeqKind::Q, -4, 192).unwrap().rounded,
            seq_quaternion(QuatSeqKind::Q, -4).unwrap()
        );
    }

    #[test]
    fn insufficient_precision_is_an_error() {
        // T[400] has about 350 bits; 64 bits of precision cannot pin it down.
        let err = binet_scalar(SequenceKind::T, 400, 64).unwrap_err();
        assert!(
            matches!(err, Error::PrecisionInsufficient { precision_bits: 64, .. }),
            "{err}"
        );
    }

    #[test]
    fn round_trip_on_a_window() {
        for n in -60..=60 {
            let p = policy_precision(n);
            let t = binet_scalar(SequenceKind::T, n, p).unwrap();
            assert_eq!(t.rounded, tribonacci(n), "T_{n}");
            assert!(below_pow2(&t.residue, -20));
            let k = binet_scalar(SequenceKind::K, n, p).unwrap();
            assert_eq!(k.rounded, tribonacci_lucas(n), "K_{n}");
        }
    }

    #[test]
    fn pairwise_sum_is_reflected_lucas() {
        for n in -100..=100 {
            let c = pairwise_power_sum(n, 256).unwrap();
            let exact = BigComplex::from_real(BigFloat::from_bigint(&tribonacci_lucas(-n), 256));
            let d = max_abs_diff(&c, &exact);
            assert!(d.to_f64() < 1e-6, "n = {n}: {}", d.to_f64());
        }
    }

    #[test]
    fn doubling_precision_shrinks_residue() {
        for n in [7, 40, -25, 120] {
            let p = policy_precision(n);
            let coarse = binet_scalar(SequenceKind::T, n, p).unwrap().residue;
            let fine = binet_scalar(SequenceKind::T, n, 2 * p).unwrap().residue;
            match (coarse.log2_floor(), fine.log2_floor()) {
                (_, None) => {}
                (Some(c), Some(f)) => assert!(f <= c - 32, "n = {n}: 2^{c} -> 2^{f}"),
                (None, Some(f)) => panic!("n = {n}: residue grew from 0 to 2^{f}"),
            }
        }
    }
}
