//! Reference implementation used to cross-check the library.
//!
//! Nothing here calls into `tribq`. Sequences are tabulated over a fixed
//! window, quaternion products are expanded term by term through the basis
//! table, and every identity is transcribed directly from its statement.

use std::collections::BTreeMap;

use num_bigint::BigInt;

pub const LO: i64 = -400;
pub const HI: i64 = 1200;

pub struct Tables {
    t: Vec<BigInt>,
    k: Vec<BigInt>,
}

fn tabulate(seed: [i64; 3]) -> Vec<BigInt> {
    let len = (HI - LO + 1) as usize;
    let zero = (-LO) as usize;
    let mut v = vec![BigInt::from(0); len];
    for (d, s) in seed.iter().enumerate() {
        v[zero + d] = BigInt::from(*s);
    }
    for i in zero + 3..len {
        v[i] = &v[i - 1] + &v[i - 2] + &v[i - 3];
    }
    for i in (0..zero).rev() {
        v[i] = &v[i + 3] - &v[i + 2] - &v[i + 1];
    }
    v
}

impl Tables {
    pub fn new() -> Self {
        Tables {
            t: tabulate([0, 1, 1]),
            k: tabulate([3, 1, 3]),
        }
    }

    fn at(v: &[BigInt], n: i64) -> BigInt {
        assert!((LO..=HI).contains(&n), "oracle window exceeded at {n}");
        v[(n - LO) as usize].clone()
    }

    pub fn t(&self, n: i64) -> BigInt {
        Self::at(&self.t, n)
    }

    pub fn k(&self, n: i64) -> BigInt {
        Self::at(&self.k, n)
    }

    pub fn c(&self, n: i64) -> BigInt {
        self.k(-n)
    }

    pub fn r(&self, n: i64) -> BigInt {
        assert!(n >= 0);
        3 * self.t(n + 1) - self.t(n)
    }

    pub fn u(&self, n: i64) -> BigInt {
        assert!(n >= 0);
        if n < 2 {
            BigInt::from(0)
        } else {
            self.t(n - 1) + self.t(n - 2)
        }
    }

    pub fn s(&self, m: i64) -> BigInt {
        assert!(m >= 0);
        (0..=m).map(|k| self.t(k)).sum()
    }

    fn quat_of(&self, f: impl Fn(i64) -> BigInt, idx: [i64; 4]) -> Q {
        Q(idx.map(f))
    }

    pub fn q(&self, n: i64) -> Q {
        self.quat_of(|i| self.t(i), [n, n + 1, n + 2, n + 3])
    }

    pub fn qt(&self, n: i64) -> Q {
        self.quat_of(|i| self.k(i), [n, n + 1, n + 2, n + 3])
    }

    pub fn rt(&self, n: i64) -> Q {
        self.quat_of(|i| self.r(i), [n, n + 1, n + 2, n + 3])
    }

    pub fn ut(&self, n: i64) -> Q {
        self.quat_of(|i| self.u(i), [n, n + 1, n + 2, n + 3])
    }

    pub fn cu(&self, n: i64) -> Q {
        self.quat_of(|i| self.c(i), [n, n - 1, n - 2, n - 3])
    }
}

impl Default for Tables {
    fn default() -> Self {
        Self::new()
    }
}

/// Quaternion as `[a0, a1, a2, a3]` over `1, i, j, k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Q(pub [BigInt; 4]);

/// `e_a * e_b = SIGN[a][b] * e_{INDEX[a][b]}` with `e = (1, i, j, k)`.
const INDEX: [[usize; 4]; 4] = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]];
const SIGN: [[i64; 4]; 4] = [[1, 1, 1, 1], [1, -1, 1, -1], [1, -1, -1, 1], [1, 1, -1, -1]];

impl Q {
    pub fn from_i64(v: [i64; 4]) -> Self {
        Q(v.map(BigInt::from))
    }

    pub fn scalar(s: BigInt) -> Self {
        let z = BigInt::from(0);
        Q([s, z.clone(), z.clone(), z])
    }

    pub fn zero() -> Self {
        Q::from_i64([0; 4])
    }

    pub fn add(&self, o: &Q) -> Q {
        Q(std::array::from_fn(|i| &self.0[i] + &o.0[i]))
    }

    pub fn sub(&self, o: &Q) -> Q {
        Q(std::array::from_fn(|i| &self.0[i] - &o.0[i]))
    }

    pub fn times(&self, s: &BigInt) -> Q {
        Q(std::array::from_fn(|i| &self.0[i] * s))
    }

    pub fn times_i(&self, s: i64) -> Q {
        self.times(&BigInt::from(s))
    }

    pub fn mul(&self, o: &Q) -> Q {
        let mut out = Q::zero();
        for a in 0..4 {
            for b in 0..4 {
                let term = &self.0[a] * &o.0[b] * SIGN[a][b];
                out.0[INDEX[a][b]] += term;
            }
        }
        out
    }

    pub fn sq(&self) -> Q {
        self.mul(self)
    }

    pub fn conj(&self) -> Q {
        let [a, b, c, d] = &self.0;
        Q([a.clone(), -b, -c, -d])
    }
}

/// Both sides of identity `id` at `ix`; chained statements return the first
/// broken link. Mirrors the semantics of the library's catalog, not its code.
pub fn sides(tb: &Tables, id: &str, ix: &[i64]) -> (Q, Q) {
    let n = *ix.last().unwrap();
    let m = ix[0];
    let two = BigInt::from(2);
    let sum = |f: &dyn Fn(i64) -> Q, from: i64, to: i64| (from..=to).fold(Q::zero(), |acc, k| acc.add(&f(k)));
    let shat = |x: i64| sum(&|k| tb.q(k), 0, x);
    match id {
        "I1.1" => {
            let q = tb.q(n);
            (q.sq(), q.times(&(&two * tb.t(n))).sub(&q.mul(&q.conj())))
        }
        "I1.2" => {
            let q = tb.q(n);
            (q.add(&q.conj()), Q::scalar(&two * tb.t(n)))
        }
        "I1.3" => (
            tb.qt(n),
            tb.q(n).add(&tb.q(n - 1).times_i(2)).add(&tb.q(n - 2).times_i(3)),
        ),
        "I2.1" => (
            tb.q(m + n),
            tb.q(m)
                .times(&tb.k(n))
                .sub(&tb.q(m - n).times(&tb.c(n)))
                .add(&tb.q(m - 2 * n)),
        ),
        "I2.2" => (
            tb.qt(m + n),
            tb.qt(m)
                .times(&tb.k(n))
                .sub(&tb.qt(m - n).times(&tb.c(n)))
                .add(&tb.cu(2 * n - m)),
        ),
        "I2.3" => (
            tb.q(n + 2 * m),
            tb.q(n + m)
                .times(&tb.k(m))
                .sub(&tb.q(n).times(&tb.k(-m)))
                .add(&tb.q(n - 2 * m)),
        ),
        "I3" => (
            tb.q(n + m),
            tb.q(n)
                .times(&tb.t(m - 2))
                .add(&tb.q(n + 1).times(&(tb.t(m - 3) + tb.t(m - 2))))
                .add(&tb.q(n + 2).times(&tb.t(m - 1))),
        ),
        "I4.1" => (tb.q(n).times_i(2), shat(n).sub(&shat(n - 4))),
        "I4.2" => (
            shat(n + m),
            shat(n + 3)
                .times(&tb.s(m - 2))
                .sub(&shat(n).times(&tb.s(m - 3)))
                .sub(&shat(n + 1).times(&tb.s(m - 4)))
                .sub(&shat(n + 2).times(&tb.s(m - 5))),
        ),
        "I5" => {
            let x = tb.q(n + 1).add(&tb.q(n + 2)).times_i(2).mul(&tb.q(n + 3));
            (tb.q(n).mul(&tb.q(n + 4)).sq().add(&x.sq()), tb.q(n).sq().add(&x).sq())
        }
        "I6.1" => (tb.rt(n + 3), tb.rt(n + 2).add(&tb.rt(n + 1)).add(&tb.rt(n))),
        "I6.2" => (tb.ut(n + 3), tb.ut(n + 2).add(&tb.ut(n + 1)).add(&tb.ut(n))),
        "I6.3a" => (tb.q(n).sq().sub(&tb.q(n - 1).sq()), tb.ut(n + 1).mul(&tb.ut(n - 1))),
        "I6.3b" => (tb.q(n).sq().sub(&tb.q(n - 1).sq()), tb.ut(n - 1).mul(&tb.ut(n + 1))),
        "I6.4" => (
            tb.ut(n + 1).sq().add(&tb.ut(n - 1).sq()),
            tb.q(n - 1).sq().add(&tb.q(n).sq()).times_i(2),
        ),
        "I7.1" => (
            sum(&|k| tb.q(k), 0, n).times_i(2),
            tb.q(n + 2).add(&tb.q(n)).add(&tb.q(0)).sub(&tb.q(2)),
        ),
        "I7.2" => (
            sum(&|k| tb.q(2 * k), 0, n).times_i(2),
            tb.q(2 * n + 1).add(&tb.q(2 * n)).sub(&Q::from_i64([1, 0, 1, 2])),
        ),
        "I7.3" => (
            sum(&|k| tb.q(2 * k + 1), 0, n).times_i(2),
            tb.q(2 * n + 2).add(&tb.q(2 * n + 1)).sub(&Q::from_i64([0, 1, 2, 3])),
        ),
        "I7.4" => {
            let lhs = sum(&|k| tb.q(3 * k), 0, n).times_i(2);
            let mid = sum(&|k| tb.q(k), 0, 3 * n - 1).add(&tb.q(0)).times_i(2);
            let closed = tb.q(3 * n + 2).sub(&tb.q(3 * n)).sub(&Q::from_i64([1, -1, 1, 1]));
            if lhs != mid {
                (lhs, mid)
            } else {
                (lhs, closed)
            }
        }
        "I7.5" => (
            sum(&|k| tb.q(4 * k), 0, n).times_i(4),
            tb.q(4 * n + 2).add(&tb.q(4 * n)).sub(&Q::from_i64([1, -1, 1, 1])),
        ),
        "I7.6" => (sum(&|k| tb.ut(k), 0, n), tb.q(n + 1).sub(&Q::from_i64([1, 1, 1, 2]))),
        "I7.7" => (
            sum(&|k| tb.qt(k), 1, n),
            tb.ut(n + 2).times_i(2).add(&tb.ut(n)).sub(&Q::from_i64([3, 4, 7, 14])),
        ),
        "I7.8" => (
            sum(&|k| tb.q(k), 0, n).times_i(2),
            tb.ut(n + 2).add(&tb.ut(n + 1)).sub(&Q::from_i64([1, 1, 3, 5])),
        ),
        "I7.9" => (
            sum(&|k| tb.rt(k), 0, n).times_i(2),
            tb.ut(n + 3)
                .times_i(3)
                .add(&tb.ut(n + 2).times_i(2))
                .sub(&tb.ut(n + 1))
                .sub(&Q::from_i64([2, 8, 12, 22])),
        ),
        "I7.10" => (
            sum(&|k| tb.ut(3 * k), 0, n),
            tb.q(3 * n).sub(&Q::from_i64([0, 1, 0, 0])),
        ),
        "I7.11" => (
            sum(&|k| tb.ut(3 * k + 1), 0, n),
            tb.q(3 * n + 1).sub(&Q::from_i64([1, 0, 0, 1])),
        ),
        "N1" => {
            let q = tb.q(n);
            let lhs = q.mul(&q.conj());
            let squares: BigInt = (0..4).map(|d| tb.t(n + d).pow(2)).sum();
            if lhs != Q::scalar(squares.clone()) {
                return (lhs, Q::scalar(squares));
            }
            // Coefficient check: den(x) * normT(x) must reproduce num(x) at x^n.
            let den = [1, -2, -3, -6, 1, 0, 1];
            let num = [6, 10, 8, -4, -2, -2];
            let c = |j: i64| -> BigInt {
                if j < 0 {
                    BigInt::from(0)
                } else {
                    (0..4).map(|d| tb.t(j + d).pow(2)).sum()
                }
            };
            let conv: BigInt = den.iter().enumerate().map(|(i, d)| c(n - i as i64) * d).sum();
            let want = BigInt::from(*num.get(n as usize).unwrap_or(&0));
            (Q::scalar(conv), Q::scalar(want))
        }
        "X1" => {
            let (a, b) = (tb.cu(2 * n - m), tb.qt(m - 2 * n));
            if a != b {
                (a, b)
            } else {
                (Q::scalar(tb.c(n)), Q::scalar(tb.k(-n)))
            }
        }
        other => panic!("oracle has no identity {other}"),
    }
}

pub fn holds(tb: &Tables, id: &str, ix: &[i64]) -> bool {
    let (l, r) = sides(tb, id, ix);
    l == r
}

/// Failing points over the given inclusive ranges, in lexicographic order.
pub fn failures(tb: &Tables, id: &str, vars: &[&str], ranges: &[(i64, i64)]) -> Vec<BTreeMap<String, i64>> {
    let mut out = Vec::new();
    let mut point = vec![0i64; ranges.len()];
    fn walk(
        tb: &Tables,
        id: &str,
        vars: &[&str],
        ranges: &[(i64, i64)],
        depth: usize,
        point: &mut Vec<i64>,
        out: &mut Vec<BTreeMap<String, i64>>,
    ) {
        if depth == ranges.len() {
            if !holds(tb, id, point) {
                out.push(vars.iter().map(|v| v.to_string()).zip(point.iter().copied()).collect());
            }
            return;
        }
        for x in ranges[depth].0..=ranges[depth].1 {
            point[depth] = x;
            walk(tb, id, vars, ranges, depth + 1, point, out);
        }
    }
    walk(tb, id, vars, ranges, 0, &mut point, &mut out);
    out
}

/// Identity id, variable names, and lower bound per variable.
pub type Shape = (&'static str, &'static [&'static str], &'static [Option<i64>]);

/// Catalog shape as the oracle understands it.
pub const SHAPES: &[Shape] = &[
    ("I1.1", &["n"], &[Some(0)]),
    ("I1.2", &["n"], &[Some(0)]),
    ("I1.3", &["n"], &[None]),
    ("I2.1", &["m", "n"], &[None, None]),
    ("I2.2", &["m", "n"], &[None, None]),
    ("I2.3", &["m", "n"], &[None, None]),
    ("I3", &["m", "n"], &[Some(3), Some(0)]),
    ("I4.1", &["n"], &[Some(4)]),
    ("I4.2", &["m", "n"], &[Some(5), Some(0)]),
    ("I5", &["n"], &[Some(0)]),
    ("I6.1", &["n"], &[Some(0)]),
    ("I6.2", &["n"], &[Some(0)]),
    ("I6.3a", &["n"], &[Some(2)]),
    ("I6.3b", &["n"], &[Some(2)]),
    ("I6.4", &["n"], &[Some(2)]),
    ("I7.1", &["n"], &[Some(0)]),
    ("I7.2", &["n"], &[Some(0)]),
    ("I7.3", &["n"], &[Some(0)]),
    ("I7.4", &["n"], &[Some(0)]),
    ("I7.5", &["n"], &[Some(0)]),
    ("I7.6", &["n"], &[Some(0)]),
    ("I7.7", &["n"], &[Some(1)]),
    ("I7.8", &["n"], &[Some(0)]),
    ("I7.9", &["n"], &[Some(0)]),
    ("I7.10", &["n"], &[Some(0)]),
    ("I7.11", &["n"], &[Some(0)]),
    ("N1", &["n"], &[Some(0)]),
    ("X1", &["m", "n"], &[None, None]),
];
