//! Companion-matrix evaluation and the 2x2 complex representation.
//!
//! The companion matrix
//!
//! ```text
//!     | 1 1 1 |
//! M = | 1 0 0 |      M (x[n+2], x[n+1], x[n]) = (x[n+3], x[n+2], x[n+1])
//!     | 0 1 0 |
//! ```
//!
//! has determinant 1 and inverse `M^2 - M - I`, so every power is an integer
//! matrix. The representation sends `a0 + a1 i + a2 j + a3 k` to
//! `a0 E + a1 I + a2 J + a3 K`, i.e. `[[z, -w], [conj w, conj z]]` with
//! `z = a0 + a1 i` and `w = a2 + a3 i`.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::One;

pub use crate::gaussian::GaussInt;
use crate::quat::Quaternion;
use crate::seqcore::{SequenceKind, K_SEEDS, T_SEEDS};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat3(pub [[BigInt; 3]; 3]);

impl Mat3 {
    pub fn from_i64(rows: [[i64; 3]; 3]) -> Self {
        Mat3(rows.map(|r| r.map(BigInt::from)))
    }

    pub fn identity() -> Self {
        Self::from_i64([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    }

    pub fn companion() -> Self {
        Self::from_i64([[1, 1, 1], [1, 0, 0], [0, 1, 0]])
    }

    /// `M^2 - M - I`.
    pub fn companion_inverse() -> Self {
        let m = Self::companion();
        let m2 = &m * &m;
        let mut out = m2;
        for r in 0..3 {
            for c in 0..3 {
                out.0[r][c] -= &m.0[r][c];
                if r == c {
                    out.0[r][c] -= 1;
                }
            }
        }
        out
    }

    pub fn det(&self) -> BigInt {
        let a = &self.0;
        &a[0][0] * (&a[1][1] * &a[2][2] - &a[1][2] * &a[2][1]) - &a[0][1] * (&a[1][0] * &a[2][2] - &a[1][2] * &a[2][0])
            + &a[0][2] * (&a[1][0] * &a[2][1] - &a[1][1] * &a[2][0])
    }

    pub fn apply(&self, v: &[BigInt; 3]) -> [BigInt; 3] {
        let row = |r: &[BigInt; 3]| &r[0] * &v[0] + &r[1] * &v[1] + &r[2] * &v[2];
        [row(&self.0[0]), row(&self.0[1]), row(&self.0[2])]
    }
}

impl<'a> Mul<&'a Mat3> for &'a Mat3 {
    type Output = Mat3;
    fn mul(self, rhs: &Mat3) -> Mat3 {
        let mut out = Mat3::from_i64([[0; 3]; 3]);
        for r in 0..3 {
            for c in 0..3 {
                out.0[r][c] = (0..3).map(|k| &self.0[r][k] * &rhs.0[k][c]).sum();
            }
        }
        out
    }
}

impl fmt::Display for Mat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.0.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{} {} {}", row[0], row[1], row[2])?;
        }
        Ok(())
    }
}

/// `M^n` by square-and-multiply; negative `n` uses the integer inverse.
pub fn companion_power(n: i64) -> Mat3 {
    let mut base = if n < 0 {
        Mat3::companion_inverse()
    } else {
        Mat3::companion()
    };
    let mut e = n.unsigned_abs();
    let mut acc = Mat3::identity();
    while e > 0 {
        if e & 1 == 1 {
            acc = &acc * &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

/// `T[n]` or `K[n]` in `O(log |n|)` matrix products.
pub fn fast_seq(kind: SequenceKind, n: i64) -> Result<BigInt> {
    let seeds = match kind {
        SequenceKind::T => T_SEEDS,
        SequenceKind::K => K_SEEDS,
        other => {
            return Err(Error::InvalidArgument(format!(
                "the companion path covers T and K only, not {other}"
            )))
        }
    };
    let state = [seeds[2], seeds[1], seeds[0]].map(BigInt::from);
    let [_, _, x] = companion_power(n).apply(&state);
    Ok(x)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat2C(pub [[GaussInt; 2]; 2]);

impl Mat2C {
    pub fn from_i64(rows: [[(i64, i64); 2]; 2]) -> Self {
        Mat2C(rows.map(|r| r.map(|(a, b)| GaussInt::new(a, b))))
    }

    pub fn identity() -> Self {
        Self::from_i64([[(1, 0), (0, 0)], [(0, 0), (1, 0)]])
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        let g = GaussInt::new(s.clone(), 0);
        Mat2C(self.0.clone().map(|r| r.map(|x| &x * &g)))
    }

    pub fn conj_transpose(&self) -> Self {
        let m = &self.0;
        Mat2C([[m[0][0].conj(), m[1][0].conj()], [m[0][1].conj(), m[1][1].conj()]])
    }

    pub fn neg(&self) -> Self {
        Mat2C(self.0.clone().map(|r| r.map(|x| -x)))
    }
}

impl<'a> Add<&'a Mat2C> for &'a Mat2C {
    type Output = Mat2C;
    fn add(self, rhs: &Mat2C) -> Mat2C {
        let (a, b) = (&self.0, &rhs.0);
        Mat2C([
            [&a[0][0] + &b[0][0], &a[0][1] + &b[0][1]],
            [&a[1][0] + &b[1][0], &a[1][1] + &b[1][1]],
        ])
    }
}

impl<'a> Mul<&'a Mat2C> for &'a Mat2C {
    type Output = Mat2C;
    fn mul(self, rhs: &Mat2C) -> Mat2C {
        let (a, b) = (&self.0, &rhs.0);
        let e = |r: usize, c: usize| &(&a[r][0] * &b[0][c]) + &(&a[r][1] * &b[1][c]);
        Mat2C([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }
}

impl fmt::Display for Mat2C {
    /// Row-major, one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.0;
        write!(f, "[{}, {}]\n[{}, {}]", m[0][0], m[0][1], m[1][0], m[1][1])
    }
}

pub mod basis {
    use super::Mat2C;

    pub fn e() -> Mat2C {
        Mat2C::identity()
    }

    /// `diag(i, -i)`.
    pub fn i() -> Mat2C {
        Mat2C::from_i64([[(0, 1), (0, 0)], [(0, 0), (0, -1)]])
    }

    /// `[[0, -1], [1, 0]]`.
    pub fn j() -> Mat2C {
        Mat2C::from_i64([[(0, 0), (-1, 0)], [(1, 0), (0, 0)]])
    }

    /// `[[0, -i], [-i, 0]]`, the product `I J`.
    pub fn k() -> Mat2C {
        Mat2C::from_i64([[(0, 0), (0, -1)], [(0, -1), (0, 0)]])
    }

    /// `[[0, -i], [i, 0]]`: a sign variant of the fourth basis matrix.
    /// It is not `I J` and breaks multiplicativity.
    pub fn k_sign_variant() -> Mat2C {
        Mat2C::from_i64([[(0, 0), (0, -1)], [(0, 1), (0, 0)]])
    }
}

/// `a0 E + a1 I + a2 J + a3 K`.
pub fn phi(q: &Quaternion) -> Mat2C {
    let z = GaussInt::new(q.a0.clone(), q.a1.clone());
    let w = GaussInt::new(q.a2.clone(), q.a3.clone());
    Mat2C([[z.clone(), -&w], [w.conj(), z.conj()]])
}

/// Inverse of [`phi`] on matrices of the shape `[[z, -w], [conj w, conj z]]`.
pub fn phi_inverse(m: &Mat2C) -> Result<Quaternion> {
    let [[z, mw], [wc, zc]] = &m.0;
    let w = -mw;
    if *zc != z.conj() || *wc != w.conj() {
        return Err(Error::NotInImage(format!("{m}").replace('\n', " ")));
    }
    Ok(Quaternion {
        a0: z.re.clone(),
        a1: z.im.clone(),
        a2: w.re,
        a3: w.im,
    })
}

pub fn det2(m: &Mat2C) -> GaussInt {
    let [[a, b], [c, d]] = &m.0;
    &(a * d) - &(b * c)
}

pub fn is_invertible(m: &Mat2C) -> bool {
    !det2(m).is_zero()
}

pub fn minus_identity() -> Mat2C {
    Mat2C::identity().scale(&-BigInt::one())
}

/// True when `I^2 = J^2 = K^2 = -E` and `IJ = K`, `JK = I`, `KI = J` for the
/// given fourth basis matrix.
pub fn basis_relations_hold(k: &Mat2C) -> bool {
    let (i, j) = (basis::i(), basis::j());
    let m1 = minus_identity();
    &i * &i == m1 && &j * &j == m1 && k * k == m1 && &i * &j == *k && &j * k == i && k * &i == j
}
