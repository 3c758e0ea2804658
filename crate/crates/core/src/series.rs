//! Rational generating functions with quaternion numerators.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::quat::Quaternion;
use crate::{Error, Result};

/// `numerator(x) / denominator(x)`, coefficients in ascending powers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSeries {
    pub numerator: Vec<Quaternion>,
    pub denominator: Vec<BigInt>,
}

impl RationalSeries {
    /// Integer numerator embedded as scalar quaternions.
    pub fn scalar(numerator: &[i64], denominator: &[i64]) -> Self {
        RationalSeries {
            numerator: numerator.iter().map(|&c| Quaternion::scalar(c.into())).collect(),
            denominator: denominator.iter().map(|&c| c.into()).collect(),
        }
    }

    pub fn expand(&self, count: usize) -> Result<Vec<Quaternion>> {
        expand(self, count)
    }
}

/// First `count` coefficients of the power series.
///
/// Runs `c[n] = (num[n] - sum_{k>=1} den[k] c[n-k]) / den[0]`, which stays
/// integral because `den[0]` is required to be `1` or `-1`.
pub fn expand(series: &RationalSeries, count: usize) -> Result<Vec<Quaternion>> {
    let den = &series.denominator;
    let lead = den.first().ok_or(Error::EmptyDenominator)?;
    if !lead.abs().is_one() {
        return Err(Error::UnsupportedDenominator(lead.to_string()));
    }
    let mut out: Vec<Quaternion> = Vec::with_capacity(count);
    for n in 0..count {
        let mut c = series.numerator.get(n).cloned().unwrap_or_default();
        for (k, d) in den.iter().enumerate().skip(1).take(n) {
            if !d.is_zero() {
                c = &c - &out[n - k].scale(d);
            }
        }
        if lead.is_negative() {
            c = -c;
        }
        out.push(c);
    }
    Ok(out)
}

/// Product of two integer polynomials in ascending powers.
pub fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesName {
    /// `x / (1 - x - x^2 - x^3)`, the `T` series.
    F,
    /// `(3 - 2x - x^2) / (1 - x - x^2 - x^3)`, the `K` series.
    H,
    /// The quaternion series of `Q[n]`.
    G,
    /// The series of `N(Q[n])`.
    NormT,
}

impl SeriesName {
    pub const ALL: [SeriesName; 4] = [Self::F, Self::H, Self::G, Self::NormT];

    pub fn name(self) -> &'static str {
        match self {
            Self::F => "f",
            Self::H => "h",
            Self::G => "G",
            Self::NormT => "normT",
        }
    }
}

impl fmt::Display for SeriesName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeriesName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "f" => Self::F,
            "h" => Self::H,
            "G" | "g" => Self::G,
            "normT" | "normt" | "norm" => Self::NormT,
            _ => {
                return Err(Error::Unknown {
                    what: "series",
                    name: s.to_string(),
                })
            }
        })
    }
}

const TRIBONACCI_DEN: [i64; 4] = [1, -1, -1, -1];

/// The two cubic factors of the norm-series denominator.
pub const NORM_DEN_FACTORS: ([i64; 4], [i64; 4]) = ([1, -3, -1, -1], [1, 1, 1, -1]);

/// `NORM_DEN_FACTORS.0 * NORM_DEN_FACTORS.1`, expanded.
pub const NORM_DEN: [i64; 7] = [1, -2, -3, -6, 1, 0, 1];

/// `2 (3 + 5x + 4x^2 - 2x^3 - x^4 - x^5)`.
const NORM_NUM: [i64; 6] = [6, 10, 8, -4, -2, -2];

pub fn builtin_series(name: SeriesName) -> RationalSeries {
    match name {
        SeriesName::F => RationalSeries::scalar(&[0, 1], &TRIBONACCI_DEN),
        SeriesName::H => RationalSeries::scalar(&[3, -2, -1], &TRIBONACCI_DEN),
        // x + i + j (1 + x + x^2) + k (2 + 2x + x^2)
        SeriesName::G => RationalSeries {
            numerator: vec![
                Quaternion::new(0, 1, 1, 2),
                Quaternion::new(1, 0, 1, 2),
                Quaternion::new(0, 0, 1, 1),
            ],
            denominator: TRIBONACCI_DEN.iter().map(|&c| c.into()).collect(),
        },
        SeriesName::NormT => RationalSeries::scalar(&NORM_NUM, &NORM_DEN),
    }
}
