//! Binary floating point with a big-integer mantissa.
//!
//! A value is `mant * 2^exp` with `|mant| < 2^(prec + 1)` after rounding.
//! Every operation rounds to nearest at the larger precision of its operands.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Debug, Clone)]
pub struct BigFloat {
    mant: BigInt,
    exp: i64,
    prec: u32,
}

fn bits(x: &BigInt) -> i64 {
    x.bits() as i64
}

/// `round(x / 2^s)` for `s > 0`, ties away from zero.
fn shr_round(x: &BigInt, s: u64) -> BigInt {
    let half = BigInt::one() << (s - 1);
    if x.is_negative() {
        -((-x + half) >> s)
    } else {
        (x + half) >> s
    }
}

impl BigFloat {
    fn normalized(mant: BigInt, exp: i64, prec: u32) -> Self {
        if mant.is_zero() {
            return BigFloat { mant, exp: 0, prec };
        }
        let excess = bits(&mant) - prec as i64;
        if excess > 0 {
            BigFloat {
                mant: shr_round(&mant, excess as u64),
                exp: exp + excess,
                prec,
            }
        } else {
            BigFloat { mant, exp, prec }
        }
    }

    pub fn zero(prec: u32) -> Self {
        BigFloat {
            mant: BigInt::zero(),
            exp: 0,
            prec,
        }
    }

    pub fn from_bigint(v: &BigInt, prec: u32) -> Self {
        Self::normalized(v.clone(), 0, prec)
    }

    pub fn from_i64(v: i64, prec: u32) -> Self {
        Self::normalized(BigInt::from(v), 0, prec)
    }

    /// `num / den`, rounded.
    pub fn from_ratio(num: i64, den: i64, prec: u32) -> Self {
        Self::from_i64(num, prec).div(&Self::from_i64(den, prec))
    }

    /// `2^e` exactly.
    pub fn pow2(e: i64, prec: u32) -> Self {
        BigFloat {
            mant: BigInt::one(),
            exp: e,
            prec,
        }
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn with_precision(&self, prec: u32) -> Self {
        Self::normalized(self.mant.clone(), self.exp, prec)
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn signum(&self) -> i32 {
        match self.mant.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn neg(&self) -> Self {
        BigFloat {
            mant: -&self.mant,
            ..self.clone()
        }
    }

    pub fn abs(&self) -> Self {
        BigFloat {
            mant: self.mant.abs(),
            ..self.clone()
        }
    }

    /// Position of the leading bit: `2^(msb-1) <= |x| < 2^msb`.
    fn msb(&self) -> i64 {
        self.exp + bits(&self.mant)
    }

    /// `floor(log2 |x|)`, `None` for zero.
    pub fn log2_floor(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.msb() - 1)
    }

    /// Approximate `log2 |x|`; `-inf` for zero.
    pub fn log2_approx(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        let b = bits(&self.mant);
        let keep = b.min(60);
        let top = (self.mant.abs() >> (b - keep) as u64).to_f64().unwrap_or(1.0);
        top.log2() + (self.exp + b - keep) as f64
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let prec = self.prec.max(rhs.prec);
        if self.is_zero() {
            return rhs.with_precision(prec);
        }
        if rhs.is_zero() {
            return self.with_precision(prec);
        }
        let (hi, lo) = if self.msb() >= rhs.msb() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        // `lo` sits entirely below the rounding bit of `hi`.
        if hi.msb() - lo.msb() > prec as i64 + 2 {
            return hi.with_precision(prec);
        }
        let e = hi.exp.min(lo.exp);
        let a = &hi.mant << (hi.exp - e) as u64;
        let b = &lo.mant << (lo.exp - e) as u64;
        Self::normalized(a + b, e, prec)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let prec = self.prec.max(rhs.prec);
        Self::normalized(&self.mant * &rhs.mant, self.exp + rhs.exp, prec)
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        Self::normalized(&self.mant * k, self.exp, self.prec)
    }

    /// Exact division by a power of two.
    pub fn mul_pow2(&self, e: i64) -> Self {
        BigFloat {
            exp: if self.is_zero() { 0 } else { self.exp + e },
            ..self.clone()
        }
    }

    /// # Panics
    /// On division by zero.
    pub fn div(&self, rhs: &Self) -> Self {
        assert!(!rhs.is_zero(), "BigFloat division by zero");
        let prec = self.prec.max(rhs.prec);
        if self.is_zero() {
            return Self::zero(prec);
        }
        let shift = (prec as i64 + 2 + bits(&rhs.mant) - bits(&self.mant)).max(0);
        let q = (&self.mant << shift as u64) / &rhs.mant;
        Self::normalized(q, self.exp - rhs.exp - shift, prec)
    }

    /// # Panics
    /// On negative input.
    pub fn sqrt(&self) -> Self {
        assert!(!self.is_negative(), "BigFloat sqrt of a negative value");
        if self.is_zero() {
            return self.clone();
        }
        let mut shift = (2 * (self.prec as i64 + 2) - bits(&self.mant)).max(0);
        if (self.exp - shift).rem_euclid(2) != 0 {
            shift += 1;
        }
        let r = (&self.mant << shift as u64).sqrt();
        Self::normalized(r, (self.exp - shift) / 2, self.prec)
    }

    /// Real cube root, odd in its argument.
    pub fn cbrt(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut shift = (3 * (self.prec as i64 + 2) - bits(&self.mant)).max(0);
        shift += (self.exp - shift).rem_euclid(3);
        let r = (&self.mant << shift as u64).cbrt();
        Self::normalized(r, (self.exp - shift).div_euclid(3), self.prec)
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn cmp_value(&self, rhs: &Self) -> Ordering {
        self.sub(rhs).signum().cmp(&0)
    }

    /// Nearest integer, ties away from zero.
    pub fn round(&self) -> BigInt {
        if self.exp >= 0 {
            &self.mant << self.exp as u64
        } else {
            shr_round(&self.mant, (-self.exp) as u64)
        }
    }

    /// `floor(|x| * 10^digits)` with the sign of `x`, for decimal rendering.
    fn scaled_decimal(&self, digits: u32) -> BigInt {
        let scaled = self.mant.abs() * BigInt::from(10u32).pow(digits);
        let v = if self.exp >= 0 {
            scaled << self.exp as u64
        } else {
            scaled >> (-self.exp) as u64
        };
        if self.is_negative() {
            -v
        } else {
            v
        }
    }

    /// Fixed-point decimal string with `digits` fractional digits (truncated).
    pub fn to_decimal(&self, digits: u32) -> String {
        let v = self.scaled_decimal(digits);
        let neg = v.is_negative();
        let s = v.abs().to_string();
        let d = digits as usize;
        let s = if s.len() <= d {
            format!("{}{}", "0".repeat(d + 1 - s.len()), s)
        } else {
            s
        };
        let (int, frac) = s.split_at(s.len() - d);
        let sign = if neg { "-" } else { "" };
        if d == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let b = bits(&self.mant);
        let keep = b.min(60);
        let top = (&self.mant >> (b - keep) as u64).to_f64().unwrap_or(0.0);
        top * 2f64.powf((self.exp + b - keep) as f64)
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(30) as u32;
        f.write_str(&self.to_decimal(digits))
    }
}
