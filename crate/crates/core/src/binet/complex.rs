use std::fmt;

use super::bigfloat::BigFloat;

/// Complex number with [`BigFloat`] parts.
#[derive(Debug, Clone)]
pub struct BigComplex {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl BigComplex {
    pub fn new(re: BigFloat, im: BigFloat) -> Self {
        BigComplex { re, im }
    }

    pub fn from_real(re: BigFloat) -> Self {
        let prec = re.precision();
        BigComplex {
            re,
            im: BigFloat::zero(prec),
        }
    }

    pub fn from_i64(v: i64, prec: u32) -> Self {
        Self::from_real(BigFloat::from_i64(v, prec))
    }

    pub fn zero(prec: u32) -> Self {
        Self::from_i64(0, prec)
    }

    pub fn one(prec: u32) -> Self {
        Self::from_i64(1, prec)
    }

    pub fn precision(&self) -> u32 {
        self.re.precision().max(self.im.precision())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        BigComplex::new(self.re.add(&rhs.re), self.im.add(&rhs.im))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        BigComplex::new(self.re.sub(&rhs.re), self.im.sub(&rhs.im))
    }

    pub fn neg(&self) -> Self {
        BigComplex::new(self.re.neg(), self.im.neg())
    }

    pub fn conj(&self) -> Self {
        BigComplex::new(self.re.clone(), self.im.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        BigComplex::new(
            self.re.mul(&rhs.re).sub(&self.im.mul(&rhs.im)),
            self.re.mul(&rhs.im).add(&self.im.mul(&rhs.re)),
        )
    }

    pub fn scale(&self, s: &BigFloat) -> Self {
        BigComplex::new(self.re.mul(s), self.im.mul(s))
    }

    pub fn norm_sqr(&self) -> BigFloat {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    pub fn abs(&self) -> BigFloat {
        self.norm_sqr().sqrt()
    }

    /// # Panics
    /// On division by zero.
    pub fn div(&self, rhs: &Self) -> Self {
        let d = rhs.norm_sqr();
        let n = self.mul(&rhs.conj());
        BigComplex::new(n.re.div(&d), n.im.div(&d))
    }

    pub fn recip(&self) -> Self {
        BigComplex::one(self.precision()).div(self)
    }

    /// Integer power by binary exponentiation; negative exponents invert first.
    pub fn powi(&self, n: i64) -> Self {
        let mut base = if n < 0 { self.recip() } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = BigComplex::one(self.precision());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl fmt::Display for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(30) as u32;
        let im = self.im.to_decimal(digits);
        match im.strip_prefix('-') {
            Some(abs) => write!(f, "{} - {}i", self.re.to_decimal(digits), abs),
            None => write!(f, "{} + {}i", self.re.to_decimal(digits), im),
        }
    }
}
