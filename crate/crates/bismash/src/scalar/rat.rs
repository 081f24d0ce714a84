//! Arbitrary-precision rationals.

use super::{QField, Scalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, RngCore};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A rational number in lowest terms.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Rat(pub BigRational);

impl Rat {
    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Rat(BigRational::new(num, den))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Whether this rational is the square of a rational.
    pub fn is_square(&self) -> bool {
        if self.0.is_negative() {
            return false;
        }
        let n = self.0.numer().sqrt();
        let d = self.0.denom().sqrt();
        &(&n * &n) == self.0.numer() && &(&d * &d) == self.0.denom()
    }

    /// The exact rational square root, when one exists.
    pub fn sqrt_exact(&self) -> Option<Rat> {
        if !self.is_square() {
            return None;
        }
        Some(Rat(BigRational::new(
            self.0.numer().sqrt(),
            self.0.denom().sqrt(),
        )))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Add for Rat {
    type Output = Rat;
    fn add(self, rhs: Rat) -> Rat {
        Rat(self.0 + rhs.0)
    }
}

impl Sub for Rat {
    type Output = Rat;
    fn sub(self, rhs: Rat) -> Rat {
        Rat(self.0 - rhs.0)
    }
}

impl Mul for Rat {
    type Output = Rat;
    fn mul(self, rhs: Rat) -> Rat {
        Rat(self.0 * rhs.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Zero for Rat {
    fn zero() -> Self {
        Rat(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Rat {
    fn one() -> Self {
        Rat(BigRational::one())
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
}

impl Scalar for Rat {
    type Field = QField;

    fn field(&self) -> Option<QField> {
        Some(QField)
    }

    fn from_ratio(num: i64, den: i64, _field: &QField) -> Option<Self> {
        if den == 0 {
            return None;
        }
        Some(Rat::ratio(num, den))
    }

    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rat(self.0.recip()))
        }
    }

    fn characteristic(_field: &QField) -> u64 {
        0
    }

    fn poly_roots(_field: &QField, coeffs: &[Self]) -> Vec<Self> {
        super::roots::rational_roots(coeffs)
    }

    fn sample(_field: &QField, rng: &mut dyn RngCore) -> Self {
        let num = rng.gen_range(-9i64..=9);
        let den = rng.gen_range(1i64..=6);
        Rat::ratio(num, den)
    }

    fn to_int_ratio(&self) -> Option<(BigInt, BigInt)> {
        Some((self.0.numer().clone(), self.0.denom().clone()))
    }

    fn from_int_ratio(num: BigInt, den: BigInt) -> Option<Self> {
        if den.is_zero() {
            None
        } else {
            Some(Rat(BigRational::new(num, den)))
        }
    }
}
