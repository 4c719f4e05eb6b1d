use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

/// An exact rational number, always reduced with a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RationalValue(BigRational);

impl RationalValue {
    pub fn new(numer: i64, denom: i64) -> RationalValue {
        assert!(denom != 0, "zero denominator");
        RationalValue(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn integer(n: i64) -> RationalValue {
        RationalValue(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_u128_ratio(numer: u128, denom: u128) -> RationalValue {
        RationalValue(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn ratio_i128(numer: i128, denom: i128) -> RationalValue {
        assert!(denom != 0, "zero denominator");
        RationalValue(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn zero() -> RationalValue {
        RationalValue(BigRational::zero())
    }

    pub fn one() -> RationalValue {
        RationalValue(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn scaled(&self, k: i64) -> RationalValue {
        RationalValue(&self.0 * BigInt::from(k))
    }

    pub fn abs(&self) -> RationalValue {
        RationalValue(self.0.abs())
    }
}

impl std::ops::Add for RationalValue {
    type Output = RationalValue;
    fn add(self, rhs: RationalValue) -> RationalValue {
        RationalValue(self.0 + rhs.0)
    }
}

impl std::ops::Sub for RationalValue {
    type Output = RationalValue;
    fn sub(self, rhs: RationalValue) -> RationalValue {
        RationalValue(self.0 - rhs.0)
    }
}

impl std::ops::Mul for RationalValue {
    type Output = RationalValue;
    fn mul(self, rhs: RationalValue) -> RationalValue {
        RationalValue(self.0 * rhs.0)
    }
}

impl std::ops::Neg for RationalValue {
    type Output = RationalValue;
    fn neg(self) -> RationalValue {
        RationalValue(-self.0)
    }
}

impl std::iter::Sum for RationalValue {
    fn sum<I: Iterator<Item = RationalValue>>(iter: I) -> RationalValue {
        iter.fold(RationalValue::zero(), |a, b| a + b)
    }
}

impl fmt::Display for RationalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Serialize for RationalValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_with_positive_denominator() {
        let r = RationalValue::new(4, -6);
        assert_eq!(r.to_string(), "-2/3");
        assert_eq!(r.denom(), &BigInt::from(3));
        assert_eq!(RationalValue::new(6, 3).to_string(), "2");
        assert_eq!((RationalValue::new(1, 2) + RationalValue::new(1, 2)).to_string(), "1");
    }
}
