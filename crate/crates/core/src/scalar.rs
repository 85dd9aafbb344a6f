//! Exact rational scalar used for every coordinate in the crate.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// An arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self, Error> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(Scalar(BigRational::new(numer.into(), denom)))
    }

    pub fn from_integer(v: impl Into<BigInt>) -> Self {
        Scalar(BigRational::from_integer(v.into()))
    }

    /// `numer / 2^exp`.
    pub fn dyadic(numer: impl Into<BigInt>, exp: u32) -> Self {
        Scalar(BigRational::new(numer.into(), BigInt::one() << exp))
    }

    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn signum(&self) -> i8 {
        if self.0.is_positive() {
            1
        } else if self.0.is_negative() {
            -1
        } else {
            0
        }
    }

    pub fn abs(&self) -> Self {
        Scalar(self.0.abs())
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// Lossy conversion for display purposes only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::from_integer(v)
    }
}

impl From<i128> for Scalar {
    fn from(v: i128) -> Self {
        Scalar::from_integer(v)
    }
}

impl From<BigInt> for Scalar {
    fn from(v: BigInt) -> Self {
        Scalar::from_integer(v)
    }
}

impl From<BigRational> for Scalar {
    fn from(v: BigRational) -> Self {
        Scalar(v)
    }
}

/// Always `p/q`, even for integers, so that files never mix two spellings.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let parse_int = |t: &str| {
            BigInt::from_str(t.trim()).map_err(|_| Error::Parse(format!("invalid rational {s:?}")))
        };
        match s.split_once('/') {
            Some((n, d)) => Scalar::new(parse_int(n)?, parse_int(d)?),
            None => Ok(Scalar::from_integer(parse_int(s)?)),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar(self.0.$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "division by zero");
        Scalar(&self.0 / &rhs.0)
    }
}

impl Div<Scalar> for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        &self / &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_sign() {
        let s = Scalar::new(6, -4).unwrap();
        assert_eq!(s.to_string(), "-3/2");
        assert_eq!(s.numer(), &BigInt::from(-3));
        assert_eq!(s.denom(), &BigInt::from(2));
    }

    #[test]
    fn parse_forms() {
        assert_eq!("7".parse::<Scalar>().unwrap().to_string(), "7/1");
        assert_eq!(" -10/4 ".parse::<Scalar>().unwrap().to_string(), "-5/2");
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("1.5".parse::<Scalar>().is_err());
        assert!("".parse::<Scalar>().is_err());
    }

    #[test]
    fn exact_arithmetic() {
        let third = Scalar::new(1, 3).unwrap();
        let sum = &(&third + &third) + &third;
        assert_eq!(sum, Scalar::one());
        let d = Scalar::dyadic(3, 200);
        assert_eq!(&(&d * &Scalar::dyadic(1, 0)) / &d, Scalar::one());
        assert!(Scalar::dyadic(1, 256) > Scalar::zero());
    }
}
