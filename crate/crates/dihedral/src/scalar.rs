//! Arbitrary-precision rational scalars.
//!
//! Every exact computation in this crate bottoms out in [`Rat`], a thin
//! wrapper around `num_rational::BigRational`. The wrapper pins down the
//! invariants we rely on (reduced fraction, positive denominator), adds the
//! `p/q` decimal-string encoding used by the JSON interfaces, and keeps the
//! rest of the crate free of direct `num` imports.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact rational number. Always stored reduced with positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    /// p/q from machine integers. Panics on q = 0.
    pub fn new(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rat(BigRational::from_integer(n))
    }

    /// n! as an exact scalar.
    pub fn factorial(n: u32) -> Self {
        let mut acc = BigInt::one();
        for k in 2..=n as u64 {
            acc *= k;
        }
        Rat::from_bigint(acc)
    }

    /// 2^e for e possibly negative.
    pub fn pow2(e: i64) -> Self {
        let base = Rat::from_int(2);
        base.powi(e)
    }

    pub fn powi(&self, e: i64) -> Self {
        if e >= 0 {
            Rat(self.0.pow(e as i32))
        } else {
            assert!(!self.is_zero(), "zero to a negative power");
            Rat(self.0.pow(e as i32))
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        Rat(self.0.recip())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Nearest f64 value; used only by the floating-point oracles.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().expect("rational out of f64 range")
    }

    /// Decimal-string encoding: `"p"` for integers, `"p/q"` otherwise.
    pub fn encode(&self) -> String {
        if self.0.denom().is_one() {
            self.0.numer().to_string()
        } else {
            format!("{}/{}", self.0.numer(), self.0.denom())
        }
    }

    /// Inverse of [`Rat::encode`].
    pub fn decode(s: &str) -> Result<Self, String> {
        let parse_int = |t: &str| BigInt::from_str(t).map_err(|e| format!("bad integer {t:?}: {e}"));
        match s.split_once('/') {
            None => Ok(Rat::from_bigint(parse_int(s)?)),
            Some((p, q)) => {
                let den = parse_int(q)?;
                if den.sign() == Sign::NoSign {
                    return Err("zero denominator".into());
                }
                Ok(Rat(BigRational::new(parse_int(p)?, den)))
            }
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.encode())
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.encode())
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_int(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat((self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat(self.0 / rhs.0)
    }
}

impl Div<&Rat> for &Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat(&self.0 / &rhs.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, rhs: &Rat) {
        self.0 *= &rhs.0;
    }
}

impl PartialOrd<i64> for Rat {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.0.partial_cmp(&BigRational::from_integer(BigInt::from(*other)))
    }
}

impl PartialEq<i64> for Rat {
    fn eq(&self, other: &i64) -> bool {
        self.0 == BigRational::from_integer(BigInt::from(*other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_and_signed() {
        let r = Rat::new(-4, -6);
        assert_eq!(r.encode(), "2/3");
        let r = Rat::new(4, -6);
        assert_eq!(r.encode(), "-2/3");
    }

    #[test]
    fn encode_roundtrip() {
        for s in ["0", "1", "-1", "22/7", "-355/113", "123456789012345678901234567891/7"] {
            let r = Rat::decode(s).unwrap();
            assert_eq!(r.encode(), s);
        }
        assert!(Rat::decode("1/0").is_err());
        assert!(Rat::decode("x").is_err());
    }

    #[test]
    fn factorial_and_pow2() {
        assert_eq!(Rat::factorial(0), Rat::one());
        assert_eq!(Rat::factorial(5), Rat::from_int(120));
        assert_eq!(Rat::pow2(-3), Rat::new(1, 8));
    }
}
