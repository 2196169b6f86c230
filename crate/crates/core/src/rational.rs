use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// An exact arbitrary-precision rational, always in canonical form:
/// the denominator is positive and coprime to the numerator, so structural
/// equality coincides with numeric equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: BigInt, denom: BigInt) -> Result<Self, Error> {
        if denom.is_zero() {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
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

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        match self.0.numer().sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn all_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

fn signed_digits(s: &str) -> bool {
    let body = s.strip_prefix(['+', '-']).unwrap_or(s);
    all_digits(body)
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `"p"`, `"p/q"` with a positive integer denominator, and the
    /// exact decimal form `"22.5"`. No whitespace, no exponents.
    fn from_str(s: &str) -> Result<Self, Error> {
        let err = || Error::ParseRational(s.to_string());
        if let Some((n, d)) = s.split_once('/') {
            if !signed_digits(n) || !all_digits(d) {
                return Err(err());
            }
            let numer: BigInt = n.parse().map_err(|_| err())?;
            let denom: BigInt = d.parse().map_err(|_| err())?;
            if denom.is_zero() {
                return Err(err());
            }
            return Ok(Rational(BigRational::new(numer, denom)));
        }
        if let Some((int_part, frac_part)) = s.split_once('.') {
            let (sign, int_digits) = match int_part.strip_prefix('-') {
                Some(rest) => (-1, rest),
                None => (1, int_part.strip_prefix('+').unwrap_or(int_part)),
            };
            if !all_digits(int_digits) || !all_digits(frac_part) {
                return Err(err());
            }
            let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
            let numer: BigInt = int_digits.parse::<BigInt>().map_err(|_| err())? * &scale
                + frac_part.parse::<BigInt>().map_err(|_| err())?;
            let numer = if sign < 0 { -numer } else { numer };
            return Ok(Rational(BigRational::new(numer, scale)));
        }
        if !signed_digits(s) {
            return Err(err());
        }
        let n: BigInt = s.parse().map_err(|_| err())?;
        Ok(Rational(BigRational::from_integer(n)))
    }
}

impl serde::Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Rational {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct V;
        impl serde::de::Visitor<'_> for V {
            type Value = Rational;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an exact rational as a string (\"5\", \"22/3\", \"22.5\") or an integer")
            }

            fn visit_str<E: serde::de::Error>(self, v: &str) -> Result<Rational, E> {
                v.parse().map_err(|_| E::custom(format!("invalid rational {v:?}")))
            }

            fn visit_i64<E: serde::de::Error>(self, v: i64) -> Result<Rational, E> {
                Ok(Rational::from_int(v))
            }

            fn visit_u64<E: serde::de::Error>(self, v: u64) -> Result<Rational, E> {
                Ok(Rational(BigRational::from_integer(BigInt::from(v))))
            }

            fn visit_f64<E: serde::de::Error>(self, v: f64) -> Result<Rational, E> {
                Err(E::custom(format!(
                    "floating-point literal {v} rejected; write an exact rational string instead"
                )))
            }
        }
        deserializer.deserialize_any(V)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                (&self).$method(rhs)
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn parses_integer_fraction_and_decimal() {
        assert_eq!(r("-5"), Rational::from_int(-5));
        assert_eq!(r("22/3"), Rational::new(22.into(), 3.into()).unwrap());
        assert_eq!(r("22.5"), r("45/2"));
        assert_eq!(r("-0.25"), r("-1/4"));
        assert_eq!(r("4/6"), r("2/3"));
    }

    #[test]
    fn rejects_malformed_text() {
        for bad in ["", "1/0", "1/-2", "1//2", "a", "1.2.3", "1e3", ".", "5/", "1 /2"] {
            assert!(bad.parse::<Rational>().is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(r("4/6").to_string(), "2/3");
        assert_eq!(r("-4/2").to_string(), "-2");
        assert_eq!(r("22.5").to_string(), "45/2");
        assert_eq!(r("0").to_string(), "0");
    }

    #[test]
    fn canonical_form_invariants() {
        let x = r("-6/4");
        assert!(x.denom().is_positive());
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
    }

    #[test]
    fn exact_roundtrip_arithmetic() {
        // (r + s) - s = r and (r * s) / s = r for nonzero s.
        let samples = ["3/7", "-22/9", "0", "5", "-1/1000000000000"];
        for a in samples {
            for b in samples {
                let (x, y) = (r(a), r(b));
                assert_eq!(&(&x + &y) - &y, x);
                if !y.is_zero() {
                    assert_eq!(&(&x * &y) / &y, x);
                }
            }
        }
    }

    #[test]
    fn serde_accepts_strings_and_integers_rejects_floats() {
        assert_eq!(serde_json::from_str::<Rational>("\"22.5\"").unwrap(), r("45/2"));
        assert_eq!(serde_json::from_str::<Rational>("7").unwrap(), r("7"));
        assert_eq!(serde_json::from_str::<Rational>("-3").unwrap(), r("-3"));
        assert!(serde_json::from_str::<Rational>("22.5").is_err());
        assert_eq!(serde_json::to_string(&r("4/6")).unwrap(), "\"2/3\"");
    }
}
