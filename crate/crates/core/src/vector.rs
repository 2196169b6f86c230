use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::rational::Rational;

/// A dense vector of exact rationals.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RVector(Vec<Rational>);

impl RVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        RVector(entries)
    }

    pub fn zeros(len: usize) -> Self {
        RVector(vec![Rational::zero(); len])
    }

    /// Standard basis vector e_i in the given dimension.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.0[i] = Rational::one();
        v
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        RVector(entries.iter().map(|&n| Rational::from_int(n)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Rational> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    /// Exact inner product. Lengths must match; this is an internal
    /// invariant, so it panics rather than returning an error.
    pub fn dot(&self, other: &RVector) -> Rational {
        assert_eq!(self.len(), other.len(), "dot of mismatched lengths");
        let mut acc = Rational::zero();
        for (a, b) in self.0.iter().zip(&other.0) {
            acc += &(a * b);
        }
        acc
    }

    pub fn add(&self, other: &RVector) -> RVector {
        assert_eq!(self.len(), other.len());
        RVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &RVector) -> RVector {
        assert_eq!(self.len(), other.len());
        RVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> RVector {
        RVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, c: &Rational) -> RVector {
        RVector(self.0.iter().map(|a| a * c).collect())
    }

    /// self + c * other, the workhorse of every elimination loop.
    pub fn add_scaled(&self, c: &Rational, other: &RVector) -> RVector {
        assert_eq!(self.len(), other.len());
        RVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + &(c * b))
                .collect(),
        )
    }

    /// Scales by the unique positive rational that makes every entry an
    /// integer with overall content 1. Preserves direction; the zero vector
    /// is returned unchanged.
    pub fn primitive(&self) -> RVector {
        match primitive_factor(self.as_slice()) {
            Some(f) => self.scale(&f),
            None => self.clone(),
        }
    }

    /// Primitive form with the first nonzero entry positive; the canonical
    /// representative of a line (where both signs describe the same set).
    pub fn primitive_signless(&self) -> RVector {
        let p = self.primitive();
        match p.0.iter().find(|e| !e.is_zero()) {
            Some(e) if e.is_negative() => p.neg(),
            _ => p,
        }
    }
}

/// The positive factor turning `entries` into a primitive integer vector,
/// or `None` when all entries are zero.
pub(crate) fn primitive_factor(entries: &[Rational]) -> Option<Rational> {
    let mut denom_lcm = BigInt::one();
    let mut numer_gcd = BigInt::zero();
    for e in entries {
        if e.is_zero() {
            continue;
        }
        denom_lcm = denom_lcm.lcm(e.denom());
        numer_gcd = numer_gcd.gcd(&e.numer().abs());
    }
    if numer_gcd.is_zero() {
        return None;
    }
    Some(Rational::new(denom_lcm, numer_gcd).expect("nonzero gcd"))
}

impl Index<usize> for RVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl fmt::Debug for RVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for RVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromIterator<Rational> for RVector {
    fn from_iter<T: IntoIterator<Item = Rational>>(iter: T) -> Self {
        RVector(iter.into_iter().collect())
    }
}

pub(crate) fn check_len(v: &RVector, expected: usize) -> Result<(), Error> {
    if v.len() != expected {
        return Err(Error::dims(expected, v.len()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn dot_and_scaled_ops() {
        let a = RVector::from_ints(&[4, 5, 3]);
        let b = RVector::from_ints(&[2, 0, -1]);
        assert_eq!(a.dot(&b), r("5"));
        assert_eq!(a.add_scaled(&r("-2"), &b), RVector::from_ints(&[0, 5, 5]));
    }

    #[test]
    fn primitive_scaling() {
        let v = RVector::new(vec![r("-2/3"), r("4/3"), r("0")]);
        assert_eq!(v.primitive(), RVector::from_ints(&[-1, 2, 0]));
        assert_eq!(v.primitive_signless(), RVector::from_ints(&[1, -2, 0]));
        assert!(RVector::zeros(3).primitive().is_zero());
    }

    #[test]
    fn lexicographic_order() {
        let a = RVector::from_ints(&[1, 2]);
        let b = RVector::from_ints(&[1, 3]);
        assert!(a < b);
    }
}
