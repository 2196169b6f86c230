use std::cmp::Ordering;

use crate::error::Error;
use crate::rational::Rational;
use crate::vector::{check_len, primitive_factor, RVector};

/// One linear constraint `coef · x ≤ rhs` (or `= rhs` when stored in an
/// equality list).
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct LinCon {
    pub coef: RVector,
    pub rhs: Rational,
}

impl LinCon {
    pub fn new(coef: RVector, rhs: Rational) -> Self {
        LinCon { coef, rhs }
    }

    pub fn from_ints(coef: &[i64], rhs: i64) -> Self {
        LinCon::new(RVector::from_ints(coef), Rational::from_int(rhs))
    }

    pub fn eval(&self, x: &RVector) -> Rational {
        self.coef.dot(x)
    }

    /// Scales by the unique positive factor making all entries (including
    /// the right-hand side) integers of content 1. Valid for inequalities
    /// because the factor is positive.
    pub fn primitive(&self) -> LinCon {
        let mut all: Vec<Rational> = self.coef.iter().cloned().collect();
        all.push(self.rhs.clone());
        match primitive_factor(&all) {
            Some(f) => LinCon::new(self.coef.scale(&f), &self.rhs * &f),
            None => self.clone(),
        }
    }

    pub(crate) fn lex_cmp(&self, other: &LinCon) -> Ordering {
        self.coef
            .cmp(&other.coef)
            .then_with(|| self.rhs.cmp(&other.rhs))
    }
}

/// A polyhedron described by linear inequalities and equalities. Empty
/// constraint lists are legal and denote all of R^dim.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HRep {
    dim: usize,
    ineqs: Vec<LinCon>,
    eqs: Vec<LinCon>,
}

impl HRep {
    pub fn new(dim: usize, ineqs: Vec<LinCon>, eqs: Vec<LinCon>) -> Result<Self, Error> {
        for c in ineqs.iter().chain(&eqs) {
            check_len(&c.coef, dim)?;
        }
        Ok(HRep { dim, ineqs, eqs })
    }

    /// All of R^dim.
    pub fn full_space(dim: usize) -> Self {
        HRep {
            dim,
            ineqs: Vec::new(),
            eqs: Vec::new(),
        }
    }

    /// The canonical description of the empty set: 0 · x = 1.
    pub fn empty(dim: usize) -> Self {
        HRep {
            dim,
            ineqs: Vec::new(),
            eqs: vec![LinCon::new(RVector::zeros(dim), Rational::one())],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ineqs(&self) -> &[LinCon] {
        &self.ineqs
    }

    pub fn eqs(&self) -> &[LinCon] {
        &self.eqs
    }

    pub fn num_constraints(&self) -> usize {
        self.ineqs.len() + self.eqs.len()
    }

    /// Exact membership: every inequality and equality must hold.
    pub fn contains(&self, x: &RVector) -> Result<bool, Error> {
        check_len(x, self.dim)?;
        for c in &self.ineqs {
            if c.eval(x) > c.rhs {
                return Ok(false);
            }
        }
        for c in &self.eqs {
            if c.eval(x) != c.rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether `d` is a recession direction: moving along `d` never leaves
    /// the (assumed nonempty) polyhedron.
    pub fn recession_contains(&self, d: &RVector) -> Result<bool, Error> {
        check_len(d, self.dim)?;
        for c in &self.ineqs {
            if c.eval(d).is_positive() {
                return Ok(false);
            }
        }
        for c in &self.eqs {
            if !c.eval(d).is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn segment_hrep_membership() {
        let h = fixtures::x_segment_hrep();
        assert!(h.contains(&RVector::from_ints(&[8, 10, 6])).unwrap());
        assert!(h.contains(&RVector::from_ints(&[12, 15, 9])).unwrap());
        let outside = RVector::new(vec![r("45/2"), r("-50"), r("100")]);
        assert!(!h.contains(&outside).unwrap());
    }

    #[test]
    fn no_constraints_means_full_space() {
        let h = HRep::full_space(3);
        assert!(h.contains(&RVector::from_ints(&[1000, -1000, 0])).unwrap());
    }

    #[test]
    fn membership_checks_dimension() {
        let h = HRep::full_space(3);
        assert!(h.contains(&RVector::from_ints(&[1, 2])).is_err());
    }

    #[test]
    fn primitive_constraint_scaling() {
        let c = LinCon::new(RVector::new(vec![r("2/3"), r("-4/3")]), r("2"));
        let p = c.primitive();
        assert_eq!(p.coef, RVector::from_ints(&[1, -2]));
        assert_eq!(p.rhs, r("3"));
    }
}
