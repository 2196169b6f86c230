use std::fmt;
use std::sync::OnceLock;

use crate::convert::{h_to_v, v_to_h};
use crate::error::Error;
use crate::hrep::HRep;
use crate::linalg::rank;
use crate::lp;
use crate::matrix::RMatrix;
use crate::redundancy::implicit_equalities;
use crate::vector::RVector;
use crate::vrep::VRep;

/// A polyhedron carrying one or both representations. Conversions are
/// computed on demand and cached; the cache is filled at most once, so the
/// value semantics stay pure and the type stays safe to share across
/// threads.
#[derive(Clone)]
pub struct Polyhedron {
    h: OnceLock<HRep>,
    v: OnceLock<VRep>,
}

impl Polyhedron {
    pub fn from_h(h: HRep) -> Self {
        let cell = OnceLock::new();
        cell.set(h).expect("fresh cell");
        Polyhedron {
            h: cell,
            v: OnceLock::new(),
        }
    }

    pub fn from_v(v: VRep) -> Self {
        let cell = OnceLock::new();
        cell.set(v).expect("fresh cell");
        Polyhedron {
            h: OnceLock::new(),
            v: cell,
        }
    }

    /// Both representations up front. In debug builds the two are verified
    /// to describe the same point set.
    pub fn from_parts(h: HRep, v: VRep) -> Result<Self, Error> {
        if h.dim() != v.dim() {
            return Err(Error::dims(h.dim(), v.dim()));
        }
        #[cfg(debug_assertions)]
        {
            let a = Polyhedron::from_h(h.clone());
            let b = Polyhedron::from_v(v.clone());
            debug_assert!(
                poly_equal(&a, &b).expect("same dimension"),
                "H- and V-representations disagree"
            );
        }
        let hc = OnceLock::new();
        hc.set(h).expect("fresh cell");
        let vc = OnceLock::new();
        vc.set(v).expect("fresh cell");
        Ok(Polyhedron { h: hc, v: vc })
    }

    pub fn dim(&self) -> usize {
        if let Some(h) = self.h.get() {
            h.dim()
        } else {
            self.v.get().expect("at least one representation").dim()
        }
    }

    pub fn h_opt(&self) -> Option<&HRep> {
        self.h.get()
    }

    pub fn v_opt(&self) -> Option<&VRep> {
        self.v.get()
    }

    /// The halfspace representation, converting and caching if needed.
    pub fn hrep(&self) -> &HRep {
        self.h
            .get_or_init(|| v_to_h(self.v.get().expect("at least one representation")))
    }

    /// The generator representation, converting and caching if needed.
    pub fn vrep(&self) -> &VRep {
        self.v
            .get_or_init(|| h_to_v(self.h.get().expect("at least one representation")))
    }

    /// Membership through whichever representation is already available.
    pub fn contains(&self, x: &RVector) -> Result<bool, Error> {
        if let Some(h) = self.h.get() {
            h.contains(x)
        } else {
            self.v.get().expect("at least one representation").contains(x)
        }
    }

    pub fn is_empty(&self) -> bool {
        if let Some(v) = self.v.get() {
            v.is_empty()
        } else {
            lp::feasible_point(self.h.get().expect("at least one representation")).is_none()
        }
    }

    /// A polyhedron is bounded iff its minimal generator description has no
    /// rays and no lines. The empty polyhedron counts as bounded.
    pub fn is_bounded(&self) -> bool {
        let v = self.vrep();
        v.rays().is_empty() && v.lines().is_empty()
    }

    /// Dimension of the affine hull; -1 for the empty polyhedron. From a
    /// generator description this is the rank of the direction vectors; from
    /// a halfspace description it is the ambient dimension minus the rank of
    /// the (explicit plus implicit) equality system.
    pub fn dimension(&self) -> i64 {
        if let Some(v) = self.v.get() {
            if v.is_empty() {
                return -1;
            }
            let dirs = v.directions();
            return match RMatrix::from_rows(v.dim(), &dirs) {
                Ok(m) => rank(&m) as i64,
                Err(_) => unreachable!("directions share the ambient dimension"),
            };
        }
        let h = self.h.get().expect("at least one representation");
        if lp::feasible_point(h).is_none() {
            return -1;
        }
        let mut rows: Vec<RVector> = h.eqs().iter().map(|c| c.coef.clone()).collect();
        for i in implicit_equalities(h) {
            rows.push(h.ineqs()[i].coef.clone());
        }
        let eq_rank = if rows.is_empty() {
            0
        } else {
            rank(&RMatrix::from_rows(h.dim(), &rows).expect("uniform rows"))
        };
        h.dim() as i64 - eq_rank as i64
    }
}

impl fmt::Debug for Polyhedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = f.debug_struct("Polyhedron");
        if let Some(h) = self.h.get() {
            s.field("h", h);
        }
        if let Some(v) = self.v.get() {
            s.field("v", v);
        }
        s.finish()
    }
}

/// Whether every generator of `a` lies in `b`: points by membership, rays
/// and lines by recession containment.
pub(crate) fn subset_of(a: &Polyhedron, b: &Polyhedron) -> Result<bool, Error> {
    let (av, bh) = (a.vrep(), b.hrep());
    for p in av.points() {
        if !bh.contains(p)? {
            return Ok(false);
        }
    }
    for r in av.rays() {
        if !bh.recession_contains(r)? {
            return Ok(false);
        }
    }
    for l in av.lines() {
        if !bh.recession_contains(l)? || !bh.recession_contains(&l.neg())? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exact point-set equality, decided by mutual generator containment.
pub fn poly_equal(a: &Polyhedron, b: &Polyhedron) -> Result<bool, Error> {
    if a.dim() != b.dim() {
        return Err(Error::dims(a.dim(), b.dim()));
    }
    Ok(subset_of(a, b)? && subset_of(b, a)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::hrep::LinCon;

    #[test]
    fn segment_hrep_equals_segment_vrep() {
        let a = Polyhedron::from_h(fixtures::x_segment_hrep());
        let b = Polyhedron::from_v(fixtures::x_segment_vrep());
        assert!(poly_equal(&a, &b).unwrap());
    }

    #[test]
    fn segment_differs_from_full_space() {
        let a = Polyhedron::from_v(fixtures::x_segment_vrep());
        let b = Polyhedron::from_h(HRep::full_space(3));
        assert!(!poly_equal(&a, &b).unwrap());
    }

    #[test]
    fn every_polyhedron_equals_itself() {
        for p in [
            Polyhedron::from_h(fixtures::u_slab()),
            Polyhedron::from_h(HRep::full_space(2)),
            Polyhedron::from_h(HRep::empty(2)),
        ] {
            assert!(poly_equal(&p, &p).unwrap());
        }
    }

    #[test]
    fn dimension_of_fixtures() {
        assert_eq!(Polyhedron::from_v(fixtures::x_segment_vrep()).dimension(), 1);
        assert_eq!(Polyhedron::from_h(fixtures::x_segment_hrep()).dimension(), 1);
        assert_eq!(Polyhedron::from_h(fixtures::u_slab()).dimension(), 4);
    }

    #[test]
    fn slab_dimension_certified_by_affinely_independent_points() {
        // Five feasible points whose differences have rank 4: an independent
        // lower-bound certificate for the slab's dimension.
        let u = fixtures::u_slab();
        let pts = [
            RVector::from_ints(&[2, 0, 0, 0]),
            RVector::from_ints(&[3, 0, 0, 0]),
            RVector::from_ints(&[2, 1, 0, 0]),
            RVector::from_ints(&[2, 0, 1, 0]),
            RVector::from_ints(&[2, 0, 0, 1]),
        ];
        for p in &pts {
            assert!(u.contains(p).unwrap());
        }
        let dirs: Vec<RVector> = pts[1..].iter().map(|p| p.sub(&pts[0])).collect();
        assert_eq!(rank(&RMatrix::from_rows(4, &dirs).unwrap()), 4);
    }

    #[test]
    fn empty_polyhedron_has_dimension_minus_one() {
        let h = HRep::new(
            1,
            vec![LinCon::from_ints(&[1], 0), LinCon::from_ints(&[-1], -1)],
            vec![],
        )
        .unwrap();
        let p = Polyhedron::from_h(h);
        assert_eq!(p.dimension(), -1);
        assert!(p.is_empty());
        assert!(p.vrep().is_empty());
    }

    #[test]
    fn dimension_is_representation_independent() {
        let from_h = Polyhedron::from_h(fixtures::u_slab());
        let from_v = Polyhedron::from_v(from_h.vrep().clone());
        assert_eq!(from_h.dimension(), from_v.dimension());
    }

    #[test]
    fn boundedness_reporting() {
        assert!(Polyhedron::from_v(fixtures::x_segment_vrep()).is_bounded());
        assert!(!Polyhedron::from_h(fixtures::u_slab()).is_bounded());
        assert!(Polyhedron::from_h(HRep::empty(2)).is_bounded());
    }
}
