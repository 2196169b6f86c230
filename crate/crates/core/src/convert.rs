//! Exact conversion between halfspace and generator representations, both
//! directions through the double description cone engine.
//!
//! `h_to_v` homogenizes the polyhedron to a cone at level t = 1; generators
//! at positive level are vertices, level-zero generators are recession rays,
//! and the cone's lineality is the polyhedron's lineality. `v_to_h` runs the
//! same engine on the cone of valid inequalities (a, β) with a·x ≤ β: its
//! lineality basis yields the affine-hull equalities and its extreme rays
//! the facets.

use crate::dd::DdCone;
use crate::hrep::{HRep, LinCon};
use crate::linalg::rref;
use crate::matrix::RMatrix;
use crate::rational::Rational;
use crate::vector::RVector;
use crate::vrep::VRep;

/// Canonical basis of the span of `vecs`: primitive RREF rows.
fn canonical_basis(dim: usize, vecs: &[RVector]) -> (Vec<RVector>, Vec<usize>) {
    if vecs.is_empty() {
        return (Vec::new(), Vec::new());
    }
    let m = RMatrix::from_rows(dim, vecs).expect("uniform lengths");
    let (red, pivots) = rref(&m);
    let rows = pivots
        .iter()
        .enumerate()
        .map(|(i, _)| red.row_vec(i).primitive())
        .collect();
    (rows, pivots)
}

/// Canonical representative modulo the span of the RREF basis: zero in every
/// pivot coordinate.
fn reduce_mod(v: &RVector, basis: &[RVector], pivots: &[usize]) -> RVector {
    let mut out = v.clone();
    for (b, &p) in basis.iter().zip(pivots) {
        if out[p].is_zero() {
            continue;
        }
        let c = -&(&out[p] / &b[p]);
        out = out.add_scaled(&c, b);
    }
    out
}

/// Minimal generator description of the same point set: extreme points,
/// extreme rays modulo lineality, and a canonical basis of the lineality
/// space. The points list is empty iff the polyhedron is empty.
pub fn h_to_v(h: &HRep) -> VRep {
    let d = h.dim();
    let n = d + 1;
    let mut cone = DdCone::full(n);
    cone.add_halfspace(&RVector::unit(n, d));
    for eq in h.eqs() {
        let mut row: Vec<Rational> = eq.coef.iter().cloned().collect();
        row.push(-&eq.rhs);
        cone.add_equality(&RVector::new(row));
    }
    for iq in h.ineqs() {
        let mut row: Vec<Rational> = iq.coef.iter().map(|a| -a).collect();
        row.push(iq.rhs.clone());
        cone.add_halfspace(&RVector::new(row));
    }

    let line_vecs: Vec<RVector> = cone
        .lineality()
        .iter()
        .map(|l| {
            debug_assert!(l[d].is_zero(), "lineality stays at level zero");
            RVector::new(l.iter().take(d).cloned().collect())
        })
        .collect();
    let (lines, pivots) = canonical_basis(d, &line_vecs);

    let mut points = Vec::new();
    let mut rays = Vec::new();
    for g in cone.ray_vectors() {
        let level = g[d].clone();
        let x = RVector::new(g.iter().take(d).cloned().collect());
        if level.is_zero() {
            let r = reduce_mod(&x, &lines, &pivots).primitive();
            debug_assert!(!r.is_zero(), "extreme ray inside the lineality space");
            rays.push(r);
        } else {
            let scale = level.recip().expect("positive level");
            points.push(reduce_mod(&x.scale(&scale), &lines, &pivots));
        }
    }
    if points.is_empty() {
        return VRep::empty(d);
    }
    points.sort();
    points.dedup();
    rays.sort();
    rays.dedup();
    VRep::new(d, points, rays, lines).expect("generators constructed at dimension d")
}

/// An irredundant halfspace description of the same point set: a canonical
/// affine-hull equality basis plus one inequality per facet.
pub fn v_to_h(v: &VRep) -> HRep {
    let d = v.dim();
    if v.is_empty() {
        return HRep::empty(d);
    }
    let n = d + 1;
    let mut cone = DdCone::full(n);
    for p in v.points() {
        let mut row: Vec<Rational> = p.iter().map(|a| -a).collect();
        row.push(Rational::one());
        cone.add_halfspace(&RVector::new(row));
    }
    for r in v.rays() {
        let mut row: Vec<Rational> = r.iter().map(|a| -a).collect();
        row.push(Rational::zero());
        cone.add_halfspace(&RVector::new(row));
    }
    for l in v.lines() {
        let mut row: Vec<Rational> = l.iter().cloned().collect();
        row.push(Rational::zero());
        cone.add_equality(&RVector::new(row));
    }

    let lin_vecs: Vec<RVector> = cone.lineality().to_vec();
    let (lin_basis, pivots) = canonical_basis(n, &lin_vecs);
    let mut eqs = Vec::new();
    for b in &lin_basis {
        let coef = RVector::new(b.iter().take(d).cloned().collect());
        debug_assert!(!coef.is_zero(), "valid-cone lineality has nonzero normal");
        eqs.push(LinCon::new(coef, b[d].clone()));
    }

    let mut ineqs = Vec::new();
    for g in cone.ray_vectors() {
        let reduced = reduce_mod(&g, &lin_basis, &pivots).primitive();
        let coef = RVector::new(reduced.iter().take(d).cloned().collect());
        if coef.is_zero() {
            // The trivial valid inequality 0 ≤ β; not a facet.
            debug_assert!(!reduced[d].is_negative());
            continue;
        }
        ineqs.push(LinCon::new(coef, reduced[d].clone()));
    }
    ineqs.sort_by(|a, b| a.lex_cmp(b));
    ineqs.dedup();
    HRep::new(d, ineqs, eqs).expect("constraints constructed at dimension d")
}
