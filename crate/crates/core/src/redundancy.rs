//! LP-based redundancy analysis of halfspace representations.

use std::collections::HashSet;

use crate::error::Error;
use crate::hrep::{HRep, LinCon};
use crate::linalg::rref;
use crate::lp::{self, LpStatus, Sense};
use crate::matrix::RMatrix;
use crate::rational::Rational;
use crate::vector::RVector;

/// Whether dropping inequality `index` leaves the point set unchanged,
/// decided by maximizing its left-hand side over the relaxation.
pub fn is_redundant(h: &HRep, index: usize) -> Result<bool, Error> {
    if index >= h.ineqs().len() {
        return Err(Error::IndexOutOfRange {
            index,
            len: h.ineqs().len(),
        });
    }
    let target = &h.ineqs()[index];
    let rest: Vec<LinCon> = h
        .ineqs()
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != index)
        .map(|(_, c)| c.clone())
        .collect();
    let relaxed = HRep::new(h.dim(), rest, h.eqs().to_vec())?;
    let out = lp::optimize(&relaxed, &target.coef, Sense::Maximize)?;
    Ok(match out.status {
        LpStatus::Unbounded => false,
        LpStatus::Infeasible => true,
        LpStatus::Optimal => out.value.expect("optimal value") <= target.rhs,
    })
}

/// Indices of inequalities that hold with equality over the whole feasible
/// set (detected by exact minimization). The caller must know the system is
/// feasible.
pub(crate) fn implicit_equalities(h: &HRep) -> Vec<usize> {
    let mut out = Vec::new();
    for (i, con) in h.ineqs().iter().enumerate() {
        let res = lp::optimize(h, &con.coef, Sense::Minimize).expect("dimensions consistent");
        if res.status == LpStatus::Optimal && res.value.expect("optimal value") == con.rhs {
            out.push(i);
        }
    }
    out
}

fn primitive_dedup(ineqs: &[LinCon]) -> (Vec<LinCon>, bool) {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut infeasible_row = false;
    for c in ineqs {
        let p = c.primitive();
        if p.coef.is_zero() {
            if p.rhs.is_negative() {
                infeasible_row = true;
            }
            continue; // trivial 0 ≤ rhs row
        }
        if seen.insert(p.clone()) {
            out.push(p);
        }
    }
    (out, infeasible_row)
}

/// Drops redundant inequalities by a sequential LP scan. Keeps equalities
/// untouched; used as the pruning pass inside Fourier-Motzkin elimination.
pub(crate) fn prune_redundant(h: &HRep) -> HRep {
    let (ineqs, infeasible_row) = primitive_dedup(h.ineqs());
    if infeasible_row {
        return HRep::empty(h.dim());
    }
    let base = HRep::new(h.dim(), ineqs, h.eqs().to_vec()).expect("dimensions preserved");
    if lp::feasible_point(&base).is_none() {
        return HRep::empty(h.dim());
    }
    let mut kept: Vec<LinCon> = base.ineqs().to_vec();
    let mut i = 0;
    while i < kept.len() {
        let candidate = HRep::new(h.dim(), kept.clone(), base.eqs().to_vec()).expect("consistent");
        if is_redundant(&candidate, i).expect("index in range") {
            kept.remove(i);
        } else {
            i += 1;
        }
    }
    HRep::new(h.dim(), kept, base.eqs().to_vec()).expect("dimensions preserved")
}

/// An equivalent irredundant representation: implicit equalities promoted to
/// the equality list (reduced to a canonical RREF basis), no redundant
/// inequality left, constraints in canonical order. An infeasible input
/// yields the canonical empty description `0 = 1`.
pub fn remove_redundancy(h: &HRep) -> HRep {
    let dim = h.dim();
    let (ineqs, infeasible_row) = primitive_dedup(h.ineqs());
    if infeasible_row {
        return HRep::empty(dim);
    }
    let base = HRep::new(dim, ineqs, h.eqs().to_vec()).expect("dimensions preserved");
    if lp::feasible_point(&base).is_none() {
        return HRep::empty(dim);
    }

    let implicit: HashSet<usize> = implicit_equalities(&base).into_iter().collect();
    let mut eq_rows: Vec<LinCon> = base.eqs().to_vec();
    let mut ineq_rows = Vec::new();
    for (i, c) in base.ineqs().iter().enumerate() {
        if implicit.contains(&i) {
            eq_rows.push(c.clone());
        } else {
            ineq_rows.push(c.clone());
        }
    }

    // Canonical equality basis via RREF over [coef | rhs].
    let eqs = if eq_rows.is_empty() {
        Vec::new()
    } else {
        let rows: Vec<RVector> = eq_rows
            .iter()
            .map(|c| {
                let mut v: Vec<Rational> = c.coef.iter().cloned().collect();
                v.push(c.rhs.clone());
                RVector::new(v)
            })
            .collect();
        let m = RMatrix::from_rows(dim + 1, &rows).expect("uniform rows");
        let (red, pivots) = rref(&m);
        debug_assert!(
            !pivots.contains(&dim),
            "inconsistent equalities in a feasible system"
        );
        (0..pivots.len())
            .map(|i| {
                let row = red.row_vec(i).primitive();
                LinCon::new(
                    RVector::new(row.iter().take(dim).cloned().collect()),
                    row[dim].clone(),
                )
            })
            .collect()
    };

    let mut kept = ineq_rows;
    let mut i = 0;
    while i < kept.len() {
        let candidate = HRep::new(dim, kept.clone(), eqs.clone()).expect("consistent");
        if is_redundant(&candidate, i).expect("index in range") {
            kept.remove(i);
        } else {
            i += 1;
        }
    }
    kept.sort_by(|a, b| a.lex_cmp(b));
    HRep::new(dim, kept, eqs).expect("dimensions preserved")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::polyhedron::{poly_equal, Polyhedron};

    #[test]
    fn dominated_bound_is_redundant() {
        let h = HRep::new(
            1,
            vec![LinCon::from_ints(&[1], 1), LinCon::from_ints(&[1], 2)],
            vec![],
        )
        .unwrap();
        assert!(!is_redundant(&h, 0).unwrap());
        assert!(is_redundant(&h, 1).unwrap());
        assert!(is_redundant(&h, 5).is_err());
    }

    #[test]
    fn segment_lower_bound_on_x2_is_implied() {
        // In the bundled redundant description of the segment, 10 ≤ x2 is
        // forced by the opposing homogeneous rows plus 8 ≤ x1.
        let h = fixtures::x_segment_hrep();
        let idx = h
            .ineqs()
            .iter()
            .position(|c| c.coef == RVector::from_ints(&[0, -1, 0]))
            .expect("lower bound on x2 present");
        assert!(is_redundant(&h, idx).unwrap());
    }

    #[test]
    fn segment_reduces_to_two_equalities_two_inequalities() {
        let r = remove_redundancy(&fixtures::x_segment_hrep());
        assert_eq!(r.eqs().len(), 2);
        assert_eq!(r.ineqs().len(), 2);
        let before = Polyhedron::from_h(fixtures::x_segment_hrep());
        let after = Polyhedron::from_h(r);
        assert!(poly_equal(&before, &after).unwrap());
    }

    #[test]
    fn slab_is_already_irredundant() {
        let r = remove_redundancy(&fixtures::u_slab());
        assert_eq!(r.ineqs().len(), 2);
        assert_eq!(r.eqs().len(), 0);
    }

    #[test]
    fn duplicate_rows_are_removed() {
        let h = HRep::new(
            2,
            vec![
                LinCon::from_ints(&[1, 0], 1),
                LinCon::from_ints(&[2, 0], 2),
                LinCon::from_ints(&[0, 1], 1),
            ],
            vec![],
        )
        .unwrap();
        let r = remove_redundancy(&h);
        assert_eq!(r.ineqs().len(), 2);
    }

    #[test]
    fn infeasible_input_becomes_canonical_empty() {
        let h = HRep::new(
            1,
            vec![LinCon::from_ints(&[1], 0), LinCon::from_ints(&[-1], -1)],
            vec![],
        )
        .unwrap();
        let r = remove_redundancy(&h);
        assert!(crate::lp::feasible_point(&r).is_none());
        assert_eq!(r.num_constraints(), 1);
    }
}
