//! Exact rational linear programming over halfspace representations.
//!
//! The solver is a dense two-phase primal simplex over exact rationals with
//! Bland's anti-cycling rule and canonically ordered columns, so results are
//! deterministic and termination is guaranteed. Free variables are split
//! into nonnegative pairs internally; callers never see the encoding.

use crate::error::Error;
use crate::hrep::HRep;
use crate::rational::Rational;
use crate::vector::RVector;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sense {
    Minimize,
    Maximize,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LpStatus {
    Optimal,
    Unbounded,
    Infeasible,
}

/// A linear objective over a feasible region given as an `HRep`.
#[derive(Clone, Debug)]
pub struct LinearProgram {
    pub objective: RVector,
    pub sense: Sense,
    pub feasible: HRep,
}

impl LinearProgram {
    pub fn new(objective: RVector, sense: Sense, feasible: HRep) -> Result<Self, Error> {
        if objective.len() != feasible.dim() {
            return Err(Error::dims(feasible.dim(), objective.len()));
        }
        Ok(LinearProgram {
            objective,
            sense,
            feasible,
        })
    }
}

/// Result of a solve. Exactly one of the three shapes occurs:
/// optimal (point and value present), unbounded (improving recession ray
/// present), or infeasible.
#[derive(Clone, Debug)]
pub struct LpOutcome {
    pub status: LpStatus,
    pub point: Option<RVector>,
    pub value: Option<Rational>,
    pub ray: Option<RVector>,
}

impl LpOutcome {
    fn infeasible() -> Self {
        LpOutcome {
            status: LpStatus::Infeasible,
            point: None,
            value: None,
            ray: None,
        }
    }
}

/// Solves the program exactly. Deterministic: Bland's rule over the
/// canonical column order derived from the constraint order.
pub fn solve(lp: &LinearProgram) -> LpOutcome {
    let minimize = match lp.sense {
        Sense::Minimize => lp.objective.clone(),
        Sense::Maximize => lp.objective.neg(),
    };
    let mut tab = Tableau::build(&lp.feasible);
    if !tab.phase1() {
        return LpOutcome::infeasible();
    }
    match tab.phase2(&minimize) {
        Phase2End::Optimal => {
            let point = tab.current_point();
            let raw_value = minimize.dot(&point);
            #[cfg(debug_assertions)]
            tab.verify_duals(&minimize, &raw_value);
            let value = match lp.sense {
                Sense::Minimize => raw_value,
                Sense::Maximize => -raw_value,
            };
            debug_assert!(lp.feasible.contains(&point).unwrap());
            LpOutcome {
                status: LpStatus::Optimal,
                point: Some(point),
                value: Some(value),
                ray: None,
            }
        }
        Phase2End::Unbounded { entering } => {
            let ray = tab.ray_for(entering).primitive();
            debug_assert!(lp.feasible.recession_contains(&ray).unwrap());
            debug_assert!(minimize.dot(&ray).is_negative());
            LpOutcome {
                status: LpStatus::Unbounded,
                point: None,
                value: None,
                ray: Some(ray),
            }
        }
    }
}

/// Convenience wrapper building the program in place.
pub fn optimize(h: &HRep, objective: &RVector, sense: Sense) -> Result<LpOutcome, Error> {
    Ok(solve(&LinearProgram::new(objective.clone(), sense, h.clone())?))
}

/// Some exact feasible point of `h`, or `None` when the system is empty.
/// Pure phase-1 simplex; deterministic.
pub fn feasible_point(h: &HRep) -> Option<RVector> {
    let mut tab = Tableau::build(h);
    if !tab.phase1() {
        return None;
    }
    Some(tab.current_point())
}

enum Phase2End {
    Optimal,
    Unbounded { entering: usize },
}

/// Original constraint data retained for the debug-mode dual check.
#[cfg(debug_assertions)]
struct OrigRow {
    coef: RVector,
    rhs: Rational,
    is_eq: bool,
    flipped: bool,
}

struct Tableau {
    dim: usize,
    n_struct: usize,
    ncols: usize,
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    #[cfg(debug_assertions)]
    orig: Vec<OrigRow>,
}

impl Tableau {
    /// Standard form: x = u - v with u, v ≥ 0, one slack per inequality,
    /// one artificial per row. Columns are ordered u, v, slack, artificial.
    fn build(h: &HRep) -> Tableau {
        let d = h.dim();
        let m1 = h.ineqs().len();
        let m = m1 + h.eqs().len();
        let n_struct = 2 * d + m1;
        let ncols = n_struct + m;
        let mut rows = Vec::with_capacity(m);
        let mut rhs = Vec::with_capacity(m);
        #[cfg(debug_assertions)]
        let mut orig = Vec::with_capacity(m);
        let all = h.ineqs().iter().map(|c| (c, false)).chain(h.eqs().iter().map(|c| (c, true)));
        for (idx, (con, is_eq)) in all.enumerate() {
            let flip = con.rhs.is_negative();
            let sign = if flip { Rational::from_int(-1) } else { Rational::one() };
            let mut row = vec![Rational::zero(); ncols];
            for (k, a) in con.coef.iter().enumerate() {
                row[k] = a * &sign;
                row[d + k] = -(a * &sign);
            }
            if !is_eq {
                row[2 * d + idx] = sign.clone();
            }
            row[n_struct + idx] = Rational::one();
            rows.push(row);
            rhs.push(&con.rhs * &sign);
            #[cfg(debug_assertions)]
            orig.push(OrigRow {
                coef: con.coef.clone(),
                rhs: con.rhs.clone(),
                is_eq,
                flipped: flip,
            });
        }
        let basis = (n_struct..n_struct + m).collect();
        Tableau {
            dim: d,
            n_struct,
            ncols,
            rows,
            rhs,
            basis,
            #[cfg(debug_assertions)]
            orig,
        }
    }

    fn pivot(&mut self, r: usize, j: usize) {
        let inv = self.rows[r][j].recip().expect("pivot entry nonzero");
        for e in self.rows[r].iter_mut() {
            *e *= &inv;
        }
        self.rhs[r] *= &inv;
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][j].is_zero() {
                continue;
            }
            let f = self.rows[i][j].clone();
            for k in 0..self.ncols {
                if self.rows[r][k].is_zero() {
                    continue;
                }
                let delta = &f * &self.rows[r][k];
                self.rows[i][k] -= &delta;
            }
            let delta = &f * &self.rhs[r];
            self.rhs[i] -= &delta;
        }
        self.basis[r] = j;
    }

    /// Bland's rule: enter the lowest-index improving column, leave by the
    /// minimum ratio with ties broken toward the lowest basic column index.
    fn simplex(&mut self, cost: &[Rational], allowed: usize) -> Phase2End {
        loop {
            let cb: Vec<Rational> = self.basis.iter().map(|&b| cost[b].clone()).collect();
            let mut entering = None;
            'scan: for j in 0..allowed {
                let mut rc = cost[j].clone();
                for (i, row) in self.rows.iter().enumerate() {
                    if cb[i].is_zero() || row[j].is_zero() {
                        continue;
                    }
                    rc -= &(&cb[i] * &row[j]);
                }
                if rc.is_negative() {
                    entering = Some(j);
                    break 'scan;
                }
            }
            let Some(j) = entering else {
                return Phase2End::Optimal;
            };
            let mut leave: Option<(Rational, usize, usize)> = None;
            for i in 0..self.rows.len() {
                if !self.rows[i][j].is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / &self.rows[i][j];
                let better = match &leave {
                    None => true,
                    Some((best, bcol, _)) => {
                        ratio < *best || (ratio == *best && self.basis[i] < *bcol)
                    }
                };
                if better {
                    leave = Some((ratio, self.basis[i], i));
                }
            }
            match leave {
                Some((_, _, r)) => self.pivot(r, j),
                None => return Phase2End::Unbounded { entering: j },
            }
        }
    }

    /// Minimizes the artificial sum. Returns false when the region is empty;
    /// on success all artificials are driven out of the basis and rows that
    /// turned out redundant are dropped.
    fn phase1(&mut self) -> bool {
        let mut cost = vec![Rational::zero(); self.ncols];
        for c in cost.iter_mut().skip(self.n_struct) {
            *c = Rational::one();
        }
        match self.simplex(&cost, self.ncols) {
            Phase2End::Unbounded { .. } => unreachable!("phase-1 objective is bounded below"),
            Phase2End::Optimal => {}
        }
        let value: Rational = self
            .basis
            .iter()
            .zip(&self.rhs)
            .filter(|(&b, _)| b >= self.n_struct)
            .fold(Rational::zero(), |acc, (_, v)| acc + v);
        if value.is_positive() {
            return false;
        }
        for i in (0..self.rows.len()).rev() {
            if self.basis[i] < self.n_struct {
                continue;
            }
            match (0..self.n_struct).find(|&j| !self.rows[i][j].is_zero()) {
                Some(j) => self.pivot(i, j),
                None => {
                    // Redundant constraint: zero over all structural columns.
                    debug_assert!(self.rhs[i].is_zero());
                    self.rows.remove(i);
                    self.rhs.remove(i);
                    self.basis.remove(i);
                }
            }
        }
        true
    }

    fn phase2(&mut self, minimize: &RVector) -> Phase2End {
        let mut cost = vec![Rational::zero(); self.ncols];
        for (k, c) in minimize.iter().enumerate() {
            cost[k] = c.clone();
            cost[self.dim + k] = -c;
        }
        self.simplex(&cost, self.n_struct)
    }

    fn current_point(&self) -> RVector {
        let mut vals = vec![Rational::zero(); self.n_struct];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < self.n_struct {
                vals[b] = self.rhs[i].clone();
            }
        }
        (0..self.dim)
            .map(|k| &vals[k] - &vals[self.dim + k])
            .collect()
    }

    /// The improving recession direction certified by an unbounded entering
    /// column: the entering variable grows while basics compensate.
    fn ray_for(&self, entering: usize) -> RVector {
        let mut dir = vec![Rational::zero(); self.n_struct];
        dir[entering] = Rational::one();
        for (i, &b) in self.basis.iter().enumerate() {
            if b < self.n_struct {
                dir[b] = -&self.rows[i][entering];
            }
        }
        (0..self.dim)
            .map(|k| &dir[k] - &dir[self.dim + k])
            .collect()
    }

    /// Exact optimality certificate: multipliers recovered from the
    /// artificial columns must reproduce the objective over the original
    /// rows, carry the right signs on inequality rows, and account for the
    /// optimal value. Runs on every optimal answer in debug builds.
    #[cfg(debug_assertions)]
    fn verify_duals(&self, minimize: &RVector, value: &Rational) {
        let mut cost = vec![Rational::zero(); self.ncols];
        for (k, c) in minimize.iter().enumerate() {
            cost[k] = c.clone();
            cost[self.dim + k] = -c;
        }
        let cb: Vec<Rational> = self.basis.iter().map(|&b| cost[b].clone()).collect();
        let m = self.orig.len();
        let mut y = Vec::with_capacity(m);
        for idx in 0..m {
            let col = self.n_struct + idx;
            let mut acc = Rational::zero();
            for (i, row) in self.rows.iter().enumerate() {
                acc += &(&cb[i] * &row[col]);
            }
            if self.orig[idx].flipped {
                acc = -acc;
            }
            y.push(acc);
        }
        for (mult, row) in y.iter().zip(&self.orig) {
            assert!(
                row.is_eq || !mult.is_positive(),
                "inequality multiplier must be nonpositive for a minimization"
            );
        }
        for k in 0..self.dim {
            let mut acc = Rational::zero();
            for (mult, row) in y.iter().zip(&self.orig) {
                acc += &(mult * &row.coef[k]);
            }
            assert_eq!(acc, minimize[k], "dual multipliers must reproduce the objective");
        }
        let mut acc = Rational::zero();
        for (mult, row) in y.iter().zip(&self.orig) {
            acc += &(mult * &row.rhs);
        }
        assert_eq!(&acc, value, "strong duality must hold exactly");
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::hrep::LinCon;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn minimizes_over_the_segment_fixture() {
        let out = optimize(
            &fixtures::x_segment_hrep(),
            &RVector::from_ints(&[1, 1, 1]),
            Sense::Minimize,
        )
        .unwrap();
        assert_eq!(out.status, LpStatus::Optimal);
        assert_eq!(out.point.unwrap(), RVector::from_ints(&[8, 10, 6]));
        assert_eq!(out.value.unwrap(), r("24"));
    }

    #[test]
    fn maximizes_over_the_segment_fixture() {
        let out = optimize(
            &fixtures::x_segment_hrep(),
            &RVector::from_ints(&[1, 1, 1]),
            Sense::Maximize,
        )
        .unwrap();
        assert_eq!(out.status, LpStatus::Optimal);
        assert_eq!(out.point.unwrap(), RVector::from_ints(&[12, 15, 9]));
        assert_eq!(out.value.unwrap(), r("36"));
    }

    #[test]
    fn unbounded_over_full_space_with_certificate() {
        let out = optimize(
            &HRep::full_space(3),
            &RVector::from_ints(&[1, 0, 0]),
            Sense::Minimize,
        )
        .unwrap();
        assert_eq!(out.status, LpStatus::Unbounded);
        let ray = out.ray.unwrap();
        assert!(RVector::from_ints(&[1, 0, 0]).dot(&ray).is_negative());
    }

    #[test]
    fn infeasible_interval() {
        let h = HRep::new(
            1,
            vec![LinCon::from_ints(&[1], 0), LinCon::from_ints(&[-1], -1)],
            vec![],
        )
        .unwrap();
        let out = optimize(&h, &RVector::from_ints(&[1]), Sense::Minimize).unwrap();
        assert_eq!(out.status, LpStatus::Infeasible);
        assert!(feasible_point(&h).is_none());
    }

    #[test]
    fn feasible_point_of_slab_and_segment() {
        let u = fixtures::u_slab();
        let p = feasible_point(&u).unwrap();
        assert!(u.contains(&p).unwrap());

        let h = fixtures::x_segment_hrep();
        let p = feasible_point(&h).unwrap();
        assert!(h.contains(&p).unwrap());
    }

    #[test]
    fn degenerate_cycling_instance_terminates() {
        // A classic instance on which Dantzig's rule cycles; Bland's rule
        // must terminate at value -1/20.
        let h = HRep::new(
            4,
            vec![
                LinCon::new(
                    RVector::new(vec![r("1/4"), r("-60"), r("-1/25"), r("9")]),
                    r("0"),
                ),
                LinCon::new(
                    RVector::new(vec![r("1/2"), r("-90"), r("-1/50"), r("3")]),
                    r("0"),
                ),
                LinCon::from_ints(&[0, 0, 1, 0], 1),
                LinCon::from_ints(&[-1, 0, 0, 0], 0),
                LinCon::from_ints(&[0, -1, 0, 0], 0),
                LinCon::from_ints(&[0, 0, -1, 0], 0),
                LinCon::from_ints(&[0, 0, 0, -1], 0),
            ],
            vec![],
        )
        .unwrap();
        let obj = RVector::new(vec![r("-3/4"), r("150"), r("-1/50"), r("6")]);
        let out = optimize(&h, &obj, Sense::Minimize).unwrap();
        assert_eq!(out.status, LpStatus::Optimal);
        assert_eq!(out.value.unwrap(), r("-1/20"));
    }

    #[test]
    fn equality_constraints_are_respected() {
        // min x + y on the line x + y = 5 intersected with x ≤ 2.
        let h = HRep::new(
            2,
            vec![LinCon::from_ints(&[1, 0], 2)],
            vec![LinCon::from_ints(&[1, 1], 5)],
        )
        .unwrap();
        let out = optimize(&h, &RVector::from_ints(&[1, 1]), Sense::Minimize).unwrap();
        assert_eq!(out.status, LpStatus::Optimal);
        assert_eq!(out.value.unwrap(), r("5"));
    }

    #[test]
    fn objective_length_is_checked() {
        assert!(LinearProgram::new(
            RVector::from_ints(&[1, 2]),
            Sense::Minimize,
            HRep::full_space(3)
        )
        .is_err());
    }
}
