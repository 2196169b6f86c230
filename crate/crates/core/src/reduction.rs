//! The affine-graph LP reduction pipeline.
//!
//! A coupling system Bx + Cy = b with nonsingular BᵀB normalizes to the
//! graph form x = C̄y + b̄ through the Gram pseudo-inverse. When the coupling
//! is redundant for both polyhedra, minimizing αᵀx over X is equivalent to
//! minimizing the reduced objective (αᵀC̄)y over Y and retrieving x through
//! the graph; this module computes the normalization, runs all three
//! formulations, and verifies the equivalence exactly.

use crate::error::Error;
use crate::hrep::{HRep, LinCon};
use crate::linalg::{gram_solve, rank};
use crate::lp::{self, LpOutcome, LpStatus, Sense};
use crate::maps::{image, AffineMap};
use crate::matrix::RMatrix;
use crate::polyhedron::{poly_equal, Polyhedron};
use crate::rational::Rational;
use crate::vector::RVector;

/// The coupling system Bx + Cy = b together with its normalized graph form
/// x = C̄y + b̄, where C̄ = -(BᵀB)⁻¹BᵀC and b̄ = (BᵀB)⁻¹Bᵀb.
#[derive(Clone, Debug)]
pub struct AffineGraph {
    x_coef: RMatrix,
    y_coef: RMatrix,
    rhs: RVector,
    x_from_y: RMatrix,
    x_offset: RVector,
    consistent: bool,
}

impl AffineGraph {
    pub fn x_dim(&self) -> usize {
        self.x_coef.cols()
    }

    pub fn y_dim(&self) -> usize {
        self.y_coef.cols()
    }

    pub fn x_coef(&self) -> &RMatrix {
        &self.x_coef
    }

    pub fn y_coef(&self) -> &RMatrix {
        &self.y_coef
    }

    pub fn rhs(&self) -> &RVector {
        &self.rhs
    }

    /// The normalized coefficient C̄.
    pub fn x_from_y(&self) -> &RMatrix {
        &self.x_from_y
    }

    /// The normalized offset b̄.
    pub fn x_offset(&self) -> &RVector {
        &self.x_offset
    }

    /// False when some row of [B C | b] lies outside the column space of B,
    /// in which case the coupling admits no x for some (or all) y and the
    /// normalized form over-approximates the coupling.
    pub fn is_consistent(&self) -> bool {
        self.consistent
    }

    /// x = C̄y + b̄.
    pub fn retrieve(&self, y: &RVector) -> Result<RVector, Error> {
        Ok(self.x_from_y.mat_vec(y)?.add(&self.x_offset))
    }

    /// The normalized graph as an affine map y ↦ x.
    pub fn as_affine_map(&self) -> AffineMap {
        AffineMap::new(self.x_from_y.clone(), self.x_offset.clone())
            .expect("offset length fixed at construction")
    }

    /// Whether (x, y) satisfies the original coupling Bx + Cy = b exactly.
    pub fn couples(&self, x: &RVector, y: &RVector) -> Result<bool, Error> {
        let lhs = self.x_coef.mat_vec(x)?.add(&self.y_coef.mat_vec(y)?);
        Ok(lhs == self.rhs)
    }
}

/// Builds the normalized graph from the raw coupling. Fails with
/// `GramSingular` when BᵀB is singular; consistency of the normalization
/// with the raw system is checked and recorded on the result.
pub fn normalize_graph(
    x_coef: RMatrix,
    y_coef: RMatrix,
    rhs: RVector,
) -> Result<AffineGraph, Error> {
    if y_coef.rows() != x_coef.rows() {
        return Err(Error::dims(x_coef.rows(), y_coef.rows()));
    }
    if rhs.len() != x_coef.rows() {
        return Err(Error::dims(x_coef.rows(), rhs.len()));
    }
    let x_from_y = gram_solve(&x_coef, &y_coef)?.neg();
    let rhs_col = RMatrix::from_rows(rhs.len(), std::slice::from_ref(&rhs))?.transpose();
    let x_offset = gram_solve(&x_coef, &rhs_col)?.col_vec(0);
    let residual_c = x_coef.mat_mul(&x_from_y)?.add(&y_coef)?;
    let residual_b = x_coef.mat_vec(&x_offset)?.sub(&rhs);
    let consistent = residual_c.is_zero() && residual_b.is_zero();
    Ok(AffineGraph {
        x_coef,
        y_coef,
        rhs,
        x_from_y,
        x_offset,
        consistent,
    })
}

/// A target polyhedron, an auxiliary polyhedron, the coupling graph between
/// them, and the objective over the target space.
#[derive(Clone, Debug)]
pub struct ReductionInstance {
    pub target: Option<Polyhedron>,
    pub auxiliary: Polyhedron,
    pub graph: AffineGraph,
    pub objective: RVector,
}

impl ReductionInstance {
    pub fn new(
        target: Option<Polyhedron>,
        auxiliary: Polyhedron,
        graph: AffineGraph,
        objective: RVector,
    ) -> Result<Self, Error> {
        if let Some(t) = &target {
            if t.dim() != graph.x_dim() {
                return Err(Error::dims(graph.x_dim(), t.dim()));
            }
        }
        if auxiliary.dim() != graph.y_dim() {
            return Err(Error::dims(graph.y_dim(), auxiliary.dim()));
        }
        if objective.len() != graph.x_dim() {
            return Err(Error::dims(graph.x_dim(), objective.len()));
        }
        Ok(ReductionInstance {
            target,
            auxiliary,
            graph,
            objective,
        })
    }
}

/// Outcome of the two-step solve: either a solved pair with its exact value,
/// or the solver status of the reduced problem passed through.
#[derive(Clone, Debug)]
pub enum TwoStepOutcome {
    Solved {
        x: RVector,
        y: RVector,
        value: Rational,
    },
    Infeasible,
    Unbounded {
        ray: RVector,
    },
}

impl TwoStepOutcome {
    pub fn status(&self) -> LpStatus {
        match self {
            TwoStepOutcome::Solved { .. } => LpStatus::Optimal,
            TwoStepOutcome::Infeasible => LpStatus::Infeasible,
            TwoStepOutcome::Unbounded { .. } => LpStatus::Unbounded,
        }
    }

    pub fn value(&self) -> Option<&Rational> {
        match self {
            TwoStepOutcome::Solved { value, .. } => Some(value),
            _ => None,
        }
    }
}

/// Minimizes the reduced objective (αᵀC̄)y over the auxiliary polyhedron,
/// then retrieves x = C̄y* + b̄. The constant αᵀb̄ is excluded from the
/// solver objective and folded back into the reported value.
pub fn two_step_solve(
    auxiliary: &Polyhedron,
    graph: &AffineGraph,
    objective: &RVector,
) -> Result<TwoStepOutcome, Error> {
    if objective.len() != graph.x_dim() {
        return Err(Error::dims(graph.x_dim(), objective.len()));
    }
    if auxiliary.dim() != graph.y_dim() {
        return Err(Error::dims(graph.y_dim(), auxiliary.dim()));
    }
    let reduced = graph.x_from_y.transpose().mat_vec(objective)?;
    let out = lp::optimize(auxiliary.hrep(), &reduced, Sense::Minimize)?;
    match out.status {
        LpStatus::Infeasible => Ok(TwoStepOutcome::Infeasible),
        LpStatus::Unbounded => Ok(TwoStepOutcome::Unbounded {
            ray: out.ray.expect("unbounded certificate"),
        }),
        LpStatus::Optimal => {
            let y = out.point.expect("optimal point");
            let x = graph.retrieve(&y)?;
            let value = objective.dot(&x);
            debug_assert_eq!(
                value,
                &out.value.expect("optimal value") + &objective.dot(&graph.x_offset)
            );
            Ok(TwoStepOutcome::Solved { x, y, value })
        }
    }
}

/// The three formulations side by side, with exact agreement checks.
#[derive(Clone, Debug)]
pub struct EquivalenceReport {
    /// Minimizing the objective directly over the target.
    pub direct: LpOutcome,
    /// Minimizing over the coupled product space (target block first).
    pub product: LpOutcome,
    /// The two-step solve through the auxiliary polyhedron.
    pub reduced: TwoStepOutcome,
    /// All three produced optimal values and the values are equal.
    pub values_agree: bool,
    pub retrieved_x: Option<RVector>,
    /// The retrieved point lies in the target and attains the direct
    /// optimum.
    pub retrieved_x_optimal: bool,
}

impl EquivalenceReport {
    pub fn all_agree(&self) -> bool {
        self.values_agree && self.retrieved_x_optimal
    }
}

/// The coupled product system {(x, y) : x ∈ X, y ∈ Y, Bx + Cy = b}.
fn product_system(target: &HRep, auxiliary: &HRep, graph: &AffineGraph) -> Result<HRep, Error> {
    let (p, q) = (graph.x_dim(), graph.y_dim());
    let dim = p + q;
    let embed_left = |c: &LinCon| {
        let mut coef: Vec<Rational> = c.coef.iter().cloned().collect();
        coef.resize(dim, Rational::zero());
        LinCon::new(RVector::new(coef), c.rhs.clone())
    };
    let embed_right = |c: &LinCon| {
        let mut coef = vec![Rational::zero(); p];
        coef.extend(c.coef.iter().cloned());
        LinCon::new(RVector::new(coef), c.rhs.clone())
    };
    let mut ineqs: Vec<LinCon> = target.ineqs().iter().map(embed_left).collect();
    ineqs.extend(auxiliary.ineqs().iter().map(embed_right));
    let mut eqs: Vec<LinCon> = target.eqs().iter().map(embed_left).collect();
    eqs.extend(auxiliary.eqs().iter().map(embed_right));
    for i in 0..graph.x_coef.rows() {
        let mut coef = Vec::with_capacity(dim);
        coef.extend(graph.x_coef.row_slice(i).iter().cloned());
        coef.extend(graph.y_coef.row_slice(i).iter().cloned());
        eqs.push(LinCon::new(RVector::new(coef), graph.rhs[i].clone()));
    }
    HRep::new(dim, ineqs, eqs)
}

/// Solves the direct, product, and reduced formulations independently and
/// reports whether they agree. Status mismatches are reported, not raised.
pub fn verify_equivalence(inst: &ReductionInstance) -> Result<EquivalenceReport, Error> {
    let target = inst.target.as_ref().ok_or_else(|| {
        Error::InvalidInput("equivalence verification needs the target polyhedron".into())
    })?;
    let direct = lp::optimize(target.hrep(), &inst.objective, Sense::Minimize)?;

    let product_h = product_system(target.hrep(), inst.auxiliary.hrep(), &inst.graph)?;
    let mut product_obj: Vec<Rational> = inst.objective.iter().cloned().collect();
    product_obj.resize(product_h.dim(), Rational::zero());
    let product = lp::optimize(&product_h, &RVector::new(product_obj), Sense::Minimize)?;

    let reduced = two_step_solve(&inst.auxiliary, &inst.graph, &inst.objective)?;

    let values_agree = match (&direct.value, &product.value, reduced.value()) {
        (Some(a), Some(b), Some(c)) => a == b && b == c,
        _ => false,
    };
    let retrieved_x = match &reduced {
        TwoStepOutcome::Solved { x, .. } => Some(x.clone()),
        _ => None,
    };
    let retrieved_x_optimal = match (&retrieved_x, &direct.value) {
        (Some(x), Some(v)) => target.contains(x)? && &inst.objective.dot(x) == v,
        _ => false,
    };
    Ok(EquivalenceReport {
        direct,
        product,
        reduced,
        values_agree,
        retrieved_x,
        retrieved_x_optimal,
    })
}

/// The two-sided coupling condition: every generator point of the target has
/// a preimage fiber meeting the auxiliary polyhedron, and every generator
/// point of the auxiliary polyhedron maps into the target. Under this
/// condition the coupling restricted to the pair loses no points on either
/// side.
pub fn check_graph_redundancy(
    target: &Polyhedron,
    auxiliary: &Polyhedron,
    graph: &AffineGraph,
) -> Result<bool, Error> {
    if target.dim() != graph.x_dim() {
        return Err(Error::dims(graph.x_dim(), target.dim()));
    }
    if auxiliary.dim() != graph.y_dim() {
        return Err(Error::dims(graph.y_dim(), auxiliary.dim()));
    }
    let aux_h = auxiliary.hrep();
    for x in target.vrep().points() {
        // Fiber {y ∈ Y : C̄y = x - b̄}.
        let wanted = x.sub(&graph.x_offset);
        let mut eqs = aux_h.eqs().to_vec();
        for i in 0..graph.x_from_y.rows() {
            eqs.push(LinCon::new(graph.x_from_y.row_vec(i), wanted[i].clone()));
        }
        let fiber = HRep::new(graph.y_dim(), aux_h.ineqs().to_vec(), eqs)?;
        if lp::feasible_point(&fiber).is_none() {
            return Ok(false);
        }
    }
    for y in auxiliary.vrep().points() {
        if !target.contains(&graph.retrieve(y)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether the normalized graph is a one-to-one correspondence between the
/// two polyhedra: the coupling must be redundant for both, the map y ↦ C̄y
/// must be injective on the affine hull of the auxiliary polyhedron, and its
/// image must equal the target.
pub fn is_bijective_on(
    target: &Polyhedron,
    auxiliary: &Polyhedron,
    graph: &AffineGraph,
) -> Result<bool, Error> {
    if !check_graph_redundancy(target, auxiliary, graph)? {
        return Ok(false);
    }
    let dirs = auxiliary.vrep().directions();
    if !dirs.is_empty() {
        let d = RMatrix::from_rows(graph.y_dim(), &dirs)?;
        let mapped = graph.x_from_y.mat_mul(&d.transpose())?;
        if rank(&mapped) != rank(&d) {
            return Ok(false);
        }
    }
    let img = image(auxiliary, &graph.as_affine_map())?;
    poly_equal(&img, target)
}
