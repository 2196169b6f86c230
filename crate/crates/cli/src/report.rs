//! JSON report shapes. Field order is fixed by the struct declarations so
//! identical inputs always produce byte-identical output.

use serde::Serialize;

use exactpoly::ef::{EfDetail, EfVerdict, SizeReport};
use exactpoly::lp::{LpOutcome, LpStatus};
use exactpoly::reduction::{EquivalenceReport, ReductionInstance, TwoStepOutcome};
use exactpoly::Rational;

pub fn status_str(status: LpStatus) -> &'static str {
    match status {
        LpStatus::Optimal => "optimal",
        LpStatus::Unbounded => "unbounded",
        LpStatus::Infeasible => "infeasible",
    }
}

fn detail_str(detail: EfDetail) -> &'static str {
    match detail {
        EfDetail::ProjEqual => "proj-equal",
        EfDetail::ProjPointNotInTarget => "proj-point-not-in-target",
        EfDetail::TargetPointNoLift => "target-point-no-lift",
        EfDetail::ImageEqual => "image-equal",
        EfDetail::ImageNotEqual => "image-not-equal",
    }
}

#[derive(Serialize)]
pub struct VerdictJson {
    pub holds: bool,
    pub detail: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<Rational>>,
}

pub fn verdict(v: &EfVerdict) -> VerdictJson {
    VerdictJson {
        holds: v.holds,
        detail: detail_str(v.detail),
        witness: v.witness.as_ref().map(|w| w.as_slice().to_vec()),
    }
}

#[derive(Serialize)]
pub struct SizesJson {
    /// What these numbers are: sizes of the two given representations after
    /// redundancy removal, not minimums over all possible extensions.
    pub kind: &'static str,
    pub ext_inequalities: usize,
    pub ext_equalities: usize,
    pub target_inequalities: usize,
    pub target_equalities: usize,
    /// Weight of one equality in the scalar comparison.
    pub equality_weight: usize,
    pub ext_ge_target: bool,
}

pub fn sizes(s: &SizeReport) -> SizesJson {
    SizesJson {
        kind: "irredundant-representation-sizes",
        ext_inequalities: s.ext_inequalities,
        ext_equalities: s.ext_equalities,
        target_inequalities: s.target_inequalities,
        target_equalities: s.target_equalities,
        equality_weight: 2,
        ext_ge_target: s.ext_ge_target,
    }
}

#[derive(Serialize, Default)]
pub struct CheckEfReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub standard: Option<VerdictJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub iff: Option<VerdictJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub map: Option<VerdictJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sizes: Option<SizesJson>,
}

#[derive(Serialize)]
pub struct LpJson {
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<Vec<Rational>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ray: Option<Vec<Rational>>,
}

pub fn lp_outcome(out: &LpOutcome) -> LpJson {
    LpJson {
        status: status_str(out.status),
        point: out.point.as_ref().map(|p| p.as_slice().to_vec()),
        value: out.value.clone(),
        ray: out.ray.as_ref().map(|r| r.as_slice().to_vec()),
    }
}

#[derive(Serialize)]
pub struct TwoStepJson {
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y: Option<Vec<Rational>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<Vec<Rational>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ray: Option<Vec<Rational>>,
}

fn two_step(out: &TwoStepOutcome) -> TwoStepJson {
    match out {
        TwoStepOutcome::Solved { x, y, value } => TwoStepJson {
            status: "optimal",
            y: Some(y.as_slice().to_vec()),
            x: Some(x.as_slice().to_vec()),
            value: Some(value.clone()),
            ray: None,
        },
        TwoStepOutcome::Infeasible => TwoStepJson {
            status: "infeasible",
            y: None,
            x: None,
            value: None,
            ray: None,
        },
        TwoStepOutcome::Unbounded { ray } => TwoStepJson {
            status: "unbounded",
            y: None,
            x: None,
            value: None,
            ray: Some(ray.as_slice().to_vec()),
        },
    }
}

#[derive(Serialize)]
pub struct ReduceReport {
    pub alpha: Vec<Rational>,
    pub direct: LpJson,
    pub product: LpJson,
    pub reduced: TwoStepJson,
    pub values_agree: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub retrieved_x: Option<Vec<Rational>>,
    pub retrieved_x_optimal: bool,
    pub graph_redundant: bool,
    pub bijective: bool,
    pub graph_consistent: bool,
    /// The condition `graph_redundant` reports.
    pub redundancy_interpretation: &'static str,
}

pub fn reduce(
    inst: &ReductionInstance,
    eq: &EquivalenceReport,
    graph_redundant: bool,
    bijective: bool,
) -> ReduceReport {
    ReduceReport {
        alpha: inst.objective.as_slice().to_vec(),
        direct: lp_outcome(&eq.direct),
        product: lp_outcome(&eq.product),
        reduced: two_step(&eq.reduced),
        values_agree: eq.values_agree,
        retrieved_x: eq.retrieved_x.as_ref().map(|x| x.as_slice().to_vec()),
        retrieved_x_optimal: eq.retrieved_x_optimal,
        graph_redundant,
        bijective,
        graph_consistent: inst.graph.is_consistent(),
        redundancy_interpretation: "every target generator point has a preimage in the auxiliary \
             polyhedron through the graph, and every auxiliary generator point maps into the \
             target",
    }
}

#[derive(Serialize)]
pub struct RedundancyVerdict {
    pub index: usize,
    pub redundant: bool,
}

#[derive(Serialize)]
pub struct DimensionReport {
    pub dim: i64,
    pub ambient_dim: usize,
    pub bounded: bool,
    pub empty: bool,
}
