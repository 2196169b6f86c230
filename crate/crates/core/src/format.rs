//! JSON file formats. Rationals travel as exact strings (integers are also
//! accepted on input); unknown keys are rejected everywhere; parsed inputs
//! are validated against the desk-scale [`crate::Limits`].

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::hrep::{HRep, LinCon};
use crate::maps::AffineMap;
use crate::matrix::RMatrix;
use crate::polyhedron::Polyhedron;
use crate::rational::Rational;
use crate::reduction::{normalize_graph, ReductionInstance};
use crate::vector::RVector;
use crate::vrep::VRep;
use crate::Limits;

#[derive(Serialize, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct PolyhedronFile {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hrep: Option<HRepFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vrep: Option<VRepFile>,
}

#[derive(Serialize, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct HRepFile {
    #[serde(default)]
    pub inequalities: Vec<ConstraintFile>,
    #[serde(default)]
    pub equalities: Vec<ConstraintFile>,
}

#[derive(Serialize, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct ConstraintFile {
    pub coef: Vec<Rational>,
    pub rhs: Rational,
}

#[derive(Serialize, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct VRepFile {
    #[serde(default)]
    pub points: Vec<Vec<Rational>>,
    #[serde(default)]
    pub rays: Vec<Vec<Rational>>,
    #[serde(default)]
    pub lines: Vec<Vec<Rational>>,
}

#[derive(Serialize, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct AffineMapFile {
    pub matrix: Vec<Vec<Rational>>,
    /// Omitted offset means the zero offset, i.e. a linear map.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub offset: Option<Vec<Rational>>,
}

#[derive(Serialize, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    #[serde(rename = "B")]
    pub x_coef: Vec<Vec<Rational>>,
    #[serde(rename = "C")]
    pub y_coef: Vec<Vec<Rational>>,
    #[serde(rename = "b")]
    pub rhs: Vec<Rational>,
}

#[derive(Serialize, Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct ReductionInstanceFile {
    #[serde(rename = "X", default, skip_serializing_if = "Option::is_none")]
    pub target: Option<PolyhedronFile>,
    #[serde(rename = "Y")]
    pub auxiliary: PolyhedronFile,
    pub graph: GraphFile,
    pub alpha: Vec<Rational>,
}

/// Pretty JSON with a trailing newline; field order is fixed by the file
/// structs so output is byte-identical across runs.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("file structs always serialize");
    s.push('\n');
    s
}

fn matrix_from_rows(rows: &[Vec<Rational>], what: &str) -> Result<RMatrix, Error> {
    let cols = rows.first().map_or(0, Vec::len);
    let vecs: Vec<RVector> = rows.iter().map(|r| RVector::new(r.clone())).collect();
    RMatrix::from_rows(cols, &vecs)
        .map_err(|_| Error::Parse(format!("{what}: rows of unequal length")))
}

fn matrix_to_rows(m: &RMatrix) -> Vec<Vec<Rational>> {
    (0..m.rows()).map(|i| m.row_slice(i).to_vec()).collect()
}

impl PolyhedronFile {
    pub fn into_polyhedron(self, limits: &Limits) -> Result<Polyhedron, Error> {
        if self.dim == 0 {
            return Err(Error::Parse("ambient dimension must be positive".into()));
        }
        if self.dim > limits.max_dim {
            return Err(Error::Parse(format!(
                "ambient dimension {} exceeds the limit {}",
                self.dim, limits.max_dim
            )));
        }
        let h = self
            .hrep
            .map(|hf| {
                let count = hf.inequalities.len() + hf.equalities.len();
                if count > limits.max_constraints {
                    return Err(Error::Parse(format!(
                        "{count} constraints exceed the limit {}",
                        limits.max_constraints
                    )));
                }
                let to_con = |c: ConstraintFile| LinCon::new(RVector::new(c.coef), c.rhs);
                HRep::new(
                    self.dim,
                    hf.inequalities.into_iter().map(to_con).collect(),
                    hf.equalities.into_iter().map(to_con).collect(),
                )
            })
            .transpose()?;
        let v = self
            .vrep
            .map(|vf| {
                let count = vf.points.len() + vf.rays.len() + vf.lines.len();
                if count > limits.max_generators {
                    return Err(Error::Parse(format!(
                        "{count} generators exceed the limit {}",
                        limits.max_generators
                    )));
                }
                let vecs = |g: Vec<Vec<Rational>>| g.into_iter().map(RVector::new).collect();
                VRep::new(self.dim, vecs(vf.points), vecs(vf.rays), vecs(vf.lines))
            })
            .transpose()?;
        match (h, v) {
            (Some(h), Some(v)) => {
                let a = Polyhedron::from_h(h.clone());
                let b = Polyhedron::from_v(v.clone());
                if !crate::polyhedron::poly_equal(&a, &b)? {
                    return Err(Error::Parse(
                        "hrep and vrep describe different point sets".into(),
                    ));
                }
                Polyhedron::from_parts(h, v)
            }
            (Some(h), None) => Ok(Polyhedron::from_h(h)),
            (None, Some(v)) => Ok(Polyhedron::from_v(v)),
            (None, None) => Err(Error::Parse(
                "polyhedron file needs an \"hrep\" or a \"vrep\"".into(),
            )),
        }
    }

    /// Snapshot of whichever representations are requested.
    pub fn from_parts(dim: usize, h: Option<&HRep>, v: Option<&VRep>) -> Self {
        PolyhedronFile {
            dim,
            hrep: h.map(|h| HRepFile {
                inequalities: h
                    .ineqs()
                    .iter()
                    .map(|c| ConstraintFile {
                        coef: c.coef.as_slice().to_vec(),
                        rhs: c.rhs.clone(),
                    })
                    .collect(),
                equalities: h
                    .eqs()
                    .iter()
                    .map(|c| ConstraintFile {
                        coef: c.coef.as_slice().to_vec(),
                        rhs: c.rhs.clone(),
                    })
                    .collect(),
            }),
            vrep: v.map(|v| VRepFile {
                points: v.points().iter().map(|p| p.as_slice().to_vec()).collect(),
                rays: v.rays().iter().map(|p| p.as_slice().to_vec()).collect(),
                lines: v.lines().iter().map(|p| p.as_slice().to_vec()).collect(),
            }),
        }
    }
}

pub fn parse_polyhedron(text: &str, limits: &Limits) -> Result<Polyhedron, Error> {
    let file: PolyhedronFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    file.into_polyhedron(limits)
}

impl AffineMapFile {
    pub fn into_affine_map(self, limits: &Limits) -> Result<AffineMap, Error> {
        let matrix = matrix_from_rows(&self.matrix, "matrix")?;
        if matrix.rows() == 0 || matrix.cols() == 0 {
            return Err(Error::Parse("map must have positive dimensions".into()));
        }
        if matrix.rows() > limits.max_dim || matrix.cols() > limits.max_dim {
            return Err(Error::Parse(format!(
                "map dimensions {}x{} exceed the limit {}",
                matrix.rows(),
                matrix.cols(),
                limits.max_dim
            )));
        }
        match self.offset {
            Some(o) => AffineMap::new(matrix, RVector::new(o)),
            None => Ok(AffineMap::linear(matrix)),
        }
    }

    pub fn from_map(map: &AffineMap) -> Self {
        AffineMapFile {
            matrix: matrix_to_rows(map.matrix()),
            offset: Some(map.offset().as_slice().to_vec()),
        }
    }
}

pub fn parse_affine_map(text: &str, limits: &Limits) -> Result<AffineMap, Error> {
    let file: AffineMapFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    file.into_affine_map(limits)
}

impl ReductionInstanceFile {
    pub fn into_instance(self, limits: &Limits) -> Result<ReductionInstance, Error> {
        let target = self
            .target
            .map(|f| f.into_polyhedron(limits))
            .transpose()?;
        let auxiliary = self.auxiliary.into_polyhedron(limits)?;
        let graph = normalize_graph(
            matrix_from_rows(&self.graph.x_coef, "graph.B")?,
            matrix_from_rows(&self.graph.y_coef, "graph.C")?,
            RVector::new(self.graph.rhs),
        )?;
        ReductionInstance::new(target, auxiliary, graph, RVector::new(self.alpha))
    }

    pub fn from_instance(inst: &ReductionInstance) -> Self {
        ReductionInstanceFile {
            target: inst.target.as_ref().map(|t| {
                PolyhedronFile::from_parts(t.dim(), t.h_opt(), t.v_opt())
            }),
            auxiliary: PolyhedronFile::from_parts(
                inst.auxiliary.dim(),
                inst.auxiliary.h_opt(),
                inst.auxiliary.v_opt(),
            ),
            graph: GraphFile {
                x_coef: matrix_to_rows(inst.graph.x_coef()),
                y_coef: matrix_to_rows(inst.graph.y_coef()),
                rhs: inst.graph.rhs().as_slice().to_vec(),
            },
            alpha: inst.objective.as_slice().to_vec(),
        }
    }
}

pub fn parse_reduction_instance(text: &str, limits: &Limits) -> Result<ReductionInstance, Error> {
    let file: ReductionInstanceFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    file.into_instance(limits)
}
