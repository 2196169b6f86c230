//! Coordinate projection by Fourier-Motzkin elimination, images of
//! polyhedra under affine maps, and graph-of-map constructions.

use crate::convert::{h_to_v, v_to_h};
use crate::error::Error;
use crate::hrep::{HRep, LinCon};
use crate::matrix::RMatrix;
use crate::polyhedron::Polyhedron;
use crate::rational::Rational;
use crate::redundancy::{prune_redundant, remove_redundancy};
use crate::vector::RVector;
use crate::vrep::VRep;

/// A map x ↦ matrix·x + offset. A linear map is the special case with zero
/// offset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap {
    matrix: RMatrix,
    offset: RVector,
}

impl AffineMap {
    pub fn new(matrix: RMatrix, offset: RVector) -> Result<Self, Error> {
        if offset.len() != matrix.rows() {
            return Err(Error::dims(matrix.rows(), offset.len()));
        }
        Ok(AffineMap { matrix, offset })
    }

    pub fn linear(matrix: RMatrix) -> Self {
        let offset = RVector::zeros(matrix.rows());
        AffineMap { matrix, offset }
    }

    pub fn identity(dim: usize) -> Self {
        AffineMap::linear(RMatrix::identity(dim))
    }

    pub fn matrix(&self) -> &RMatrix {
        &self.matrix
    }

    pub fn offset(&self) -> &RVector {
        &self.offset
    }

    pub fn in_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn out_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn is_linear(&self) -> bool {
        self.offset.is_zero()
    }

    pub fn apply(&self, x: &RVector) -> Result<RVector, Error> {
        Ok(self.matrix.mat_vec(x)?.add(&self.offset))
    }

    /// The composite map x ↦ self(inner(x)).
    pub fn compose(&self, inner: &AffineMap) -> Result<AffineMap, Error> {
        let matrix = self.matrix.mat_mul(&inner.matrix)?;
        let offset = self.matrix.mat_vec(&inner.offset)?.add(&self.offset);
        AffineMap::new(matrix, offset)
    }
}

/// A partition of the coordinates of R^dim into a kept block and a dropped
/// block. `keep` is ordered: output coordinate j of a projection is input
/// coordinate `keep[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateSplit {
    dim: usize,
    keep: Vec<usize>,
    drop: Vec<usize>,
}

impl CoordinateSplit {
    pub fn new(dim: usize, keep: Vec<usize>) -> Result<Self, Error> {
        if keep.is_empty() {
            return Err(Error::InvalidInput("empty kept-coordinate list".into()));
        }
        let mut seen = vec![false; dim];
        for &k in &keep {
            if k >= dim {
                return Err(Error::IndexOutOfRange { index: k, len: dim });
            }
            if seen[k] {
                return Err(Error::InvalidInput(format!("duplicate kept coordinate {k}")));
            }
            seen[k] = true;
        }
        let drop = (0..dim).filter(|&i| !seen[i]).collect();
        Ok(CoordinateSplit { dim, keep, drop })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn keep(&self) -> &[usize] {
        &self.keep
    }

    pub fn drop(&self) -> &[usize] {
        &self.drop
    }

    /// The linear map erasing the dropped block: row j is the unit row
    /// selecting coordinate `keep[j]`.
    pub fn eraser_map(&self) -> AffineMap {
        let mut m = RMatrix::zeros(self.keep.len(), self.dim);
        for (j, &k) in self.keep.iter().enumerate() {
            *m.at_mut(j, k) = Rational::one();
        }
        AffineMap::linear(m)
    }
}

/// Eliminates one coordinate. Prefers substitution through an equality
/// containing the variable; otherwise combines opposing inequality pairs in
/// the classical way. The variable's column becomes zero everywhere.
fn eliminate_coord(h: &HRep, var: usize) -> HRep {
    let dim = h.dim();
    if let Some(pos) = h.eqs().iter().position(|e| !e.coef[var].is_zero()) {
        let pivot = h.eqs()[pos].clone();
        let pval = pivot.coef[var].clone();
        let reduce = |c: &LinCon| -> LinCon {
            if c.coef[var].is_zero() {
                return c.clone();
            }
            let f = -&(&c.coef[var] / &pval);
            LinCon::new(c.coef.add_scaled(&f, &pivot.coef), &c.rhs + &(&f * &pivot.rhs))
        };
        let ineqs = h.ineqs().iter().map(reduce).collect();
        let eqs = h
            .eqs()
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != pos)
            .map(|(_, e)| reduce(e))
            .collect();
        return HRep::new(dim, ineqs, eqs).expect("dimension preserved");
    }

    let mut kept = Vec::new();
    let mut pos_rows = Vec::new();
    let mut neg_rows = Vec::new();
    for c in h.ineqs() {
        match c.coef[var].signum() {
            0 => kept.push(c.clone()),
            1 => pos_rows.push(c.clone()),
            _ => neg_rows.push(c.clone()),
        }
    }
    for p in &pos_rows {
        for n in &neg_rows {
            // (-n_v) * p + p_v * n has a zero coefficient on var and both
            // multipliers positive.
            let a = -&n.coef[var];
            let b = p.coef[var].clone();
            let coef = p.coef.scale(&a).add_scaled(&b, &n.coef);
            let rhs = &(&a * &p.rhs) + &(&b * &n.rhs);
            kept.push(LinCon::new(coef, rhs).primitive());
        }
    }
    HRep::new(dim, kept, h.eqs().to_vec()).expect("dimension preserved")
}

/// Exact coordinate projection {x_keep : ∃ x_drop, x ∈ h}, computed by
/// Fourier-Motzkin elimination of the dropped coordinates in increasing
/// index order, with LP-based redundancy pruning after every elimination
/// step and a full redundancy removal at the end.
pub fn project_coords(h: &HRep, split: &CoordinateSplit) -> Result<HRep, Error> {
    if split.dim() != h.dim() {
        return Err(Error::dims(h.dim(), split.dim()));
    }
    let mut work = h.clone();
    for &var in split.drop() {
        work = eliminate_coord(&work, var);
        work = prune_redundant(&work);
    }
    let reduced = remove_redundancy(&work);

    let select = |c: &LinCon| -> LinCon {
        debug_assert!(
            split.drop().iter().all(|&v| c.coef[v].is_zero()),
            "eliminated coordinate survived"
        );
        LinCon::new(
            split.keep().iter().map(|&k| c.coef[k].clone()).collect(),
            c.rhs.clone(),
        )
    };
    let ineqs = reduced.ineqs().iter().map(select).collect();
    let eqs = reduced.eqs().iter().map(select).collect();
    HRep::new(split.keep().len(), ineqs, eqs)
}

/// Exact image of a polyhedron under an affine map: generators are mapped
/// (zero images of rays and lines contribute nothing and are dropped) and
/// the result is re-minimalized through a conversion round trip.
pub fn image(p: &Polyhedron, map: &AffineMap) -> Result<Polyhedron, Error> {
    if map.in_dim() != p.dim() {
        return Err(Error::dims(p.dim(), map.in_dim()));
    }
    let v = p.vrep();
    if v.is_empty() {
        return Ok(Polyhedron::from_v(VRep::empty(map.out_dim())));
    }
    let mut points = Vec::with_capacity(v.points().len());
    for pt in v.points() {
        points.push(map.apply(pt)?);
    }
    let mut rays = Vec::new();
    for r in v.rays() {
        let img = map.matrix().mat_vec(r)?;
        if !img.is_zero() {
            rays.push(img);
        }
    }
    let mut lines = Vec::new();
    for l in v.lines() {
        let img = map.matrix().mat_vec(l)?;
        if !img.is_zero() {
            lines.push(img);
        }
    }
    let raw = VRep::new(map.out_dim(), points, rays, lines)?;
    let h = v_to_h(&raw);
    let minimal = h_to_v(&h);
    Polyhedron::from_parts(h, minimal)
}

/// The graph {(x, x') : x ∈ domain, x' = map(x)} in R^{in+out}, input block
/// first. Projecting onto the output block gives the image of the domain.
pub fn graph_polyhedron(map: &AffineMap, domain: &HRep) -> Result<HRep, Error> {
    if map.in_dim() != domain.dim() {
        return Err(Error::dims(domain.dim(), map.in_dim()));
    }
    let (din, dout) = (map.in_dim(), map.out_dim());
    let dim = din + dout;
    let extend = |c: &LinCon| -> LinCon {
        let mut coef: Vec<Rational> = c.coef.iter().cloned().collect();
        coef.resize(dim, Rational::zero());
        LinCon::new(RVector::new(coef), c.rhs.clone())
    };
    let ineqs = domain.ineqs().iter().map(extend).collect();
    let mut eqs: Vec<LinCon> = domain.eqs().iter().map(extend).collect();
    for i in 0..dout {
        let mut coef = vec![Rational::zero(); dim];
        for (j, c) in coef.iter_mut().enumerate().take(din) {
            *c = -map.matrix().at(i, j);
        }
        coef[din + i] = Rational::one();
        eqs.push(LinCon::new(RVector::new(coef), map.offset()[i].clone()));
    }
    HRep::new(dim, ineqs, eqs)
}
