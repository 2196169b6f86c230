use crate::error::Error;
use crate::hrep::{HRep, LinCon};
use crate::lp;
use crate::rational::Rational;
use crate::vector::{check_len, RVector};

/// A polyhedron described by generators: the set is
/// conv(points) + cone(rays) + span(lines), empty iff `points` is empty.
/// Lines are first-class because non-pointed polyhedra (slabs, affine
/// subspaces) cannot be written with rays alone.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VRep {
    dim: usize,
    points: Vec<RVector>,
    rays: Vec<RVector>,
    lines: Vec<RVector>,
}

impl VRep {
    pub fn new(
        dim: usize,
        points: Vec<RVector>,
        rays: Vec<RVector>,
        lines: Vec<RVector>,
    ) -> Result<Self, Error> {
        for g in points.iter().chain(&rays).chain(&lines) {
            check_len(g, dim)?;
        }
        if rays.iter().chain(&lines).any(RVector::is_zero) {
            return Err(Error::InvalidInput("zero ray or line generator".into()));
        }
        Ok(VRep {
            dim,
            points,
            rays,
            lines,
        })
    }

    pub fn from_points(dim: usize, points: Vec<RVector>) -> Result<Self, Error> {
        VRep::new(dim, points, Vec::new(), Vec::new())
    }

    pub fn empty(dim: usize) -> Self {
        VRep {
            dim,
            points: Vec::new(),
            rays: Vec::new(),
            lines: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[RVector] {
        &self.points
    }

    pub fn rays(&self) -> &[RVector] {
        &self.rays
    }

    pub fn lines(&self) -> &[RVector] {
        &self.lines
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn num_generators(&self) -> usize {
        self.points.len() + self.rays.len() + self.lines.len()
    }

    /// Direction vectors spanning the affine hull relative to the first
    /// point: differences of points, plus rays and lines.
    pub(crate) fn directions(&self) -> Vec<RVector> {
        let mut dirs = Vec::new();
        if let Some(base) = self.points.first() {
            for p in &self.points[1..] {
                dirs.push(p.sub(base));
            }
        }
        dirs.extend(self.rays.iter().cloned());
        dirs.extend(self.lines.iter().cloned());
        dirs
    }

    /// Exact membership, decided by LP feasibility of the multiplier system
    /// λ ≥ 0, Σλ = 1, μ ≥ 0, ν free with Σλp + Σμr + Σνl = x.
    pub fn contains(&self, x: &RVector) -> Result<bool, Error> {
        check_len(x, self.dim)?;
        if self.points.is_empty() {
            return Ok(false);
        }
        let (np, nr, nl) = (self.points.len(), self.rays.len(), self.lines.len());
        let nvars = np + nr + nl;
        let mut eqs = Vec::with_capacity(self.dim + 1);
        for coord in 0..self.dim {
            let mut coef = Vec::with_capacity(nvars);
            for p in &self.points {
                coef.push(p[coord].clone());
            }
            for r in &self.rays {
                coef.push(r[coord].clone());
            }
            for l in &self.lines {
                coef.push(l[coord].clone());
            }
            eqs.push(LinCon::new(RVector::new(coef), x[coord].clone()));
        }
        // Convexity row: multipliers of the points sum to one.
        let mut conv = vec![Rational::zero(); nvars];
        for c in conv.iter_mut().take(np) {
            *c = Rational::one();
        }
        eqs.push(LinCon::new(RVector::new(conv), Rational::one()));

        let mut ineqs = Vec::with_capacity(np + nr);
        for k in 0..np + nr {
            let mut coef = vec![Rational::zero(); nvars];
            coef[k] = Rational::from_int(-1);
            ineqs.push(LinCon::new(RVector::new(coef), Rational::zero()));
        }
        let system = HRep::new(nvars, ineqs, eqs)?;
        Ok(lp::feasible_point(&system).is_some())
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
    fn segment_contains_midpoint() {
        let v = fixtures::x_segment_vrep();
        let mid = RVector::new(vec![r("10"), r("25/2"), r("15/2")]);
        assert!(v.contains(&mid).unwrap());
    }

    #[test]
    fn segment_excludes_unrelated_point() {
        let v = fixtures::x_segment_vrep();
        let outside = RVector::new(vec![r("45/2"), r("-50"), r("100")]);
        assert!(!v.contains(&outside).unwrap());
    }

    #[test]
    fn single_point_contains_itself() {
        let p = RVector::from_ints(&[3, -1]);
        let v = VRep::from_points(2, vec![p.clone()]).unwrap();
        assert!(v.contains(&p).unwrap());
        assert!(!v.contains(&RVector::from_ints(&[3, 0])).unwrap());
    }

    #[test]
    fn lines_extend_membership() {
        // A vertical line through the origin in R^2.
        let v = VRep::new(
            2,
            vec![RVector::from_ints(&[0, 0])],
            vec![],
            vec![RVector::from_ints(&[0, 1])],
        )
        .unwrap();
        assert!(v.contains(&RVector::from_ints(&[0, -7])).unwrap());
        assert!(!v.contains(&RVector::from_ints(&[1, 0])).unwrap());
    }

    #[test]
    fn zero_generators_rejected() {
        assert!(VRep::new(2, vec![], vec![RVector::zeros(2)], vec![]).is_err());
    }

    #[test]
    fn empty_vrep_contains_nothing() {
        let v = VRep::empty(2);
        assert!(!v.contains(&RVector::zeros(2)).unwrap());
    }
}
