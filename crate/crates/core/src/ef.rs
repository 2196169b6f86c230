//! Checkers for the competing notions of "extended formulation":
//! projection equality (the classical definition, and its biconditional
//! phrasing) versus equality with the image under a linear map. The two do
//! not coincide in general; these operations decide each notion exactly,
//! produce verifiable witnesses for failures, synthesize candidate linear
//! maps, and report irredundant representation sizes.

use crate::error::Error;
use crate::hrep::HRep;
use crate::linalg::solve_general;
use crate::maps::{image, project_coords, AffineMap, CoordinateSplit};
use crate::matrix::RMatrix;
use crate::polyhedron::{poly_equal, Polyhedron};
use crate::rational::Rational;
use crate::redundancy::remove_redundancy;
use crate::vector::RVector;

/// How an equality check between two point sets resolved.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EfDetail {
    /// The projection equals the target.
    ProjEqual,
    /// A point of the projection lies outside the target.
    ProjPointNotInTarget,
    /// A point of the target has no lift into the extension.
    TargetPointNoLift,
    /// The image equals the target.
    ImageEqual,
    /// The image and the target differ; the witness lies in exactly one.
    ImageNotEqual,
}

/// Outcome of an extended-formulation check. When the check fails, `witness`
/// is a point lying in exactly one of the two compared sets, and it has been
/// re-verified by the membership operations before being returned.
#[derive(Clone, Debug)]
pub struct EfVerdict {
    pub holds: bool,
    pub witness: Option<RVector>,
    pub detail: EfDetail,
}

/// Irredundant representation sizes of an extension/target pair. These are
/// sizes of the given representations after redundancy removal, not minimum
/// sizes over all possible extensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SizeReport {
    pub ext_inequalities: usize,
    pub ext_equalities: usize,
    pub target_inequalities: usize,
    pub target_equalities: usize,
    /// Comparison under the convention that an equality counts as two
    /// inequalities.
    pub ext_ge_target: bool,
}

impl SizeReport {
    pub fn ext_weighted(&self) -> usize {
        self.ext_inequalities + 2 * self.ext_equalities
    }

    pub fn target_weighted(&self) -> usize {
        self.target_inequalities + 2 * self.target_equalities
    }
}

/// A point of `a` that is not in `b`, or `None` when a ⊆ b. Searches points
/// first, then walks along a recession direction of `a` that `b` lacks,
/// doubling the step until the walk leaves `b`.
fn escape_witness(a: &Polyhedron, b: &Polyhedron) -> Result<Option<RVector>, Error> {
    let av = a.vrep();
    for p in av.points() {
        if !b.hrep().contains(p)? {
            return Ok(Some(p.clone()));
        }
    }
    let Some(base) = av.points().first() else {
        return Ok(None); // a is empty
    };
    let mut escaping = Vec::new();
    for r in av.rays() {
        escaping.push(r.clone());
    }
    for l in av.lines() {
        escaping.push(l.clone());
        escaping.push(l.neg());
    }
    for dir in escaping {
        if b.hrep().recession_contains(&dir)? {
            continue;
        }
        let mut step = Rational::one();
        for _ in 0..256 {
            let candidate = base.add_scaled(&step, &dir);
            if !b.hrep().contains(&candidate)? {
                return Ok(Some(candidate));
            }
            step = &step * &Rational::from_int(2);
        }
        unreachable!("a missing recession direction must eventually escape");
    }
    Ok(None)
}

/// Deterministic witness search: first a generator of `left` outside
/// `right`, then a generator of `right` outside `left`, then the same two
/// scans along mismatched recession directions. Returns the witness and
/// whether it lies on the left side.
fn symmetric_difference_witness(
    left: &Polyhedron,
    right: &Polyhedron,
) -> Result<(RVector, bool), Error> {
    for p in left.vrep().points() {
        if !right.hrep().contains(p)? {
            return Ok((p.clone(), true));
        }
    }
    for p in right.vrep().points() {
        if !left.hrep().contains(p)? {
            return Ok((p.clone(), false));
        }
    }
    if let Some(w) = escape_witness(left, right)? {
        return Ok((w, true));
    }
    if let Some(w) = escape_witness(right, left)? {
        return Ok((w, false));
    }
    unreachable!("sets declared unequal must have a separating generator")
}

fn verify_witness(
    witness: &RVector,
    inside: &Polyhedron,
    outside: &Polyhedron,
) -> Result<(), Error> {
    if inside.contains(witness)? && !outside.contains(witness)? {
        Ok(())
    } else {
        Err(Error::WitnessVerification)
    }
}

fn projection_verdict(
    ext: &HRep,
    target: &Polyhedron,
    split: &CoordinateSplit,
) -> Result<EfVerdict, Error> {
    if split.keep().len() != target.dim() {
        return Err(Error::dims(target.dim(), split.keep().len()));
    }
    let proj = Polyhedron::from_h(project_coords(ext, split)?);
    if poly_equal(&proj, target)? {
        return Ok(EfVerdict {
            holds: true,
            witness: None,
            detail: EfDetail::ProjEqual,
        });
    }
    let (witness, in_proj) = symmetric_difference_witness(&proj, target)?;
    let detail = if in_proj {
        verify_witness(&witness, &proj, target)?;
        EfDetail::ProjPointNotInTarget
    } else {
        verify_witness(&witness, target, &proj)?;
        EfDetail::TargetPointNoLift
    };
    Ok(EfVerdict {
        holds: false,
        witness: Some(witness),
        detail,
    })
}

/// The classical notion: the projection of the extension onto the kept
/// block must equal the target.
pub fn check_ef_standard(
    ext: &HRep,
    target: &Polyhedron,
    split: &CoordinateSplit,
) -> Result<EfVerdict, Error> {
    projection_verdict(ext, target, split)
}

/// The biconditional phrasing: x is in the target iff some lift of x lies
/// in the extension. As a set statement this is exactly projection
/// equality, so the decision procedure is shared with
/// [`check_ef_standard`]; it exists as a named operation so reports can
/// state both verdicts explicitly.
pub fn check_ef_iff(
    ext: &HRep,
    target: &Polyhedron,
    split: &CoordinateSplit,
) -> Result<EfVerdict, Error> {
    projection_verdict(ext, target, split)
}

/// The image notion: the image of the extension under the given map must
/// equal the target. The map must be linear unless `allow_affine` is set.
pub fn check_ef_map(
    ext: &Polyhedron,
    target: &Polyhedron,
    map: &AffineMap,
    allow_affine: bool,
) -> Result<EfVerdict, Error> {
    if !map.is_linear() && !allow_affine {
        return Err(Error::AffineOffsetDisallowed);
    }
    if map.in_dim() != ext.dim() {
        return Err(Error::dims(ext.dim(), map.in_dim()));
    }
    if map.out_dim() != target.dim() {
        return Err(Error::dims(target.dim(), map.out_dim()));
    }
    let img = image(ext, map)?;
    if poly_equal(&img, target)? {
        return Ok(EfVerdict {
            holds: true,
            witness: None,
            detail: EfDetail::ImageEqual,
        });
    }
    let (witness, in_img) = symmetric_difference_witness(&img, target)?;
    if in_img {
        verify_witness(&witness, &img, target)?;
    } else {
        verify_witness(&witness, target, &img)?;
    }
    Ok(EfVerdict {
        holds: false,
        witness: Some(witness),
        detail: EfDetail::ImageNotEqual,
    })
}

/// Hard cap on the assignment enumeration in [`synthesize_linear_map`].
pub const SYNTHESIS_ENUMERATION_BOUND: usize = 10_000;

/// Odometer over mixed radices; yields assignments in lexicographic order.
struct Odometer {
    digits: Vec<usize>,
    radices: Vec<usize>,
    done: bool,
}

impl Odometer {
    fn new(radices: Vec<usize>) -> Self {
        let done = radices.contains(&0);
        Odometer {
            digits: vec![0; radices.len()],
            radices,
            done,
        }
    }

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let current = self.digits.clone();
        let mut i = 0;
        loop {
            if i == self.digits.len() {
                self.done = true;
                break;
            }
            self.digits[i] += 1;
            if self.digits[i] < self.radices[i] {
                break;
            }
            self.digits[i] = 0;
            i += 1;
        }
        Some(current)
    }
}

/// Searches for a linear map M with image(ext, M) = target by enumerating
/// assignments of target vertices to extension points (and of target rays,
/// or zero, to extension rays), solving the resulting linear system exactly,
/// and verifying every candidate with [`check_ef_map`] before returning it.
/// Extension lines are constrained to land in the target's lineality space
/// (zero when the target has no lines). Returns `None` when the enumeration
/// is exhausted without a verified map.
pub fn synthesize_linear_map(
    ext: &Polyhedron,
    target: &Polyhedron,
) -> Result<Option<AffineMap>, Error> {
    let ev = ext.vrep().clone();
    let tv = target.vrep().clone();
    let (ed, td) = (ext.dim(), target.dim());

    if ev.is_empty() {
        let candidate = AffineMap::linear(RMatrix::zeros(td, ed));
        let verdict = check_ef_map(ext, target, &candidate, false)?;
        return Ok(verdict.holds.then_some(candidate));
    }
    if tv.is_empty() {
        return Ok(None); // a nonempty set never maps onto the empty set
    }

    let np = ev.points().len();
    let nr = ev.rays().len();
    let point_radix = tv.points().len();
    let ray_radix = tv.rays().len() + 1; // extra slot: map the ray to zero
    let mut candidates: usize = 1;
    for _ in 0..np {
        candidates = candidates.saturating_mul(point_radix);
    }
    for _ in 0..nr {
        candidates = candidates.saturating_mul(ray_radix);
    }
    if candidates > SYNTHESIS_ENUMERATION_BOUND {
        return Err(Error::EnumerationBoundExceeded {
            candidates,
            bound: SYNTHESIS_ENUMERATION_BOUND,
        });
    }

    // Unknowns: the td*ed entries of M, one multiplier per assigned
    // extension ray, and one coefficient per (extension line, target line)
    // pair.
    let m_vars = td * ed;
    let mu_vars = nr;
    let gamma_vars = ev.lines().len() * tv.lines().len();
    let nvars = m_vars + mu_vars + gamma_vars;
    let m_entry = |i: usize, j: usize| i * ed + j;

    let mut radices = vec![point_radix; np];
    radices.extend(vec![ray_radix; nr]);
    let mut odo = Odometer::new(radices);
    while let Some(assignment) = odo.next() {
        let mut rows: Vec<RVector> = Vec::new();
        let mut rhs: Vec<Rational> = Vec::new();
        // M * ext_point = assigned target vertex.
        for (pi, p) in ev.points().iter().enumerate() {
            let t = &tv.points()[assignment[pi]];
            for i in 0..td {
                let mut row = vec![Rational::zero(); nvars];
                for j in 0..ed {
                    row[m_entry(i, j)] = p[j].clone();
                }
                rows.push(RVector::new(row));
                rhs.push(t[i].clone());
            }
        }
        // M * ext_ray = mu * assigned target ray (or zero).
        for (ri, r) in ev.rays().iter().enumerate() {
            let choice = assignment[np + ri];
            for i in 0..td {
                let mut row = vec![Rational::zero(); nvars];
                for j in 0..ed {
                    row[m_entry(i, j)] = r[j].clone();
                }
                if choice > 0 {
                    row[m_vars + ri] = -&tv.rays()[choice - 1][i];
                }
                rows.push(RVector::new(row));
                rhs.push(Rational::zero());
            }
        }
        // M * ext_line in span(target lines).
        for (li, l) in ev.lines().iter().enumerate() {
            for i in 0..td {
                let mut row = vec![Rational::zero(); nvars];
                for j in 0..ed {
                    row[m_entry(i, j)] = l[j].clone();
                }
                for (si, s) in tv.lines().iter().enumerate() {
                    row[m_vars + mu_vars + li * tv.lines().len() + si] = -&s[i];
                }
                rows.push(RVector::new(row));
                rhs.push(Rational::zero());
            }
        }

        let system = RMatrix::from_rows(nvars, &rows).expect("uniform rows");
        let Some(solution) = solve_general(&system, &RVector::new(rhs))? else {
            continue;
        };
        // Ray multipliers must be nonnegative for the assignment to mean a
        // conic image.
        if (0..nr).any(|ri| solution[m_vars + ri].is_negative()) {
            continue;
        }
        let mut matrix = RMatrix::zeros(td, ed);
        for i in 0..td {
            for j in 0..ed {
                *matrix.at_mut(i, j) = solution[m_entry(i, j)].clone();
            }
        }
        let candidate = AffineMap::linear(matrix);
        if check_ef_map(ext, target, &candidate, false)?.holds {
            return Ok(Some(candidate));
        }
    }
    Ok(None)
}

/// Irredundant sizes of the two given representations, plus the comparison
/// under the equality-counts-as-two convention. Representation sizes only;
/// no minimization over alternative extensions is attempted.
pub fn size_report(ext: &HRep, target: &HRep) -> SizeReport {
    let e = remove_redundancy(ext);
    let t = remove_redundancy(target);
    let report = SizeReport {
        ext_inequalities: e.ineqs().len(),
        ext_equalities: e.eqs().len(),
        target_inequalities: t.ineqs().len(),
        target_equalities: t.eqs().len(),
        ext_ge_target: false,
    };
    SizeReport {
        ext_ge_target: report.ext_weighted() >= report.target_weighted(),
        ..report
    }
}
