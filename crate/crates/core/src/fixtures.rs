//! Bundled example instances: a segment in R^3 with a deliberately
//! redundant halfspace description, the unbounded slab whose projection
//! covers all of x-space while its linear image is exactly the segment, the
//! 3x4 map realizing that image, and the assembled reduction instance. The
//! suite exercises every operation in the crate and ships embedded in the
//! CLI, so verifications run without external files.

use crate::format::{
    AffineMapFile, PolyhedronFile, ReductionInstanceFile, to_json,
};
use crate::hrep::{HRep, LinCon};
use crate::maps::{AffineMap, CoordinateSplit};
use crate::matrix::RMatrix;
use crate::polyhedron::Polyhedron;
use crate::reduction::{normalize_graph, ReductionInstance};
use crate::vector::RVector;
use crate::vrep::VRep;

/// The segment from (8, 10, 6) to (12, 15, 9) as a generator description.
pub fn x_segment_vrep() -> VRep {
    VRep::from_points(
        3,
        vec![RVector::from_ints(&[8, 10, 6]), RVector::from_ints(&[12, 15, 9])],
    )
    .expect("literal generators")
}

/// The same segment as a redundant halfspace description: two opposing
/// homogeneous inequalities and one homogeneous equality pin the carrying
/// line, and three coordinate boxes bound it. Redundancy removal promotes
/// the implied equalities and leaves 2 + 2 constraints.
pub fn x_segment_hrep() -> HRep {
    HRep::new(
        3,
        vec![
            LinCon::from_ints(&[-5, 4, 0], 0),
            LinCon::from_ints(&[3, 0, -4], 0),
            LinCon::from_ints(&[-1, 0, 0], -8),
            LinCon::from_ints(&[1, 0, 0], 12),
            LinCon::from_ints(&[0, -1, 0], -10),
            LinCon::from_ints(&[0, 1, 0], 15),
            LinCon::from_ints(&[0, 0, -1], -6),
            LinCon::from_ints(&[0, 0, 1], 9),
        ],
        vec![LinCon::from_ints(&[0, 3, -5], 0)],
    )
    .expect("literal constraints")
}

/// The slab {(w, x) ∈ R^4 : 2 ≤ w ≤ 3} with x ∈ R^3 entirely free;
/// coordinate 0 is w. Non-pointed: its lineality space is all of x-space.
pub fn u_slab() -> HRep {
    HRep::new(
        4,
        vec![
            LinCon::from_ints(&[-1, 0, 0, 0], -2),
            LinCon::from_ints(&[1, 0, 0, 0], 3),
        ],
        vec![],
    )
    .expect("literal constraints")
}

/// The 3x4 linear map (w, x) ↦ (4w, 5w, 3w) whose image of the slab is
/// exactly the segment.
pub fn u_to_x_map() -> AffineMap {
    AffineMap::linear(RMatrix::from_int_rows(&[
        &[4, 0, 0, 0],
        &[5, 0, 0, 0],
        &[3, 0, 0, 0],
    ]))
}

/// The coordinate split of the slab's space keeping the x block.
pub fn x_split() -> CoordinateSplit {
    CoordinateSplit::new(4, vec![1, 2, 3]).expect("literal indices")
}

/// A lift of the segment with one auxiliary coordinate: w is pinned to
/// x1 / 4, so the projection onto the x block is exactly the segment.
pub fn lifted_x_segment() -> HRep {
    let base = x_segment_hrep();
    let embed = |c: &LinCon| {
        let mut coef = vec![crate::rational::Rational::zero()];
        coef.extend(c.coef.iter().cloned());
        LinCon::new(RVector::new(coef), c.rhs.clone())
    };
    let ineqs = base.ineqs().iter().map(embed).collect();
    let mut eqs: Vec<LinCon> = base.eqs().iter().map(embed).collect();
    eqs.push(LinCon::from_ints(&[-4, 1, 0, 0], 0));
    HRep::new(4, ineqs, eqs).expect("literal constraints")
}

/// The assembled reduction instance: target = the segment, auxiliary =
/// the interval [2, 3], coupling x = (4, 5, 3)ᵀ·y written as
/// I·x + (-4, -5, -3)ᵀ·y = 0, objective (1, 1, 1).
pub fn reduction_demo() -> ReductionInstance {
    let graph = normalize_graph(
        RMatrix::identity(3),
        RMatrix::from_int_rows(&[&[-4], &[-5], &[-3]]),
        RVector::zeros(3),
    )
    .expect("identity Gram");
    let auxiliary = Polyhedron::from_h(
        HRep::new(
            1,
            vec![LinCon::from_ints(&[-1], -2), LinCon::from_ints(&[1], 3)],
            vec![],
        )
        .expect("literal constraints"),
    );
    ReductionInstance::new(
        Some(Polyhedron::from_h(x_segment_hrep())),
        auxiliary,
        graph,
        RVector::from_ints(&[1, 1, 1]),
    )
    .expect("consistent dimensions")
}

/// Names understood by the CLI fixture loader, in display order.
pub const FIXTURE_NAMES: [&str; 5] = [
    "x-segment-v",
    "x-segment-h",
    "u-slab",
    "u-to-x-map",
    "reduction-demo",
];

/// Canonical JSON payload of a bundled fixture.
pub fn fixture_json(name: &str) -> Option<String> {
    let payload = match name {
        "x-segment-v" => {
            let v = x_segment_vrep();
            to_json(&PolyhedronFile::from_parts(v.dim(), None, Some(&v)))
        }
        "x-segment-h" => {
            let h = x_segment_hrep();
            to_json(&PolyhedronFile::from_parts(h.dim(), Some(&h), None))
        }
        "u-slab" => {
            let h = u_slab();
            to_json(&PolyhedronFile::from_parts(h.dim(), Some(&h), None))
        }
        "u-to-x-map" => to_json(&AffineMapFile::from_map(&u_to_x_map())),
        "reduction-demo" => to_json(&ReductionInstanceFile::from_instance(&reduction_demo())),
        _ => return None,
    };
    Some(payload)
}
