//! Randomized invariants over small integer instances. Seeds are fixed, so
//! failures reproduce exactly.

mod common;

use common::{enumerate_vertices, random_hrep, random_vrep, Rng};
use exactpoly::lp::{self, LpStatus, Sense};
use exactpoly::maps::{image, project_coords, AffineMap, CoordinateSplit};
use exactpoly::reduction::{two_step_solve, TwoStepOutcome};
use exactpoly::{
    fixtures, gram_solve, h_to_v, poly_equal, rank, remove_redundancy, solve_square, v_to_h,
    HRep, LinCon, Polyhedron, RMatrix, RVector,
};

#[test]
fn vrep_roundtrip_preserves_the_point_set() {
    let mut rng = Rng::new(0x5eed_0001);
    for case in 0..60 {
        let dim = rng.usize_in(1, 4);
        let v = random_vrep(&mut rng, dim, 6, case % 2 == 0);
        let back = h_to_v(&v_to_h(&v));
        let a = Polyhedron::from_v(v);
        let b = Polyhedron::from_v(back);
        assert!(poly_equal(&a, &b).unwrap(), "case {case}: {a:?} vs {b:?}");
    }
}

#[test]
fn remove_redundancy_preserves_the_point_set() {
    let mut rng = Rng::new(0x5eed_0002);
    for case in 0..40 {
        let dim = rng.usize_in(1, 3);
        let rows = rng.usize_in(1, 6);
        let h = random_hrep(&mut rng, dim, rows, case % 2 == 0);
        let reduced = remove_redundancy(&h);
        let a = Polyhedron::from_h(h);
        let b = Polyhedron::from_h(reduced);
        assert!(poly_equal(&a, &b).unwrap(), "case {case}: {a:?} vs {b:?}");
    }
    let fixture_pairs = [fixtures::x_segment_hrep(), fixtures::u_slab()];
    for h in fixture_pairs {
        let a = Polyhedron::from_h(h.clone());
        let b = Polyhedron::from_h(remove_redundancy(&h));
        assert!(poly_equal(&a, &b).unwrap());
    }
}

#[test]
fn hrep_and_vrep_membership_agree_on_probes() {
    let mut rng = Rng::new(0x5eed_0003);
    for case in 0..40 {
        let dim = rng.usize_in(1, 3);
        let v = random_vrep(&mut rng, dim, 5, case % 3 == 0);
        let h = v_to_h(&v);
        for _ in 0..8 {
            let probe = rng.vector_in(dim, -6, 6);
            assert_eq!(
                h.contains(&probe).unwrap(),
                v.contains(&probe).unwrap(),
                "case {case}, probe {probe:?}"
            );
        }
    }
}

#[test]
fn dimension_is_representation_independent() {
    let mut rng = Rng::new(0x5eed_0004);
    for case in 0..30 {
        let dim = rng.usize_in(1, 3);
        let rows = rng.usize_in(1, 5);
        let h = random_hrep(&mut rng, dim, rows, case % 2 == 0);
        let from_h = Polyhedron::from_h(h.clone());
        let v = h_to_v(&h);
        let from_v = Polyhedron::from_v(v);
        assert_eq!(from_h.dimension(), from_v.dimension(), "case {case}");
    }
}

#[test]
fn empty_polyhedron_invariants() {
    let h = HRep::new(
        2,
        vec![
            LinCon::from_ints(&[1, 0], 0),
            LinCon::from_ints(&[-1, 0], -1),
        ],
        vec![],
    )
    .unwrap();
    let v = h_to_v(&h);
    assert!(v.is_empty());
    assert!(v.rays().is_empty() && v.lines().is_empty());
    assert_eq!(Polyhedron::from_h(h).dimension(), -1);
}

#[test]
fn image_composition_matches_composed_map() {
    let mut rng = Rng::new(0x5eed_0005);
    for case in 0..25 {
        let d0 = rng.usize_in(1, 3);
        let d1 = rng.usize_in(1, 3);
        let d2 = rng.usize_in(1, 3);
        let p = Polyhedron::from_v(random_vrep(&mut rng, d0, 4, case % 2 == 0));
        let f = AffineMap::new(
            RMatrix::from_rows(
                d0,
                &(0..d1).map(|_| rng.vector_in(d0, -3, 3)).collect::<Vec<_>>(),
            )
            .unwrap(),
            rng.vector_in(d1, -2, 2),
        )
        .unwrap();
        let g = AffineMap::new(
            RMatrix::from_rows(
                d1,
                &(0..d2).map(|_| rng.vector_in(d1, -3, 3)).collect::<Vec<_>>(),
            )
            .unwrap(),
            rng.vector_in(d2, -2, 2),
        )
        .unwrap();
        let two_hops = image(&image(&p, &f).unwrap(), &g).unwrap();
        let one_hop = image(&p, &g.compose(&f).unwrap()).unwrap();
        assert!(poly_equal(&two_hops, &one_hop).unwrap(), "case {case}");
    }
}

#[test]
fn projection_keeps_every_point_and_lifts_every_output() {
    let mut rng = Rng::new(0x5eed_0006);
    for case in 0..25 {
        let dim = rng.usize_in(2, 4);
        let rows = rng.usize_in(1, 5);
        let h = random_hrep(&mut rng, dim, rows, true);
        let keep_size = rng.usize_in(1, dim - 1);
        let split = CoordinateSplit::new(dim, rng.coordinate_subset(dim, keep_size)).unwrap();
        let proj = project_coords(&h, &split).unwrap();

        // Forward: feasible points keep their kept block.
        if let Some(inside) = lp::feasible_point(&h) {
            let kept: RVector = split.keep().iter().map(|&k| inside[k].clone()).collect();
            assert!(proj.contains(&kept).unwrap(), "case {case} forward");
        } else {
            assert!(lp::feasible_point(&proj).is_none(), "case {case} emptiness");
        }

        // Backward: every projected vertex lifts through a feasible fiber.
        for x in h_to_v(&proj).points() {
            let mut eqs = h.eqs().to_vec();
            for (j, &k) in split.keep().iter().enumerate() {
                eqs.push(LinCon::new(RVector::unit(dim, k), x[j].clone()));
            }
            let fiber = HRep::new(dim, h.ineqs().to_vec(), eqs).unwrap();
            let lift = lp::feasible_point(&fiber);
            assert!(lift.is_some(), "case {case}: no lift for {x:?}");
            assert!(h.contains(&lift.unwrap()).unwrap());
        }
    }
}

#[test]
fn lp_matches_vertex_enumeration_on_small_boxes() {
    let mut rng = Rng::new(0x5eed_0007);
    for case in 0..25 {
        let dim = rng.usize_in(1, 3);
        let rows = rng.usize_in(0, 8usize.saturating_sub(2 * dim));
        let h = random_hrep(&mut rng, dim, rows, true);
        let objective = rng.vector_in(dim, -5, 5);
        let out = lp::optimize(&h, &objective, Sense::Minimize).unwrap();
        let vertices = enumerate_vertices(&h);
        match out.status {
            LpStatus::Infeasible => assert!(vertices.is_empty(), "case {case}"),
            LpStatus::Optimal => {
                let brute = vertices
                    .iter()
                    .map(|v| objective.dot(v))
                    .min()
                    .expect("feasible bounded system has a vertex");
                assert_eq!(out.value.unwrap(), brute, "case {case}");
            }
            LpStatus::Unbounded => panic!("case {case}: boxed system cannot be unbounded"),
        }
    }
}

#[test]
fn lp_matches_minimum_over_converted_vertices() {
    // Same oracle idea, but through the conversion path: on bounded
    // systems the optimum must equal the minimum over h_to_v's points.
    let mut rng = Rng::new(0x5eed_000a);
    for case in 0..20 {
        let rows = rng.usize_in(0, 4);
        let dim = rng.usize_in(1, 3);
        let h = random_hrep(&mut rng, dim, rows, true);
        let objective = rng.vector_in(dim, -5, 5);
        let out = lp::optimize(&h, &objective, Sense::Minimize).unwrap();
        let v = h_to_v(&h);
        match out.status {
            LpStatus::Infeasible => assert!(v.is_empty(), "case {case}"),
            LpStatus::Optimal => {
                assert!(v.rays().is_empty() && v.lines().is_empty());
                let brute = v.points().iter().map(|p| objective.dot(p)).min().unwrap();
                assert_eq!(out.value.unwrap(), brute, "case {case}");
            }
            LpStatus::Unbounded => panic!("case {case}: boxed system cannot be unbounded"),
        }
    }
}

#[test]
fn gram_solve_identity_and_solve_square_rank_criterion() {
    let mut rng = Rng::new(0x5eed_0008);
    for _ in 0..30 {
        let (m, n) = (rng.usize_in(1, 4), rng.usize_in(1, 3));
        let b = RMatrix::from_rows(
            n,
            &(0..m).map(|_| rng.vector_in(n, -4, 4)).collect::<Vec<_>>(),
        )
        .unwrap();
        match gram_solve(&b, &b) {
            Ok(x) => {
                assert_eq!(rank(&b), n);
                assert_eq!(x, RMatrix::identity(n));
            }
            Err(_) => assert!(rank(&b) < n),
        }

        let sq = RMatrix::from_rows(
            n,
            &(0..n).map(|_| rng.vector_in(n, -4, 4)).collect::<Vec<_>>(),
        )
        .unwrap();
        let rhs = rng.vector_in(n, -4, 4);
        match solve_square(&sq, &rhs).unwrap() {
            Some(x) => {
                assert_eq!(rank(&sq), n);
                assert_eq!(sq.mat_vec(&x).unwrap(), rhs);
            }
            None => assert!(rank(&sq) < n),
        }
    }
}

#[test]
fn retrieval_always_satisfies_the_coupling() {
    let mut rng = Rng::new(0x5eed_0009);
    let inst = fixtures::reduction_demo();
    for _ in 0..30 {
        let alpha = rng.vector_in(3, -9, 9);
        let out = two_step_solve(&inst.auxiliary, &inst.graph, &alpha).unwrap();
        let TwoStepOutcome::Solved { x, y, .. } = out else {
            panic!("bounded auxiliary interval always solves");
        };
        assert!(inst.graph.couples(&x, &y).unwrap());
    }
}
