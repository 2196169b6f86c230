//! Shared helpers for the integration suites: a small deterministic PRNG
//! (fixed seeds keep every run byte-identical) and random instance
//! builders over small integer data.
//!
//! Each test binary uses a different subset of these helpers.
#![allow(dead_code)]

use exactpoly::{solve_square, HRep, LinCon, RMatrix, RVector, Rational, VRep};

/// SplitMix64; deterministic across platforms.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform-ish integer in [lo, hi], inclusive.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        let span = (hi - lo + 1) as u64;
        lo + (self.next_u64() % span) as i64
    }

    pub fn usize_in(&mut self, lo: usize, hi: usize) -> usize {
        self.int_in(lo as i64, hi as i64) as usize
    }

    pub fn rational_in(&mut self, lo: i64, hi: i64) -> Rational {
        Rational::from_int(self.int_in(lo, hi))
    }

    pub fn vector_in(&mut self, dim: usize, lo: i64, hi: i64) -> RVector {
        (0..dim).map(|_| self.rational_in(lo, hi)).collect()
    }

    /// A random subset of {0..dim-1} of the given size, ascending.
    pub fn coordinate_subset(&mut self, dim: usize, size: usize) -> Vec<usize> {
        let mut all: Vec<usize> = (0..dim).collect();
        for i in (1..all.len()).rev() {
            let j = self.usize_in(0, i);
            all.swap(i, j);
        }
        let mut keep: Vec<usize> = all.into_iter().take(size).collect();
        keep.sort_unstable();
        keep
    }
}

/// A random generator description with integer coordinates in [-5, 5]:
/// 1..=max_points points, occasionally a ray and/or a line.
pub fn random_vrep(rng: &mut Rng, dim: usize, max_points: usize, allow_unbounded: bool) -> VRep {
    let npoints = rng.usize_in(1, max_points);
    let points = (0..npoints).map(|_| rng.vector_in(dim, -5, 5)).collect();
    let mut rays = Vec::new();
    let mut lines = Vec::new();
    if allow_unbounded {
        if rng.usize_in(0, 3) == 0 {
            let r = rng.vector_in(dim, -2, 2);
            if !r.is_zero() {
                rays.push(r);
            }
        }
        if rng.usize_in(0, 3) == 0 {
            let l = rng.vector_in(dim, -2, 2);
            if !l.is_zero() {
                lines.push(l);
            }
        }
    }
    VRep::new(dim, points, rays, lines).expect("generators have dimension dim")
}

/// A random halfspace description: `rows` inequality rows with integer data
/// in [-5, 5]; optionally a bounding box so the result is a polytope.
pub fn random_hrep(rng: &mut Rng, dim: usize, rows: usize, with_box: bool) -> HRep {
    let mut ineqs = Vec::new();
    if with_box {
        let k = rng.int_in(1, 5);
        for i in 0..dim {
            let mut lo = vec![0i64; dim];
            lo[i] = -1;
            ineqs.push(LinCon::new(RVector::from_ints(&lo), Rational::from_int(k)));
            let mut hi = vec![0i64; dim];
            hi[i] = 1;
            ineqs.push(LinCon::new(RVector::from_ints(&hi), Rational::from_int(k)));
        }
    }
    for _ in 0..rows {
        let coef = rng.vector_in(dim, -5, 5);
        if coef.is_zero() {
            continue;
        }
        ineqs.push(LinCon::new(coef, rng.rational_in(-5, 5)));
    }
    HRep::new(dim, ineqs, vec![]).expect("rows have dimension dim")
}

/// Independent brute-force vertex enumeration: every full-rank d-subset of
/// constraint rows solved as equalities, keeping feasible solutions. Used
/// as the oracle against the simplex path.
pub fn enumerate_vertices(h: &HRep) -> Vec<RVector> {
    let dim = h.dim();
    let rows: Vec<&LinCon> = h.ineqs().iter().chain(h.eqs().iter()).collect();
    let mut out: Vec<RVector> = Vec::new();
    let mut choose = vec![0usize; dim];
    fn rec(
        rows: &[&LinCon],
        h: &HRep,
        dim: usize,
        start: usize,
        depth: usize,
        choose: &mut Vec<usize>,
        out: &mut Vec<RVector>,
    ) {
        if depth == dim {
            let m = RMatrix::from_rows(
                dim,
                &choose.iter().map(|&i| rows[i].coef.clone()).collect::<Vec<_>>(),
            )
            .unwrap();
            let rhs: RVector = choose.iter().map(|&i| rows[i].rhs.clone()).collect();
            if let Some(x) = solve_square(&m, &rhs).unwrap() {
                if h.contains(&x).unwrap() && !out.contains(&x) {
                    out.push(x);
                }
            }
            return;
        }
        for i in start..rows.len() {
            choose[depth] = i;
            rec(rows, h, dim, i + 1, depth + 1, choose, out);
        }
    }
    rec(&rows, h, dim, 0, 0, &mut choose, &mut out);
    out
}

/// Like `random_hrep`, but also throws in equality rows and the occasional
/// zero-coefficient or duplicate row, to stress the degenerate paths.
pub fn random_hrep_harsh(rng: &mut Rng, dim: usize, rows: usize, with_box: bool) -> HRep {
    let base = random_hrep(rng, dim, rows, with_box);
    let mut ineqs = base.ineqs().to_vec();
    let mut eqs = Vec::new();
    if rng.usize_in(0, 2) == 0 {
        let coef = rng.vector_in(dim, -3, 3);
        if !coef.is_zero() {
            eqs.push(LinCon::new(coef, rng.rational_in(-3, 3)));
        }
    }
    if rng.usize_in(0, 3) == 0 {
        // Trivial row 0 · x ≤ c with c ≥ 0.
        ineqs.push(LinCon::new(RVector::zeros(dim), rng.rational_in(0, 3)));
    }
    if rng.usize_in(0, 3) == 0 {
        if let Some(first) = ineqs.first().cloned() {
            ineqs.push(first); // duplicate
        }
    }
    HRep::new(dim, ineqs, eqs).expect("rows have dimension dim")
}
