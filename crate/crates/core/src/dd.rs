//! Double description method over cones.
//!
//! The engine maintains a minimal pair (lineality basis, extreme rays) for
//! the cone cut out by the halfspaces inserted so far, starting from all of
//! R^n. Halfspaces that cut the lineality space shrink it by one dimension
//! and release one ray; otherwise the classical combinatorial adjacency test
//! decides which ray pairs combine on the new hyperplane.

use crate::rational::Rational;
use crate::vector::RVector;

/// Set of constraint indices a ray satisfies with equality.
#[derive(Clone, Debug)]
struct RowSet {
    words: Vec<u64>,
}

impl RowSet {
    fn with_capacity(rows: usize) -> Self {
        RowSet {
            words: vec![0; rows.div_ceil(64)],
        }
    }

    fn insert(&mut self, i: usize) {
        let w = i / 64;
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1 << (i % 64);
    }

    fn intersection(&self, other: &RowSet) -> RowSet {
        let n = self.words.len().min(other.words.len());
        RowSet {
            words: (0..n).map(|k| self.words[k] & other.words[k]).collect(),
        }
    }

    fn is_subset_of(&self, other: &RowSet) -> bool {
        for (k, w) in self.words.iter().enumerate() {
            let o = other.words.get(k).copied().unwrap_or(0);
            if w & !o != 0 {
                return false;
            }
        }
        true
    }
}

#[derive(Clone, Debug)]
struct Ray {
    vec: RVector,
    zero: RowSet,
}

/// Generator-side description of a cone in R^dim.
pub(crate) struct DdCone {
    dim: usize,
    lin: Vec<RVector>,
    rays: Vec<Ray>,
    rows_inserted: usize,
}

impl DdCone {
    /// Starts from the full space: lineality = standard basis, no rays.
    pub(crate) fn full(dim: usize) -> Self {
        DdCone {
            dim,
            lin: (0..dim).map(|i| RVector::unit(dim, i)).collect(),
            rays: Vec::new(),
            rows_inserted: 0,
        }
    }

    pub(crate) fn add_equality(&mut self, a: &RVector) {
        self.add_halfspace(a);
        self.add_halfspace(&a.neg());
    }

    /// Intersects with {z : a · z ≥ 0}.
    pub(crate) fn add_halfspace(&mut self, a: &RVector) {
        assert_eq!(a.len(), self.dim);
        let row = self.rows_inserted;
        self.rows_inserted += 1;

        // Lineality case: some basis line leaves the hyperplane. It becomes
        // the single new ray; everything else is shifted onto a⊥ (shifts by
        // old lineality directions change no earlier evaluation).
        if let Some(k) = self.lin.iter().position(|l| !a.dot(l).is_zero()) {
            let mut pivot = self.lin.remove(k);
            let mut pval = a.dot(&pivot);
            if pval.is_negative() {
                pivot = pivot.neg();
                pval = -pval;
            }
            for l in self.lin.iter_mut() {
                let c = -&(&a.dot(l) / &pval);
                if !c.is_zero() {
                    *l = l.add_scaled(&c, &pivot);
                }
            }
            for ray in self.rays.iter_mut() {
                let c = -&(&a.dot(&ray.vec) / &pval);
                if !c.is_zero() {
                    ray.vec = ray.vec.add_scaled(&c, &pivot).primitive();
                }
                ray.zero.insert(row);
            }
            let mut zero = RowSet::with_capacity(self.rows_inserted);
            for r in 0..row {
                zero.insert(r);
            }
            self.rays.push(Ray {
                vec: pivot.primitive(),
                zero,
            });
            return;
        }

        let vals: Vec<Rational> = self.rays.iter().map(|r| a.dot(&r.vec)).collect();
        if vals.iter().all(|v| !v.is_negative()) {
            for (ray, v) in self.rays.iter_mut().zip(&vals) {
                if v.is_zero() {
                    ray.zero.insert(row);
                }
            }
            return;
        }

        let pos: Vec<usize> = (0..vals.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..vals.len()).filter(|&i| vals[i].is_negative()).collect();
        let mut next = Vec::new();
        for (i, ray) in self.rays.iter().enumerate() {
            if !vals[i].is_negative() {
                let mut kept = ray.clone();
                if vals[i].is_zero() {
                    kept.zero.insert(row);
                }
                next.push(kept);
            }
        }
        for &p in &pos {
            for &n in &neg {
                if !self.adjacent(p, n) {
                    continue;
                }
                // Positive combination landing exactly on the hyperplane.
                let vec = self.rays[n].vec.scale(&vals[p]).add_scaled(&-&vals[n], &self.rays[p].vec);
                let mut zero = self.rays[p].zero.intersection(&self.rays[n].zero);
                zero.insert(row);
                next.push(Ray {
                    vec: vec.primitive(),
                    zero,
                });
            }
        }
        self.rays = next;
    }

    /// Combinatorial adjacency: no third ray's zero set contains the common
    /// zero set of the pair. Valid because the pair is kept minimal at every
    /// insertion.
    fn adjacent(&self, p: usize, n: usize) -> bool {
        let common = self.rays[p].zero.intersection(&self.rays[n].zero);
        for (k, other) in self.rays.iter().enumerate() {
            if k == p || k == n {
                continue;
            }
            if common.is_subset_of(&other.zero) {
                return false;
            }
        }
        true
    }

    pub(crate) fn lineality(&self) -> &[RVector] {
        &self.lin
    }

    pub(crate) fn ray_vectors(&self) -> Vec<RVector> {
        self.rays.iter().map(|r| r.vec.clone()).collect()
    }
}
