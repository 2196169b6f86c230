//! Exact rational polyhedral computation.
//!
//! Everything in this crate runs over arbitrary-precision rationals; there is
//! no floating point anywhere and no tolerance in any comparison. The crate
//! provides:
//!
//! * scalar / vector / matrix arithmetic with fraction-free elimination
//!   kernels ([`Rational`], [`RVector`], [`RMatrix`], [`rank`],
//!   [`solve_square`], [`gram_solve`]),
//! * polyhedra in both halfspace ([`HRep`]) and generator ([`VRep`])
//!   representations, with membership, dimension, redundancy removal and
//!   exact conversion in both directions via the double description method,
//! * an exact simplex solver with Bland's anti-cycling rule ([`lp`]),
//! * coordinate projection by Fourier-Motzkin elimination and images of
//!   polyhedra under affine maps ([`maps`]),
//! * checkers for the competing notions of "extended formulation" (projection
//!   equality vs. linear-map image equality), witness production, linear-map
//!   synthesis and representation-size reports ([`ef`]),
//! * the affine-graph LP reduction pipeline: graph normalization through the
//!   Gram pseudo-inverse, the two-step solve, and equivalence verification
//!   ([`reduction`]).
//!
//! All values are immutable after construction and all operations are pure
//! functions, so everything here can be freely shared across threads.

mod error;
mod rational;
mod vector;
mod matrix;
mod linalg;
mod hrep;
mod vrep;
mod dd;
mod convert;
mod redundancy;
mod polyhedron;

pub mod lp;
pub mod maps;
pub mod ef;
pub mod reduction;
pub mod format;
pub mod fixtures;

pub use error::Error;
pub use rational::Rational;
pub use vector::RVector;
pub use matrix::RMatrix;
pub use linalg::{gram_solve, null_space, rank, rref, solve_general, solve_square};
pub use hrep::{HRep, LinCon};
pub use vrep::VRep;
pub use convert::{h_to_v, v_to_h};
pub use redundancy::{is_redundant, remove_redundancy};
pub use polyhedron::{poly_equal, Polyhedron};

/// Guard rails for parsed inputs. The toolkit targets desk-scale instances;
/// these limits are enforced when reading files, not on internal
/// intermediates (projections and product constructions may exceed them).
#[derive(Debug, Clone)]
pub struct Limits {
    /// Largest ambient dimension accepted from input files.
    pub max_dim: usize,
    /// Largest number of constraints accepted per representation.
    pub max_constraints: usize,
    /// Largest number of generators (points + rays + lines) accepted.
    pub max_generators: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_dim: 8,
            max_constraints: 64,
            max_generators: 64,
        }
    }
}
