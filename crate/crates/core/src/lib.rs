//! Exact linear algebra and combinatorics for h-vectors of simplicial
//! complexes over prime fields.
//!
//! The library computes the classical f- and h-vectors of a finite
//! simplicial complex, the algebraic refinements obtained from generic
//! linear systems of parameters on the Stanley-Reisner ring, and the
//! simplicial cohomology data needed to relate the two. Everything is
//! exact arithmetic over GF(p); nothing is floating point and nothing
//! is randomized except the choice of parameters, which is seeded.

pub mod catalog;
pub mod cohomology;
pub mod complex;
pub mod error;
pub mod field;
pub mod io;
pub mod local_cohomology;
pub mod lsop;
pub mod matrix;
pub mod random;
pub mod sigma;
pub mod stanley_reisner;
pub mod subspace;
pub mod verify;

pub use complex::{Face, SimplicialComplex};
pub use error::Error;
pub use field::{PrimeField, DEFAULT_PRIME};
