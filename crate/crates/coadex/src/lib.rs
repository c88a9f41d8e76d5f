//! Exact computations with finite-dimensional Lie algebras given by
//! structure constants.
//!
//! The crate computes, over arbitrary-precision rationals and with no
//! numerics anywhere: brackets, centralizers and centers, Killing forms,
//! gradings, Chevalley bases of the simple Lie algebras, sl2-triples through
//! the Jacobson-Morozov construction, coadjoint polynomial matrices, certified
//! indices, invariants and semi-invariants of symmetric algebras, torus weight
//! decompositions and the bracket-pairing determinants that control generic
//! coadjoint stabilizers.
//!
//! The `examples/` directory is the guided tour: one runnable example per
//! capability. The `coadex` binary wraps the same operations as batch
//! subcommands emitting JSON reports.

#![allow(clippy::needless_range_loop)]
#![allow(clippy::type_complexity)]

pub mod chevalley;
pub mod coad;
pub mod fixture;
pub mod lie;
pub mod linalg;
pub mod pipeline;
pub mod poly;
pub mod rat;
pub mod report;
pub mod rng;
pub mod weights;

pub use lie::{Element, Grading, LieAlgebra};
pub use linalg::{PolyMatrix, RatMatrix, Subspace};
pub use poly::MultiPoly;
pub use rat::Rat;
pub use rng::{SeededRng, DEFAULT_SEED};

/// Errors across the crate: dimension mismatches, parse failures, and
/// algebraic preconditions that did not hold.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Algebra(String),
    #[error("check failed: {0}")]
    CheckFailed(String),
    #[error("not found: {0}")]
    NotFound(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
