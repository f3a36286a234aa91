//! Exact rational models of the associahedra K(n) and multiplihedra J^a(n),
//! together with their boundary insertions, degeneracies, homeomorphisms,
//! tree coordinates, operadic composition and bar complexes.
//!
//! Everything is computed over arbitrary-precision rationals; no floating
//! point enters any geometric predicate.

pub mod associahedron;
pub mod barcx;
pub mod degeneracy;
pub mod homeo;
pub mod multiplihedron;
pub mod operadcat;
pub mod ratgeom;
pub mod trees;
pub mod verify;

pub use associahedron::KPoint;
pub use multiplihedron::JPoint;
pub use ratgeom::{HRep, Rat, RatVec};

/// Errors shared by every module of the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("index {index} out of range 1..={max}")]
    IndexRange { index: usize, max: usize },

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    #[error("word parse error at token {position}: {message}")]
    WordParse { position: usize, message: String },

    #[error("monoid error: {0}")]
    Monoid(String),

    #[error("composition error: {0}")]
    Compose(String),
}

pub type Result<T> = std::result::Result<T, Error>;
