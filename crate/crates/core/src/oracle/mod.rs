//! Brute-force verification on a degree-truncated path basis.
//!
//! Everything here recomputes a closed-form result from scratch with exact
//! rational linear algebra, so that the formulas in the rest of the crate can
//! be checked rather than trusted.

mod center;
mod complexes;
mod ext;
mod free;
mod gorenstein;
mod ideals;
pub mod linalg;
pub mod modules;
mod truncated;

use thiserror::Error;

pub use center::{verify_center, CenterReport};
pub use complexes::{safe_window, verify_complex, ComplexFailure, ComplexReport};
pub use ext::{ext_dims_bruteforce, ext_dims_in};
pub use free::{verify_cm_witness, verify_free_module};
pub use gorenstein::{as_gorenstein_bruteforce, GorensteinWitness};
pub use ideals::{ideal_span, monomial_ideal, span_matches_paths, IdealSpan};
pub use linalg::RationalMatrix;
pub use truncated::{add_term, truncate, Element, TruncatedAlgebra};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("degree {degree} needs paths of length {needed}, beyond the truncation {bound}")]
    WindowTooWide { degree: i64, needed: usize, bound: usize },
    #[error("generator {generator} does not commute with {witness}")]
    CentralityFailed { generator: String, witness: String },
    #[error("center has dimension {got} in degree {degree}, expected {expected}")]
    DimensionMismatch { degree: usize, got: usize, expected: usize },
    #[error("not free in degree {degree}: {count} candidate basis elements of rank {rank}, dimension {dim}")]
    NotFree { degree: usize, count: usize, rank: usize, dim: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("map entry {entry} of differential {map} sends a basis element outside its target in degree {degree}")]
    Malformed { map: usize, entry: usize, degree: i64 },
    #[error("complex failed verification: {0}")]
    Complex(ComplexFailure),
}
