//! Invariants of gentle and locally gentle algebras `kQ/I`.
//!
//! A [`GentlePresentation`] is a quiver together with quadratic monomial
//! relations satisfying the gentle conditions. Everything else in the crate is
//! a pure function of a presentation: the maximal-path decomposition, Hilbert
//! series, center, prime spectrum, projective and injective resolutions, Ext
//! groups, and the homological classification. The [`oracle`] module
//! recomputes most of these by brute force on a degree-truncated path basis
//! with exact rational arithmetic.

pub mod catalog;
pub mod enumerate;
pub mod format;
pub mod hilbert;
pub mod invariants;
pub mod max_paths;
pub mod oracle;
pub mod quiver;
pub mod resolutions;
pub mod spectrum;

pub use hilbert::{hilbert_series, palindromy, Palindromy, RationalHilbert};
pub use invariants::{classify, Classification, Dimension};
pub use max_paths::{decompose, Decomposition, MaximalPath};
pub use quiver::{
    AlgebraKind, Arrow, ArrowId, GentlePresentation, Path, PresentationError, Quiver, QuiverError, VertexId,
};
