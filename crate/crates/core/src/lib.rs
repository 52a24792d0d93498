//! Exact homological algebra on the quasi-abelian category of finite-dimensional
//! pair spaces `(V, N ⊆ V)`.
//!
//! A pair space models a seminormed space: `N` is the subspace of vectors of
//! seminorm zero. Morphisms are linear maps carrying null vectors to null vectors.
//! The crate computes kernels, cokernels, strictness, the left and right hearts of
//! the derived category, and ℓ¹-homology and bounded cohomology of finite groups
//! with coefficients in pair spaces, all in exact arithmetic.

pub mod linalg;
pub mod oracle;
pub mod complexes;
pub mod gen;
pub mod groups;
pub mod hearts;
pub mod io;
pub mod laws;
pub mod sn;

pub use linalg::{Field, LinalgError, Matrix, Scalar, Subspace};
