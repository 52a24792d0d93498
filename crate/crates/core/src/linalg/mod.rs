//! Exact linear algebra over `Q` and `F_p`.

mod field;
mod matrix;
mod subspace;

pub use field::{Field, Scalar};
pub use matrix::{Matrix, Rref};
pub use subspace::{QuotientPresentation, Subspace};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("mixed fields: {0} and {1}")]
    FieldMismatch(Field, Field),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("row {row} has {found} entries, expected {expected}")]
    Ragged { row: usize, expected: usize, found: usize },
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
    #[error("vector not contained in subspace: {0}")]
    NotContained(String),
}
