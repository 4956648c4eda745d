//! Exact linear algebra over the two-element field.
//!
//! Everything here is bit-packed and exact: over F₂ every nonzero pivot is 1,
//! so elimination never needs a tolerance.

mod bitvec;
mod matrix;
mod subspace;

pub use bitvec::{BitVec, Ones};
pub use matrix::BitMatrix;
pub use subspace::{Subquotient, Subspace};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected ambient dimension {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("subspace is not contained in the numerator")]
    NotContained,
    #[error("map does not send numerator into numerator")]
    NotAChainMap,
}

impl LinalgError {
    pub fn code(&self) -> &'static str {
        match self {
            LinalgError::DimensionMismatch { .. } => "linalg.dimension_mismatch",
            LinalgError::NotContained => "linalg.not_contained",
            LinalgError::NotAChainMap => "linalg.not_a_chain_map",
        }
    }
}

/// F₂ rank of a matrix.
pub fn rank(m: &BitMatrix) -> usize {
    m.rank()
}

/// Kernel `{x : m·x = 0}` and image `{m·x}` of a matrix.
pub fn decompose(m: &BitMatrix) -> (Subspace, Subspace) {
    m.decompose()
}
