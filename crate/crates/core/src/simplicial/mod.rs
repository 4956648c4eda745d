//! Finite simplicial complexes with an involution.
//!
//! Quotients and fixed parts are only meaningful for regular actions; use
//! [`regularize`] to reach one by barycentric subdivision.

mod complex;
mod homology;
mod involution;
mod product;
mod rational;
mod subdivision;

pub use complex::{ComplexPair, Simplex, SimplicialComplex, SimplicialMap};
pub use homology::{
    induced_homology_map_mod2, induced_homology_map_with, induced_map_mod2, induced_map_with, mod2_betti, mod2_cohomology,
    mod2_cohomology_pair, mod2_homology, mod2_homology_pair, Homology,
};
pub use involution::{
    fixed_subcomplex, quotient_complex, quotient_pair, regularize, InvolutiveComplex,
};
pub use product::{product_complex, product_involutive};
pub use rational::{integer_rank, lefschetz_number, rational_betti, rational_homology_trace};
pub use subdivision::{barycentric_subdivision, subdivide};

use thiserror::Error;

use crate::gf2::LinalgError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("vertex {vertex} out of range for {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("invalid simplex {simplex:?}: {reason}")]
    InvalidSimplex { simplex: Vec<usize>, reason: String },
    #[error("face closure exceeds the simplex cap of {cap}")]
    SimplexCapExceeded { cap: usize },
    #[error("invalid involution: {0}")]
    InvalidInvolution(String),
    #[error("map is not simplicial: {0}")]
    NotSimplicial(String),
    #[error("not a subcomplex: {0}")]
    NotASubcomplex(String),
    #[error("action is not regular: {0}")]
    NonRegularAction(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

impl ComplexError {
    pub fn code(&self) -> &'static str {
        match self {
            ComplexError::VertexOutOfRange { .. } => "complex.vertex_out_of_range",
            ComplexError::InvalidSimplex { .. } => "complex.invalid_simplex",
            ComplexError::SimplexCapExceeded { .. } => "complex.simplex_cap_exceeded",
            ComplexError::InvalidInvolution(_) => "complex.invalid_involution",
            ComplexError::NotSimplicial(_) => "complex.not_simplicial",
            ComplexError::NotASubcomplex(_) => "complex.not_a_subcomplex",
            ComplexError::NonRegularAction(_) => "complex.non_regular_action",
            ComplexError::Linalg(e) => e.code(),
        }
    }
}
