//! Matrices of YQ form over series in `Y(q_n)`, their block inverses and
//! quasi-determinants, and the block Gauss decomposition `T = F H E` from
//! which the Drinfeld generator series are read off.
//!
//! All routines are generic over the coefficient ring, so the same code
//! runs symbolically (over the Yangian in normal form) and numerically
//! (over `End(C^{n|n})` after the evaluation map), and the two results can
//! be compared entry by entry.

mod block;
mod gauss;
mod yangian;
mod yq;

pub use block::{BlockMatrix, BlockRing};
pub use gauss::{gauss_to_text, GaussData, SeriesName};
pub use yangian::{
    defining_block_matrix, generator_block_matrix, numeric_factor_mismatches, omega_checks,
    omega_series, poly_text, root_element, yangian_gauss, OmegaResult,
};
pub use yq::{YQMatrix, YQRing};

/// Errors of the matrix routines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GaussError {
    /// An input violates the `1 + O(u^{-1})` (or index) precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),
}
