//! The central series `z(u)` of `Y(q_n)`.
//!
//! `z(u)` is computed two ways: as `1 − str(T(u) ∂T̃(u))` from the full
//! generator matrix, and as the product over `a` of the rank-one factors
//! `1 − str(H_a(u) ∂H̃_a(u))` of the Gauss decomposition.  [`checks`] adds the
//! evenness, centrality, Λ-identity, evaluation and Berezinian checks.
//!
//! The series routines are generic over the coefficient ring, so the same
//! code produces `z(u)` symbolically and in the defining representation.

pub mod checks;
mod series;

pub use checks::{
    berezinian_check, blockwise_lambda_identity, centrality_matrix, ev_center_corollary, factor_centrality,
    lambda_identity, BerezinianFactor, CentralityEntry, EvCorollary, LambdaResult,
};
pub use series::{block_matrix_z, diagonal_block_z, z_from_product, z_from_supertrace, CentralSeries};

use thiserror::Error;

/// Errors of the center routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CenterError {
    /// Truncation order below the minimum of 2.
    #[error("order must be at least 2, got {0}")]
    OrderTooSmall(usize),
    /// A matrix inverse or Gauss factor failed.
    #[error(transparent)]
    Gauss(#[from] yq_gauss::GaussError),
    /// A series operation failed.
    #[error(transparent)]
    Series(#[from] yq_series::SeriesError),
}
