//! Truncated formal series in the inverse spectral parameters.
//!
//! [`TruncSeries`] holds `Σ_{k≤L} c_k u^{-k}` and [`BivarSeries`] holds
//! `Σ_{r+s≤L} c_{r,s} u^{-r} v^{-s}` over any coefficient [`Ring`].  Besides
//! ring operations they provide the rational-function operations needed by
//! the relations of the super-Yangian: `u → −u`, `∂_u`, and exact division
//! of bivariate numerators by `u − v` and `u + v`.
//!
//! Bivariate series use *total-degree* truncation: a coefficient `c_{r,s}`
//! is known exactly when `r + s ≤ L`.  Division by `u ∓ v` lowers the degree
//! of every term by one, so quotients are exact one order further.

mod bivar;
mod ring;
mod univar;

pub use bivar::BivarSeries;
pub use ring::{BivarRing, SeriesRing};
pub use univar::TruncSeries;
pub use yq_core::Ring;

use thiserror::Error;

/// Errors raised by series operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    /// A numerator passed to an exact division does not vanish where the
    /// divisor does.
    #[error("numerator does not vanish on v = {sign}u at total degree {degree}")]
    DivisionPrecondition {
        /// `+1` for division by `u − v`, `−1` for `u + v`.
        sign: i8,
        /// Lowest total degree at which the restriction is nonzero.
        degree: usize,
    },
    /// The leading coefficient needed for an inverse is not a unit.
    #[error("series is not invertible: {0}")]
    NotInvertible(String),
    /// Division by `u` of a series with nonzero constant part.
    #[error("series is not divisible by u^-1 (nonzero constant part)")]
    NotDivisibleByX,
}
