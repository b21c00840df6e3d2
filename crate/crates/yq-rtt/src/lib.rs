//! The queer super-Yangian `Y(q_n)` in its RTT presentation.
//!
//! [`YangianContext`] turns the component RTT relation into rewrite rules
//! and computes exact PBW normal forms; it implements [`yq_core::Ring`] so
//! that series, matrices and the Gauss decomposition can be built over it.
//! The crate also provides the evaluation map into the defining
//! representation ([`ev`]), the anti-involution [`omega`], the Lie
//! superalgebras `q_n` and its twisted current algebra ([`lie`]), and the
//! leading-term checks of the second filtration.

pub mod checks;
pub mod context;
pub mod ev;
pub mod lie;
pub mod naive;

pub use checks::{gr_leading_check, iota, iota_check, omega, pi_generator, qn_basis, relation_dump};
pub use context::{Rule, YangianContext};
pub use ev::{ev_defining, ev_generator, ev_monomial, ev_poly, g_matrix, DenseMatrix, MatrixRing};
pub use lie::{lie_bracket_qn, lie_bracket_twisted, LieBasis, LieElement};
pub use naive::{reduce, Strategy};

use thiserror::Error;
use yq_core::{CoreError, GenSymbol};

/// Errors raised while building rewrite rules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RttError {
    /// A rule was requested for a pair that is already in order.
    #[error("pair ({0}, {1}) is already ordered; no rewrite rule applies")]
    AlreadyOrdered(GenSymbol, GenSymbol),
    /// Invalid generator data.
    #[error(transparent)]
    Core(#[from] CoreError),
}
