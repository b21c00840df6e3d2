//! Exact arithmetic foundations for the queer super-Yangian toolkit.
//!
//! This crate provides rational [`Scalar`]s, [`Parity`] bookkeeping with
//! Koszul signs, canonical generators [`GenSymbol`] of `Y(q_n)`, words
//! ([`Monomial`]) and sparse polynomials ([`SuperPoly`]) in the free
//! superalgebra, and the [`Ring`] trait through which the higher layers are
//! generic over their coefficients.

pub mod error;
pub mod generator;
pub mod monomial;
pub mod parity;
pub mod poly;
pub mod ring;
pub mod scalar;

pub use error::CoreError;
pub use generator::{canonicalize, check_index, index_at_position, index_position, GenSymbol};
pub use monomial::Monomial;
pub use parity::{koszul_sign, permutation_sign, total_parity, Parity};
pub use poly::SuperPoly;
pub use ring::{FreeRing, Ring, ScalarRing};
pub use scalar::Scalar;
