//! Error type shared by the core data structures.

use thiserror::Error;

/// Errors raised by core operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    /// A generator index outside `I_{n|n}` or a level below 1.
    #[error("index out of range: {0}")]
    OutOfRange(String),
    /// An operation that needs parity-homogeneous input received a mixed element.
    #[error("element is not parity-homogeneous")]
    NotHomogeneous,
    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),
}
