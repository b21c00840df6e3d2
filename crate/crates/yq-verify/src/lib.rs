//! A declarative catalog of the relations satisfied by the Gauss generators
//! of `Y(q_n)`, and a verifier that evaluates each relation to a tensor of
//! bivariate series and checks that it vanishes to the truncation order.
//!
//! Relations are strings in a small language ([`expr`]); atoms name series
//! read off the Gauss decomposition ([`env`]).  The same relation runs
//! symbolically (over the PBW normal form) and numerically (through the
//! evaluation map), and [`embed`] and [`grprime`] add the embedding and
//! leading-term checks that are not plain series identities.

pub mod catalog;
pub mod embed;
pub mod env;
pub mod eval;
pub mod expr;
pub mod grprime;
pub mod verify;

pub use catalog::{catalog, instances, lookup, Domain, Filter, RelationSpec, Suite};
pub use embed::{psi_composition_check, psi_generator_images};
pub use env::{Describe, Env, HPrimeBinding};
pub use eval::{Evaluator, Value, Witness, SLOT_DIM};
pub use expr::{parse_expr, parse_relation, Arg, Expr, ParseError, Relation, SeriesAtom};
pub use grprime::{grprime_tables, TableResult};
pub use verify::{
    bind_hprime, group_outcomes, verify, verify_id, verify_in, verify_numeric, verify_psi_identities, verify_suites, Status, VerifyError,
    VerifyResult, HPRIME_PROBES,
};

use thiserror::Error;

/// Errors raised while evaluating a relation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    /// Malformed relation text.
    #[error(transparent)]
    Parse(#[from] ParseError),
    /// A series name the environment does not provide.
    #[error("unknown series {0}")]
    UnknownSeries(String),
    /// An index outside its admissible range.
    #[error("bad index: {0}")]
    BadIndex(String),
    /// A `dm`/`dp` numerator that does not vanish on the diagonal.
    #[error("division precondition: numerator nonzero on v = {sign}u at degree {degree}")]
    Division {
        /// `+1` for `u − v`, `−1` for `u + v`.
        sign: i8,
        /// Lowest degree of the nonzero restriction.
        degree: usize,
    },
    /// `K` used outside `ks(…)`.
    #[error("K may only appear inside ks(...)")]
    KOutsideSplit,
    /// Gauss decomposition or series failure.
    #[error("{0}")]
    Gauss(String),
}
