//! Super tensor calculus on tensor powers of `End(C^{n|n})`.
//!
//! Elements of `End(C^{n|n})^{⊗m} ⊗ A` are stored sparsely by a packed key
//! of matrix units; multiplication carries the Koszul sign of the graded
//! tensor product.  On top of this the crate builds the operators `P`, `Q`,
//! `J`, `Λ`, `Θ`, `K` and `R`, checks the identities among them, and checks
//! the RTT relation numerically in the defining representation.

mod laurent;
mod numeric;
mod ops;
mod rational;
mod tensor;

pub use laurent::{Laurent, LaurentRing};
pub use numeric::{cleared_r_matrix, defining_t_matrix, entry_parity, verify_rtt_numeric};
pub use ops::{
    build_operator, eval_pq_product, j_operator, k_operator, label_parity, negate_uv, place_matrix,
    r_operator, supertrace, tau_on_factor, two_slot, unit_at, verify_lambda_lemma,
    verify_operator_identities, verify_pq_identities, verify_pq_transform, yq_entry, IdentityResult,
    LambdaLemmaError, OperatorName, PQ_CHAINS,
};
pub use rational::{RatRing, RatUV};
pub use tensor::{key_get, key_set, SuperTensor, TensorKey, TensorRing};
