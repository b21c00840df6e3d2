//! The RTT relation checked numerically in the defining representation.

use yq_core::{index_at_position, Parity, Ring, Scalar};
use yq_rtt::{ev_defining, DenseMatrix, MatrixRing};

use crate::laurent::{Laurent, LaurentRing};
use crate::ops::{build_operator, place_matrix, OperatorName};
use crate::tensor::{SuperTensor, TensorRing};

/// `T(u) = Σ E_{ij} ⊗ ev(t_{ij}(u))` in slot `slot` of `End(C^{n|n})^{⊗2}`,
/// with coefficients in `End(C^{n|n})[u^{±1}, v^{±1}]`; `in_v` selects the
/// variable.
pub fn defining_t_matrix(n: usize, slot: usize, in_v: bool) -> SuperTensor<Laurent<DenseMatrix>> {
    let lr = LaurentRing { inner: MatrixRing { dim: 2 * n } };
    place_matrix(&lr, 2, 2 * n, slot, |p, q| {
        let (i, j) = (index_at_position(p as u32), index_at_position(q as u32));
        let cs = ev_defining(n, i, j);
        let mut out = lr.monomial(0, 0, cs[0].clone());
        let (a, b) = if in_v { (0, -1) } else { (-1, 0) };
        let one = lr.monomial(a, b, cs[1].clone());
        out = lr.add(&out, &one);
        out
    })
}

/// The cleared R-matrix `(u²−v²) − (u+v)P − (u−v)Q` on `C^{n|n} ⊗ C^{n|n}`
/// with matrix-valued Laurent coefficients.
pub fn cleared_r_matrix(n: usize) -> SuperTensor<Laurent<DenseMatrix>> {
    let dim = 2 * n;
    let lr = LaurentRing { inner: MatrixRing { dim } };
    let tr = TensorRing::new(&lr, 2, dim);
    let id = DenseMatrix::identity(dim);
    let mono = |a, b, c: i64| lr.monomial(a, b, id.scale(&Scalar::int(c)));
    let p = tr.lift(&build_operator(OperatorName::P, dim, 0, 1, 2));
    let q = tr.lift(&build_operator(OperatorName::Q, dim, 0, 1, 2));
    let u2v2 = lr.add(&mono(2, 0, 1), &mono(0, 2, -1));
    let upv = lr.add(&mono(1, 0, 1), &mono(0, 1, 1));
    let umv = lr.add(&mono(1, 0, 1), &mono(0, 1, -1));
    let mut r = tr.from_coeff(u2v2);
    r = tr.sub(&r, &tr.mul_coeff_right(&p, &upv));
    tr.sub(&r, &tr.mul_coeff_right(&q, &umv))
}

/// Checks `(u²−v²)(R T¹(u) T²(v) − T²(v) T¹(u) R) = 0` with `T` the image
/// of the generator matrix in the defining representation of `q_n`.
pub fn verify_rtt_numeric(n: usize) -> bool {
    let dim = 2 * n;
    let lr = LaurentRing { inner: MatrixRing { dim } };
    let tr = TensorRing::new(&lr, 2, dim);
    let r = cleared_r_matrix(n);
    let t1 = defining_t_matrix(n, 0, false);
    let t2 = defining_t_matrix(n, 1, true);
    let lhs = tr.mul(&tr.mul(&r, &t1), &t2);
    let rhs = tr.mul(&tr.mul(&t2, &t1), &r);
    tr.is_zero(&tr.sub(&lhs, &rhs))
}

/// Parity helper used by callers that build their own matrices.
pub fn entry_parity(p: usize, q: usize) -> Parity {
    Parity::from_odd((p + q) % 2 == 1)
}
