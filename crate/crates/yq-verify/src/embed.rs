//! The embeddings `ψ_m : Y(q_{n−m}) → Y(q_n)` given by the lower-right Gauss
//! factors, and the composition law `ψ_m ∘ ψ_1 = ψ_{m+1}`.

use yq_core::{GenSymbol, Ring, SuperPoly};
use yq_gauss::BlockMatrix;
use yq_rtt::YangianContext;

use crate::env::Env;
use crate::EvalError;

/// The image of a generator `t_{ij}^{(r)}` of `Y(q_{n−m})` under `ψ_m`,
/// read from `ψ_m(T(u))` (block `(|i|, j)`, even or odd part by the sign of
/// `i`).
pub fn psi_generator_images(psi: &BlockMatrix<SuperPoly>, g: GenSymbol) -> SuperPoly {
    let block = psi.block(g.row().unsigned_abs() as usize, g.col() as usize);
    let s = if g.row() > 0 { &block.a } else { &block.b };
    let r = g.level() as usize;
    if r <= s.order() {
        s.coeff(r).clone()
    } else {
        SuperPoly::zero()
    }
}

fn apply_hom(ctx: &YangianContext, psi: &BlockMatrix<SuperPoly>, p: &SuperPoly) -> SuperPoly {
    let mut out = ctx.zero();
    for (m, c) in p.sorted_terms() {
        let mut img = ctx.one();
        for &g in m.gens() {
            img = ctx.mul(&img, &psi_generator_images(psi, g));
        }
        out = ctx.add(&out, &ctx.scale(c, &img));
    }
    out
}

/// Checks `ψ_m(ψ_1(T(u))) = ψ_{m+1}(T(u))` blockwise at truncation `order`,
/// with target `Y(q_n)`; needs `m + 1 < n`.  Returns the first differing
/// block `(a, b)` if any.
pub fn psi_composition_check(n: usize, m: usize, order: usize) -> Result<Option<(usize, usize)>, EvalError> {
    if m == 0 || m + 1 >= n {
        return Err(EvalError::BadIndex(format!("composition needs 1 <= m < n - 1, got m = {m}, n = {n}")));
    }
    let gauss = |e: yq_gauss::GaussError| EvalError::Gauss(e.to_string());
    let big = YangianContext::new(n);
    let big_env = Env::symbolic(&big, order).map_err(gauss)?;
    let small = YangianContext::new(n - m);
    let small_env = Env::symbolic(&small, order).map_err(gauss)?;
    let psi_m = big_env.psi(m)?;
    let psi_next = big_env.psi(m + 1)?;
    let psi_1 = small_env.psi(1)?;
    for a in 1..=psi_1.n() {
        for b in 1..=psi_1.n() {
            let inner = psi_1.block(a, b);
            let want = psi_next.block(a, b);
            for k in 0..=order {
                let lhs_a = apply_hom(&big, &psi_m, inner.a.coeff(k));
                let lhs_b = apply_hom(&big, &psi_m, inner.b.coeff(k));
                if !big.is_zero(&big.sub(&lhs_a, want.a.coeff(k))) || !big.is_zero(&big.sub(&lhs_b, want.b.coeff(k))) {
                    return Ok(Some((a, b)));
                }
            }
        }
    }
    Ok(None)
}
