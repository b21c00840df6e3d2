//! Checks on the central series: centrality, the Λ-identity, the image
//! under the evaluation map, and the Berezinian form of the factors.

use rayon::prelude::*;
use yq_core::{GenSymbol, Ring, Scalar, SuperPoly};
use yq_gauss::{defining_block_matrix, generator_block_matrix, BlockMatrix, BlockRing, GaussData, YQMatrix};
use yq_rtt::{g_matrix, DenseMatrix, MatrixRing, YangianContext};
use yq_series::{SeriesError, SeriesRing, TruncSeries};
use yq_tensor::{
    build_operator, label_parity, place_matrix, supertrace, tau_on_factor, yq_entry, OperatorName, SuperTensor, TensorRing,
};

use crate::series::{block_matrix_z, diagonal_block_z, CentralSeries};
use crate::CenterError;

/// One cell of the centrality matrix: whether `[z_r, g]` vanishes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralityEntry {
    /// Coefficient index of `z`.
    pub r: usize,
    /// The generator bracketed with `z_r`.
    pub generator: GenSymbol,
    /// True if the supercommutator normalizes to zero.
    pub commutes: bool,
}

/// Brackets every `z_r` (`1 ≤ r ≤ L`) with every canonical generator of
/// level `≤ max_total − r`, in parallel; sorted by `(r, generator)`.
pub fn centrality_matrix(ctx: &YangianContext, z: &CentralSeries, max_total: usize) -> Vec<CentralityEntry> {
    let top = z.order().min(max_total.saturating_sub(1));
    let gens = ctx.generators(max_total as u32);
    let pairs: Vec<(usize, GenSymbol)> = (1..=top)
        .flat_map(|r| gens.iter().filter(move |g| r + g.level() as usize <= max_total).map(move |&g| (r, g)))
        .collect();
    let mut out: Vec<CentralityEntry> = pairs
        .par_iter()
        .map(|&(r, g)| CentralityEntry { r, generator: g, commutes: ctx.bracket(z.coeff(r), &SuperPoly::gen(g)).is_zero() })
        .collect();
    out.sort_by(|x, y| (x.r, x.generator).cmp(&(y.r, y.generator)));
    out
}

/// True if every coefficient of the factor `z_a(u)` supercommutes with the
/// coefficients `h_a^{(s)}`, `h̄_a^{(s)}` for `r + s ≤ max_total`.
pub fn factor_centrality(
    ctx: &YangianContext,
    gd: &GaussData<SuperPoly>,
    a: usize,
    factor: &TruncSeries<SuperPoly>,
    max_total: usize,
) -> bool {
    let top = factor.order().min(gd.h(a).order());
    (1..=top.min(max_total)).into_par_iter().all(|r| {
        (1..=max_total - r).filter(|&s| s <= top).all(|s| {
            let zr = factor.coeff(r);
            ctx.bracket(zr, gd.h(a).coeff(s)).is_zero() && ctx.bracket(zr, gd.hbar(a).coeff(s)).is_zero()
        })
    })
}

/// Outcome of one Λ-identity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaResult {
    /// Label of the checked identity.
    pub name: String,
    /// Whether it holds to the truncation order.
    pub pass: bool,
}

/// Entry of the full `2n × 2n` matrix at layout positions `(p, q)`.
fn full_entry<R: Ring>(
    sr: &SeriesRing<'_, R>,
    m: &BlockMatrix<R::Elem>,
    p: usize,
    q: usize,
) -> TruncSeries<R::Elem> {
    let blk = m.block(p / 2 + 1, q / 2 + 1);
    yq_entry(sr, &blk.a, &blk.b, p % 2, q % 2)
}

fn tensor_is_zero<R: Ring>(tr: &TensorRing<'_, R>, t: &SuperTensor<R::Elem>) -> bool {
    t.iter().all(|(_, c)| tr.inner.is_zero(c))
}

/// `(Λ ⊗ 1) T¹(u) τ₂(T̃²(u)) = Λ ⊗ z(u)` on `End(C^{n|n})^{⊗2}` with `z` from
/// the supertrace formula.
pub fn lambda_identity(ctx: &YangianContext, order: usize) -> Result<LambdaResult, CenterError> {
    let br = BlockRing::new(ctx, order);
    let t = generator_block_matrix(ctx, order);
    let tt = br.invert(&t)?;
    let z = block_matrix_z(&br, &t)?;
    let sr = br.yq.series;
    let dim = 2 * ctx.n();
    let tr = TensorRing::new(&sr, 2, dim);
    let lam = tr.lift(&build_operator(OperatorName::Lambda, dim, 0, 1, 2));
    let t1 = place_matrix(&sr, 2, dim, 0, |p, q| full_entry(&sr, &t, p, q));
    let tt2 = tau_on_factor(&sr, &place_matrix(&sr, 2, dim, 1, |p, q| full_entry(&sr, &tt, p, q)), 1);
    let lhs = tr.mul(&tr.mul(&lam, &t1), &tt2);
    let rhs = tr.mul_coeff_right(&lam, &z);
    Ok(LambdaResult { name: "lambda.full".into(), pass: tensor_is_zero(&tr, &tr.sub(&lhs, &rhs)) })
}

/// The blockwise form `Σ_p (Λ₀ ⊗ 1) T¹_{pb}(u) τ₂(T̃²_{cp}(u)) = δ_{bc} Λ₀ ⊗ z(u)`
/// for every `b, c`, with `Λ₀` the rank-one operator on `C^{1|1}`.
pub fn blockwise_lambda_identity(ctx: &YangianContext, order: usize) -> Result<Vec<LambdaResult>, CenterError> {
    let br = BlockRing::new(ctx, order);
    let t = generator_block_matrix(ctx, order);
    let tt = br.invert(&t)?;
    let z = block_matrix_z(&br, &t)?;
    let sr = br.yq.series;
    let tr = TensorRing::new(&sr, 2, 2);
    let lam0 = tr.lift(&build_operator(OperatorName::Lambda, 2, 0, 1, 2));
    let n = ctx.n();
    let cells: Vec<(usize, usize)> = (1..=n).flat_map(|b| (1..=n).map(move |c| (b, c))).collect();
    Ok(cells
        .par_iter()
        .map(|&(b, c)| {
            let mut lhs = SuperTensor::zero(2, 2);
            for p in 1..=n {
                let x = t.block(p, b);
                let y = tt.block(c, p);
                let x1 = place_matrix(&sr, 2, 2, 0, |i, j| yq_entry(&sr, &x.a, &x.b, i, j));
                let y2 = tau_on_factor(&sr, &place_matrix(&sr, 2, 2, 1, |i, j| yq_entry(&sr, &y.a, &y.b, i, j)), 1);
                lhs = tr.add(&lhs, &tr.mul(&tr.mul(&lam0, &x1), &y2));
            }
            let rhs = if b == c { tr.mul_coeff_right(&lam0, &z) } else { SuperTensor::zero(2, 2) };
            LambdaResult { name: format!("lambda.block[{b},{c}]"), pass: tensor_is_zero(&tr, &tr.sub(&lhs, &rhs)) }
        })
        .collect())
}

/// `ev(z(u))` in the defining representation compared with supertraces of
/// powers of `G = Σ (−1)^{|j|} E_{ij} ⊗ g_{ji}`.
#[derive(Debug, Clone, PartialEq)]
pub struct EvCorollary {
    /// Rank.
    pub n: usize,
    /// Largest `k` compared.
    pub k_max: usize,
    /// Coefficients of `ev(z(u))`, computed from the numeric `T(u)`, up to `u^{−k_max−1}`.
    pub ev_z: Vec<DenseMatrix>,
    /// For `k = 1..=k_max`: does the `u^{−k−1}` coefficient equal `str G^{k+1}`?
    pub stated: Vec<bool>,
    /// For `k = 1..=k_max`: does the `u^{−k−1}` coefficient equal `str G^k`?
    pub shifted: Vec<bool>,
    /// Whether the `u^{−1}` coefficient vanishes.
    pub first_vanishes: bool,
}

impl EvCorollary {
    /// True if `ev(z) = 1 + Σ_{k≥1} str G^{k+1} u^{−k−1}` through `k_max`.
    pub fn stated_holds(&self) -> bool {
        self.first_vanishes && self.stated.iter().all(|&b| b)
    }

    /// True if `ev(z) = 1 + Σ_{k≥1} str G^k u^{−k−1}` through `k_max`.
    pub fn shifted_holds(&self) -> bool {
        self.first_vanishes && self.shifted.iter().all(|&b| b)
    }
}

/// Computes `ev(z(u)) = 1 − str(ev T(u) ∂ ev T̃(u))` exactly over `End(C^{n|n})`
/// and compares coefficient `k + 1` with `str G^{k+1}` and `str G^k`
/// for `k = 1..=k_max`.
pub fn ev_center_corollary(n: usize, k_max: usize) -> Result<EvCorollary, CenterError> {
    let dim = 2 * n;
    let mr = MatrixRing { dim };
    let order = k_max + 1;
    let br = BlockRing::new(&mr, order);
    let z = block_matrix_z(&br, &defining_block_matrix(n, order))?;
    let tr = TensorRing::new(&mr, 1, dim);
    let label = |p: usize| yq_core::index_at_position(p as u32);
    let g = place_matrix(&mr, 1, dim, 0, |p, q| {
        let m = g_matrix(n, label(q), label(p));
        if label_parity(label(q)).is_odd() {
            mr.neg(&m)
        } else {
            m
        }
    });
    let mut powers = vec![tr.one(), g.clone()];
    for k in 2..=order {
        let next = tr.mul(&powers[k - 1], &g);
        powers.push(next);
    }
    let strs: Vec<DenseMatrix> = powers.iter().map(|p| supertrace(&mr, p)).collect();
    let coeff = |k: usize| z.coeff(k).clone();
    Ok(EvCorollary {
        n,
        k_max,
        ev_z: z.coeffs().to_vec(),
        stated: (1..=k_max).map(|k| coeff(k + 1) == strs[k + 1]).collect(),
        shifted: (1..=k_max).map(|k| coeff(k + 1) == strs[k]).collect(),
        first_vanishes: coeff(1).is_zero(),
    })
}

/// The Berezinian data of one diagonal block.
#[derive(Debug, Clone, PartialEq)]
pub struct BerezinianFactor<E> {
    /// Block index `a`.
    pub a: usize,
    /// `C_a(u) = h_a(u) h̃_a(−u)` with `h̃_a` the `(1,1)` entry of `H_a(u)^{-1}`.
    pub c: TruncSeries<E>,
    /// `D_a(u)`, solved from `C_a(u) − C_a(−u) = 4u D_a(u)`.
    pub d: TruncSeries<E>,
    /// Whether `1 − str(H_a ∂H̃_a) = C_a(u)C_a(−u) − D_a(u)D_a(−u)`.
    pub pass: bool,
}

/// Checks `z_a(u) = C_a(u)C_a(−u) − D_a(u)D_a(−u)` for every diagonal Gauss
/// block `H_a`.  `D_a` has zero constant term and coefficients
/// `d_{k+1} = c_k / 2` for odd `k`.
pub fn berezinian_check<R: Ring>(
    br: &BlockRing<'_, R>,
    blocks: &[YQMatrix<R::Elem>],
) -> Result<Vec<BerezinianFactor<R::Elem>>, CenterError> {
    let ring = br.yq.inner();
    let s = &br.yq.series;
    let order = br.yq.order();
    let quarter = Scalar::new(1, 4);
    blocks
        .iter()
        .enumerate()
        .map(|(i, h)| {
            let za = diagonal_block_z(br, h)?;
            let ht = br.yq.invert(h)?.a;
            let c = s.mul(&h.a, &ht.substitute_neg(ring));
            let odd_part = s.sub(&c, &c.substitute_neg(ring));
            if (0..=order).step_by(2).any(|k| !ring.is_zero(odd_part.coeff(k))) {
                return Err(SeriesError::NotDivisibleByX.into());
            }
            let d = TruncSeries::from_fn(order, |k| if k == 0 { ring.zero() } else { ring.scale(&quarter, odd_part.coeff(k - 1)) });
            let rhs = s.sub(&s.mul(&c, &c.substitute_neg(ring)), &s.mul(&d, &d.substitute_neg(ring)));
            let pass = s.is_zero(&s.sub(&rhs, &za));
            Ok(BerezinianFactor { a: i + 1, c, d, pass })
        })
        .collect()
}
