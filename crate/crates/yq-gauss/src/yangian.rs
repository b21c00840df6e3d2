//! Gauss data of the generator matrix of `Y(q_n)` and of its image in the
//! defining representation.

use yq_core::{Ring, SuperPoly};
use yq_rtt::{ev_defining, ev_poly, omega, DenseMatrix, MatrixRing, YangianContext};
use yq_series::TruncSeries;

use crate::block::{BlockMatrix, BlockRing};
use crate::gauss::{GaussData, SeriesName};
use crate::yq::YQMatrix;
use crate::GaussError;

/// `T(u)` with blocks `T_{ab} = (t_{ab}(u), t_{−a,b}(u))` truncated at `order`.
pub fn generator_block_matrix(ctx: &YangianContext, order: usize) -> BlockMatrix<SuperPoly> {
    let series = |i: i32, j: i32| TruncSeries::from_fn(order, |r| ctx.t(i, j, r as u32).expect("valid index"));
    BlockMatrix::from_fn(ctx.n(), |a, b| {
        let (a, b) = (a as i32, b as i32);
        YQMatrix::new(series(a, b), series(-a, b))
    })
}

/// The image of `T(u)` under `ev` in the defining representation, with
/// coefficients in `End(C^{n|n})`.
pub fn defining_block_matrix(n: usize, order: usize) -> BlockMatrix<DenseMatrix> {
    let series = |i: i32, j: i32| {
        let cs = ev_defining(n, i, j);
        TruncSeries::from_fn(order, |r| if r < cs.len() { cs[r].clone() } else { DenseMatrix::zero(2 * n) })
    };
    BlockMatrix::from_fn(n, |a, b| {
        let (a, b) = (a as i32, b as i32);
        YQMatrix::new(series(a, b), series(-a, b))
    })
}

/// Gauss decomposition of the generator matrix (quasi-determinant route).
pub fn yangian_gauss(ctx: &YangianContext, order: usize) -> Result<GaussData<SuperPoly>, GaussError> {
    let br = BlockRing::new(ctx, order);
    br.gauss_quasideterminant(&generator_block_matrix(ctx, order))
}

/// Compares the `ev`-images of the symbolic Gauss factors with the Gauss
/// factors of the numeric matrix `ev(T(u))`; returns the names that differ.
pub fn numeric_factor_mismatches(
    n: usize,
    symbolic: &GaussData<SuperPoly>,
    order: usize,
) -> Result<Vec<SeriesName>, GaussError> {
    let mr = MatrixRing { dim: 2 * n };
    let br = BlockRing::new(&mr, order);
    let numeric = br.gauss_elimination(&defining_block_matrix(n, order))?;
    let mut bad = Vec::new();
    for name in GaussData::<SuperPoly>::names(n) {
        let s = symbolic.series(name);
        let m = numeric.series(name);
        let same = (0..=order).all(|k| ev_poly(n, s.coeff(k)) == *m.coeff(k));
        if !same {
            bad.push(name);
        }
    }
    Ok(bad)
}

/// The higher root elements: `e_{a,a+1}^{(r)} = e_a^{(r)}` and
/// `e_{a,b}^{(r)} = [e_{a,b−1}^{(r)}, e_{b−1}^{(1)}]` (and likewise for `ē`
/// with the odd series in the first slot).
pub fn root_element(ctx: &YangianContext, gd: &GaussData<SuperPoly>, a: usize, b: usize, r: usize, bar: bool) -> SuperPoly {
    assert!(a < b && b <= gd.n(), "root element needs a < b ≤ n");
    if b == a + 1 {
        return if bar { gd.ebar(a).coeff(r).clone() } else { gd.e(a).coeff(r).clone() };
    }
    let prev = root_element(ctx, gd, a, b - 1, r, bar);
    ctx.bracket(&prev, gd.e(b - 1).coeff(1))
}

/// Applies `ω` coefficient-wise to a series.
pub fn omega_series(ctx: &YangianContext, s: &TruncSeries<SuperPoly>) -> TruncSeries<SuperPoly> {
    s.map(|c| omega(ctx, c))
}

/// Outcome of one ω family check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaResult {
    /// Family label, e.g. `omega(ebar[1,2](u)) = fbar[2,1](-u)`.
    pub name: String,
    /// Whether the identity holds to truncation.
    pub pass: bool,
}

/// Checks the six families `ω(h_c(u)) = h_c(u)`, `ω(e_{ab}(u)) = f_{ba}(u)`,
/// `ω(f_{ba}(u)) = e_{ab}(u)`, `ω(h̄_c(u)) = h̄_c(−u)`,
/// `ω(ē_{ab}(u)) = f̄_{ba}(−u)`, `ω(f̄_{ba}(u)) = ē_{ab}(−u)` for all
/// `1 ≤ a < b ≤ n`, `1 ≤ c ≤ n`.
pub fn omega_checks(ctx: &YangianContext, gd: &GaussData<SuperPoly>) -> Vec<OmegaResult> {
    let n = gd.n();
    let eq = |x: &TruncSeries<SuperPoly>, y: &TruncSeries<SuperPoly>| x.sub(ctx, y).is_zero(ctx);
    let neg = |x: &TruncSeries<SuperPoly>| x.substitute_neg(ctx);
    let mut out = Vec::new();
    let mut push = |name: String, pass: bool| out.push(OmegaResult { name, pass });
    for c in 1..=n {
        push(format!("omega(h[{c}](u)) = h[{c}](u)"), eq(&omega_series(ctx, gd.h(c)), gd.h(c)));
        push(format!("omega(hbar[{c}](u)) = hbar[{c}](-u)"), eq(&omega_series(ctx, gd.hbar(c)), &neg(gd.hbar(c))));
    }
    for a in 1..=n {
        for b in a + 1..=n {
            let e = gd.series(SeriesName::E(a, b));
            let eb = gd.series(SeriesName::EBar(a, b));
            let f = gd.series(SeriesName::F(b, a));
            let fb = gd.series(SeriesName::FBar(b, a));
            push(format!("omega(e[{a},{b}](u)) = f[{b},{a}](u)"), eq(&omega_series(ctx, e), f));
            push(format!("omega(f[{b},{a}](u)) = e[{a},{b}](u)"), eq(&omega_series(ctx, f), e));
            push(format!("omega(ebar[{a},{b}](u)) = fbar[{b},{a}](-u)"), eq(&omega_series(ctx, eb), &neg(fb)));
            push(format!("omega(fbar[{b},{a}](u)) = ebar[{a},{b}](-u)"), eq(&omega_series(ctx, fb), &neg(eb)));
        }
    }
    out
}

/// Formats a SuperPoly coefficient for [`crate::gauss_to_text`], skipping zeros.
pub fn poly_text(p: &SuperPoly) -> Option<String> {
    if p.is_zero() {
        None
    } else {
        Some(p.to_canonical_string())
    }
}
