//! The supertrace and Gauss-product formulas for `z(u)`.

use yq_core::{Ring, SuperPoly};
use yq_gauss::{generator_block_matrix, yangian_gauss, BlockMatrix, BlockRing, GaussData, YQMatrix};
use yq_rtt::YangianContext;
use yq_series::{SeriesRing, TruncSeries};

use crate::CenterError;

/// The central series `z(u) = 1 + Σ z_r u^{-r}` of `Y(q_n)`, truncated.
#[derive(Debug, Clone, PartialEq)]
pub struct CentralSeries {
    /// Coefficients `z_0 = 1, z_1, …, z_L` in PBW normal form.
    pub z: TruncSeries<SuperPoly>,
}

impl CentralSeries {
    /// Truncation order `L`.
    pub fn order(&self) -> usize {
        self.z.order()
    }

    /// The coefficient `z_r`.
    pub fn coeff(&self, r: usize) -> &SuperPoly {
        self.z.coeff(r)
    }

    /// True if the constant term is `1`.
    pub fn is_unital(&self) -> bool {
        self.z.coeff(0) == &SuperPoly::one()
    }

    /// Indices `r` of odd coefficients that do not vanish (empty when
    /// `z(u) = z(−u)` holds to the truncation order).
    pub fn nonzero_odd_coefficients(&self) -> Vec<usize> {
        (1..=self.order()).step_by(2).filter(|&r| !self.z.coeff(r).is_zero()).collect()
    }

    /// Coefficients in canonical text form, `z_0` first.
    pub fn coefficient_texts(&self) -> Vec<String> {
        self.z.coeffs().iter().map(SuperPoly::to_canonical_string).collect()
    }
}

/// `∂X` of a YQ matrix, stored as the YQ matrix of componentwise derivatives.
///
/// The true derivative is `X_YQ(a', b') · diag(1, −1)` because the `−u`
/// entries pick up the chain-rule sign; callers account for that in the
/// supertrace.
fn derivative_parts<R: Ring>(ring: &R, x: &YQMatrix<R::Elem>) -> YQMatrix<R::Elem> {
    YQMatrix::new(x.a.derivative(ring), x.b.derivative(ring))
}

/// `1 − str(X(u) ∂X̃(u))` for a block matrix `X = 1 + O(u^{-1})` of YQ blocks.
///
/// With `M = X · D`, where `D` holds the componentwise derivatives of the
/// blocks of `X̃`, the diagonal block `(a, a)` of `X ∂X̃` is
/// `M_aa · diag(1, −1)`, whose supertrace is `m_aa(u) + m_aa(−u)`.
pub fn block_matrix_z<R: Ring>(br: &BlockRing<'_, R>, x: &BlockMatrix<R::Elem>) -> Result<TruncSeries<R::Elem>, CenterError> {
    let ring = br.yq.inner();
    let s: &SeriesRing<'_, R> = &br.yq.series;
    let inv = br.invert(x)?;
    let mut acc = s.one();
    for a in 1..=x.n() {
        let mut m = br.yq.zero();
        for c in 1..=x.n() {
            m = br.yq.add(&m, &br.yq.mul(x.block(a, c), &derivative_parts(ring, inv.block(c, a))));
        }
        acc = s.sub(&acc, &s.add(&m.a, &m.a.substitute_neg(ring)));
    }
    Ok(acc)
}

/// The rank-one factor `z_a(u) = 1 − str(H_a(u) ∂H̃_a(u))`.
pub fn diagonal_block_z<R: Ring>(br: &BlockRing<'_, R>, h: &YQMatrix<R::Elem>) -> Result<TruncSeries<R::Elem>, CenterError> {
    block_matrix_z(br, &BlockMatrix::from_fn(1, |_, _| h.clone()))
}

fn check_order(order: usize) -> Result<(), CenterError> {
    if order < 2 {
        Err(CenterError::OrderTooSmall(order))
    } else {
        Ok(())
    }
}

/// `z(u) = 1 − str(T(u) ∂T̃(u))` at truncation order `L`.
///
/// The derivative is exact to order `L` (coefficient `k` of `∂s` only needs
/// `s_{k−1}`), so no extra working precision is required.
pub fn z_from_supertrace(ctx: &YangianContext, order: usize) -> Result<CentralSeries, CenterError> {
    check_order(order)?;
    let br = BlockRing::new(ctx, order);
    let z = block_matrix_z(&br, &generator_block_matrix(ctx, order))?;
    Ok(CentralSeries { z })
}

/// `z(u) = Π_a (1 − str(H_a(u) ∂H̃_a(u)))` from the Gauss factors `H_a`.
///
/// Returns the series and the individual factors.  The factors commute
/// (they are central in mutually commuting subalgebras), so the product is
/// taken in the order `a = 1, …, n`.
pub fn z_from_product(ctx: &YangianContext, order: usize) -> Result<(CentralSeries, Vec<TruncSeries<SuperPoly>>), CenterError> {
    check_order(order)?;
    let gd: GaussData<SuperPoly> = yangian_gauss(ctx, order)?;
    let br = BlockRing::new(ctx, order);
    let factors = gd.h.iter().map(|h| diagonal_block_z(&br, h)).collect::<Result<Vec<_>, _>>()?;
    let s = &br.yq.series;
    let z = factors.iter().fold(s.one(), |acc, f| s.mul(&acc, f));
    Ok((CentralSeries { z }, factors))
}
