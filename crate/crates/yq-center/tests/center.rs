//! The central series: route agreement, evenness, centrality, the
//! Λ-identity, the evaluation image and the Berezinian factors.

use yq_center::{
    berezinian_check, blockwise_lambda_identity, centrality_matrix, ev_center_corollary, factor_centrality,
    lambda_identity, z_from_product, z_from_supertrace, CenterError,
};
use yq_core::{Ring, SuperPoly};
use yq_gauss::{defining_block_matrix, yangian_gauss, BlockRing};
use yq_rtt::{ev_poly, MatrixRing, YangianContext};

#[test]
fn routes_agree_and_are_even() {
    for (n, order) in [(1, 6), (2, 5)] {
        let ctx = YangianContext::new(n);
        let z = z_from_supertrace(&ctx, order).unwrap();
        let (zp, factors) = z_from_product(&ctx, order).unwrap();
        assert_eq!(z, zp, "n={n}");
        assert!(z.is_unital());
        assert!(z.nonzero_odd_coefficients().is_empty(), "n={n}");
        assert!(!z.coeff(2).is_zero());
        for f in &factors {
            assert!((1..=order).step_by(2).all(|r| f.coeff(r).is_zero()));
        }
    }
}

#[test]
fn leading_coefficient_is_minus_twice_the_diagonal_sum() {
    // z_2 = −2 Σ_a t_aa^{(1)}: from T∂T̃ = −u^{-2}(T^{(1)}) + …, whose
    // supertrace doubles the even diagonal (odd rows carry t_aa(−u)).
    let ctx = YangianContext::new(2);
    let z = z_from_supertrace(&ctx, 3).unwrap();
    let mut want = SuperPoly::zero();
    for a in 1..=2 {
        want = want.add(&ctx.t(a, a, 1).unwrap().scale(&yq_core::Scalar::int(-2)));
    }
    assert_eq!(z.coeff(2), &want);
}

#[test]
fn coefficients_are_central() {
    for (n, order) in [(1, 6), (2, 5)] {
        let ctx = YangianContext::new(n);
        let z = z_from_supertrace(&ctx, order).unwrap();
        let cells = centrality_matrix(&ctx, &z, 6);
        assert!(cells.iter().all(|c| c.r + c.generator.level() as usize <= 6));
        assert!(cells.iter().any(|c| c.r == 4));
        let bad: Vec<_> = cells.iter().filter(|c| !c.commutes).collect();
        assert!(bad.is_empty(), "n={n}: {bad:?}");
    }
}

#[test]
fn a_non_central_element_is_detected() {
    // t_11^{(2)} does not commute with t_12^{(1)}; the matrix must say so.
    let ctx = YangianContext::new(2);
    let mut z = z_from_supertrace(&ctx, 3).unwrap();
    let fake = ctx.t(1, 1, 2).unwrap();
    z.z = yq_series::TruncSeries::from_fn(3, |k| if k == 2 { fake.clone() } else { z.coeff(k).clone() });
    let cells = centrality_matrix(&ctx, &z, 3);
    assert!(cells.iter().any(|c| c.r == 2 && !c.commutes));
}

#[test]
fn factors_are_central_in_their_blocks() {
    let ctx = YangianContext::new(2);
    let gd = yangian_gauss(&ctx, 5).unwrap();
    let (_, factors) = z_from_product(&ctx, 5).unwrap();
    for (i, f) in factors.iter().enumerate() {
        assert!(factor_centrality(&ctx, &gd, i + 1, f, 5));
    }
}

#[test]
fn lambda_identity_holds() {
    assert!(lambda_identity(&YangianContext::new(1), 5).unwrap().pass);
    assert!(lambda_identity(&YangianContext::new(2), 4).unwrap().pass);
    let blocks = blockwise_lambda_identity(&YangianContext::new(2), 4).unwrap();
    assert_eq!(blocks.len(), 4);
    assert!(blocks.iter().all(|b| b.pass), "{blocks:?}");
}

#[test]
fn evaluation_image_is_a_power_sum_of_g() {
    for n in 1..=3 {
        let ev = ev_center_corollary(n, 6).unwrap();
        assert!(ev.first_vanishes);
        assert!(ev.shifted_holds(), "n={n}");
        // The form with exponent k + 1 on the u^{-k-1} coefficient does not hold.
        assert!(!ev.stated_holds(), "n={n}");
    }
}

#[test]
fn symbolic_and_numeric_center_agree_under_ev() {
    for (n, order) in [(1, 6), (2, 4)] {
        let ctx = YangianContext::new(n);
        let z = z_from_supertrace(&ctx, order).unwrap();
        let ev = ev_center_corollary(n, order - 1).unwrap();
        for r in 0..=order {
            assert_eq!(ev_poly(n, z.coeff(r)), ev.ev_z[r], "n={n} r={r}");
        }
    }
}

#[test]
fn berezinian_form_of_the_factors() {
    let ctx = YangianContext::new(1);
    let gd = yangian_gauss(&ctx, 6).unwrap();
    let factors = berezinian_check(&BlockRing::new(&ctx, 6), &gd.h).unwrap();
    assert_eq!(factors.len(), 1);
    assert!(factors[0].pass);
    assert!(factors[0].d.coeff(0).is_zero());
    // Numerically, in every rank, through the Gauss factors of ev(T).
    for n in 1..=3 {
        let mr = MatrixRing { dim: 2 * n };
        let br = BlockRing::new(&mr, 6);
        let gd = br.gauss_elimination(&defining_block_matrix(n, 6)).unwrap();
        let fs = berezinian_check(&br, &gd.h).unwrap();
        assert!(fs.iter().all(|f| f.pass && mr.is_zero(f.d.coeff(0))), "n={n}");
    }
}

#[test]
fn order_below_two_is_rejected() {
    let ctx = YangianContext::new(1);
    assert_eq!(z_from_supertrace(&ctx, 1).unwrap_err(), CenterError::OrderTooSmall(1));
    assert!(z_from_product(&ctx, 0).is_err());
}
