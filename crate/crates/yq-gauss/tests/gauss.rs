//! Gauss decomposition: both routes, reconstruction, invariants, the numeric
//! oracle and ω.

use std::time::Instant;

use yq_core::{FreeRing, GenSymbol, Ring, SuperPoly};
use yq_gauss::*;
use yq_rtt::{ev_poly, DenseMatrix, MatrixRing, YangianContext};
use yq_series::{SeriesRing, TruncSeries};

const FREE: FreeRing = FreeRing { trunc: 1000 };

fn free_series(row: i32, col: i32, order: usize, unit: bool) -> TruncSeries<SuperPoly> {
    TruncSeries::from_fn(order, |k| {
        if k == 0 {
            if unit { SuperPoly::one() } else { SuperPoly::zero() }
        } else {
            SuperPoly::gen(GenSymbol::new(row, col, k as u32).unwrap())
        }
    })
}

fn free_yq(col: i32, order: usize) -> YQMatrix<SuperPoly> {
    YQMatrix::new(free_series(1, col, order, true), free_series(-1, col, order, false))
}

/// Full 2×2 product with the super matrix sign `(−1)^{(|i|+|k|)(|k|+|j|)}`.
fn full_product(
    yq: &YQRing<'_, FreeRing>,
    x: &YQMatrix<SuperPoly>,
    y: &YQMatrix<SuperPoly>,
    i: i32,
    j: i32,
) -> TruncSeries<SuperPoly> {
    let s = &yq.series;
    let mut acc = s.zero();
    for k in [1, -1] {
        let sign = ((i < 0) ^ (k < 0)) && ((k < 0) ^ (j < 0));
        let t = s.mul(&yq.entry(x, i, k), &yq.entry(y, k, j));
        acc = if sign { s.sub(&acc, &t) } else { s.add(&acc, &t) };
    }
    acc
}

#[test]
fn yq_product_matches_full_expansion() {
    let yq = YQRing::new(&FREE, 4);
    let x = free_yq(1, 4);
    let y = free_yq(2, 4);
    let p = yq.mul(&x, &y);
    for (i, j) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
        let want = full_product(&yq, &x, &y, i, j);
        assert!(yq.series.is_zero(&yq.series.sub(&yq.entry(&p, i, j), &want)), "entry ({i},{j})");
    }
    assert!(yq.equal(&yq.mul(&x, &yq.one()), &x));
}

#[test]
fn yq_product_is_associative() {
    let yq = YQRing::new(&FREE, 4);
    let (x, y, z) = (free_yq(1, 4), free_yq(2, 4), free_yq(3, 4));
    assert!(yq.equal(&yq.mul(&yq.mul(&x, &y), &z), &yq.mul(&x, &yq.mul(&y, &z))));
}

#[test]
fn yq_inverse_multiplies_back() {
    let yq = YQRing::new(&FREE, 6);
    let x = free_yq(1, 6);
    let inv = yq.invert(&x).unwrap();
    assert!(yq.equal(&yq.mul(&x, &inv), &yq.one()));
    assert!(yq.equal(&yq.mul(&inv, &x), &yq.one()));
    assert!(yq.equal(&yq.invert(&inv).unwrap(), &x));
    assert!(yq.equal(&yq.invert(&yq.one()).unwrap(), &yq.one()));
}

#[test]
fn yq_inverse_rejects_bad_leading_term() {
    let yq = YQRing::new(&FREE, 3);
    let x = YQMatrix::new(free_series(1, 1, 3, false), free_series(-1, 1, 3, false));
    assert!(matches!(yq.invert(&x), Err(GaussError::Precondition(_))));
}

#[test]
fn block_inverse_symbolic_and_numeric() {
    let ctx = YangianContext::new(2);
    let br = BlockRing::new(&ctx, 5);
    let t = generator_block_matrix(&ctx, 5);
    let inv = br.invert(&t).unwrap();
    assert!(br.equal(&br.mul(&t, &inv), &br.identity(2)));
    assert!(br.equal(&br.mul(&inv, &t), &br.identity(2)));
    assert!(br.equal(&br.invert(&br.identity(2)).unwrap(), &br.identity(2)));

    let mr = MatrixRing { dim: 4 };
    let nr = BlockRing::new(&mr, 5);
    let num_inv = nr.invert(&defining_block_matrix(2, 5)).unwrap();
    for a in 1..=2 {
        for b in 1..=2 {
            for k in 0..=5 {
                assert_eq!(ev_poly(2, inv.block(a, b).a.coeff(k)), *num_inv.block(a, b).a.coeff(k));
                assert_eq!(ev_poly(2, inv.block(a, b).b.coeff(k)), *num_inv.block(a, b).b.coeff(k));
            }
        }
    }
}

#[test]
fn quasi_determinant_examples() {
    let ctx = YangianContext::new(2);
    let br = BlockRing::new(&ctx, 4);
    let t = generator_block_matrix(&ctx, 4);
    assert_eq!(br.quasi_determinant(&t, 0, 1, 1).unwrap(), t.block(1, 1).clone());
    let yq = &br.yq;
    let want = yq.sub(t.block(2, 2), &yq.mul(&yq.mul(t.block(2, 1), &yq.invert(t.block(1, 1)).unwrap()), t.block(1, 2)));
    assert!(yq.equal(&br.quasi_determinant(&t, 1, 2, 2).unwrap(), &want));
    assert!(br.quasi_determinant(&t, 2, 2, 2).is_err());
}

fn check_gauss(n: usize, order: usize) {
    let ctx = YangianContext::new(n);
    let br = BlockRing::new(&ctx, order);
    let t = generator_block_matrix(&ctx, order);
    let q = br.gauss_quasideterminant(&t).unwrap();
    let e = br.gauss_elimination(&t).unwrap();
    assert!(br.check_invariants(&q), "invariants n={n}");
    assert!(br.gauss_equal(&q, &e), "routes agree n={n}");
    assert!(br.equal(&br.reconstruct(&q), &t), "F H E = T n={n}");
    assert!(numeric_factor_mismatches(n, &q, order).unwrap().is_empty(), "numeric factors n={n}");
}

#[test]
fn gauss_rank_one() {
    let ctx = YangianContext::new(1);
    let gd = yangian_gauss(&ctx, 6).unwrap();
    for k in 0..=6 {
        assert_eq!(gd.h(1).coeff(k), &ctx.t(1, 1, k as u32).unwrap());
        assert_eq!(gd.hbar(1).coeff(k), &ctx.t(-1, 1, k as u32).unwrap());
    }
    check_gauss(1, 6);
}

#[test]
fn gauss_rank_two() {
    check_gauss(2, 6);
    let ctx = YangianContext::new(2);
    let gd = yangian_gauss(&ctx, 3).unwrap();
    assert_eq!(gd.e(1).coeff(1), &ctx.t(1, 2, 1).unwrap());
    assert_eq!(gd.ebar(1).coeff(1), &ctx.t(-1, 2, 1).unwrap());
    assert_eq!(gd.f(1).coeff(1), &ctx.t(2, 1, 1).unwrap());
}

#[test]
fn gauss_rank_three() {
    check_gauss(3, 4);
}

#[test]
fn perturbed_factor_breaks_reconstruction() {
    let ctx = YangianContext::new(2);
    let br = BlockRing::new(&ctx, 4);
    let t = generator_block_matrix(&ctx, 4);
    let mut gd = br.gauss_quasideterminant(&t).unwrap();
    let mut coeffs = gd.h[1].a.coeffs().to_vec();
    coeffs[2] = ctx.add(&coeffs[2], &ctx.t(1, 1, 1).unwrap());
    gd.h[1].a = TruncSeries::from_coeffs(coeffs);
    assert!(!br.equal(&br.reconstruct(&gd), &t));
}

#[test]
fn leading_terms_match_generator_matrix() {
    let ctx = YangianContext::new(3);
    let order = 4;
    let gd = yangian_gauss(&ctx, order).unwrap();
    let low = |p: &SuperPoly, r: usize| p.iter().all(|(m, _)| (m.loop_degree() as usize) + 1 < r);
    for r in 1..=order {
        for a in 1..=3usize {
            let ai = a as i32;
            let d = ctx.sub(gd.h(a).coeff(r), &ctx.t(ai, ai, r as u32).unwrap());
            assert!(low(&d, r), "h[{a}]^({r})");
            for b in a + 1..=3 {
                let bi = b as i32;
                let d = ctx.sub(gd.series(SeriesName::E(a, b)).coeff(r), &ctx.t(ai, bi, r as u32).unwrap());
                assert!(low(&d, r), "e[{a},{b}]^({r})");
                let d = ctx.sub(gd.series(SeriesName::F(b, a)).coeff(r), &ctx.t(bi, ai, r as u32).unwrap());
                assert!(low(&d, r), "f[{b},{a}]^({r})");
            }
        }
    }
}

#[test]
fn root_elements_have_expected_leading_terms() {
    let ctx = YangianContext::new(3);
    let gd = yangian_gauss(&ctx, 3).unwrap();
    // e_{13}^{(1)} = [e_1^{(1)}, e_2^{(1)}] = [t_12^{(1)}, t_23^{(1)}] = t_13^{(1)} up to sign by the bracket of q_n.
    let e13 = root_element(&ctx, &gd, 1, 3, 1, false);
    let ev = ev_poly(3, &e13);
    let want = ev_poly(3, &ctx.bracket(&ctx.t(1, 2, 1).unwrap(), &ctx.t(2, 3, 1).unwrap()));
    assert_eq!(ev, want);
    assert!(!e13.is_zero());
}

#[test]
fn omega_families_rank_two() {
    let ctx = YangianContext::new(2);
    let gd = yangian_gauss(&ctx, 4).unwrap();
    for r in omega_checks(&ctx, &gd) {
        assert!(r.pass, "{}", r.name);
    }
}

#[test]
fn omega_families_rank_three() {
    let start = Instant::now();
    let ctx = YangianContext::new(3);
    let gd = yangian_gauss(&ctx, 5).unwrap();
    let res = omega_checks(&ctx, &gd);
    assert_eq!(res.len(), 6 + 4 * 3);
    for r in res {
        assert!(r.pass, "{}", r.name);
    }
    eprintln!("omega n=3 L=5: {:?}", start.elapsed());
}

#[test]
fn canonical_text_is_deterministic() {
    let ctx = YangianContext::new(2);
    let gd = yangian_gauss(&ctx, 2).unwrap();
    let a = gauss_to_text(&gd, poly_text);
    let b = gauss_to_text(&yangian_gauss(&YangianContext::new(2), 2).unwrap(), poly_text);
    assert_eq!(a, b);
    assert!(a.contains("h[1]^(1) = 1 * t[1,1,1]"), "{a}");
}

#[test]
fn numeric_series_ring_is_consistent() {
    let mr = MatrixRing { dim: 2 };
    let s = SeriesRing::new(&mr, 3);
    let one = s.one();
    assert_eq!(one.coeff(0), &DenseMatrix::identity(2));
}
