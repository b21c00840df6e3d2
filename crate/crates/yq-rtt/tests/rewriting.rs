//! Rewriting: rule correctness, confluence, and the evaluation oracle.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use yq_core::{GenSymbol, Monomial, Scalar, SuperPoly};
use yq_rtt::{ev_poly, reduce, Strategy, YangianContext};

fn word(gs: &[GenSymbol]) -> SuperPoly {
    SuperPoly::term(Monomial::from_slice(gs), Scalar::ONE)
}

fn random_word(rng: &mut ChaCha8Rng, n: usize, max_degree: u32) -> Vec<GenSymbol> {
    let mut budget = rng.gen_range(1..=max_degree);
    let mut w = Vec::new();
    while budget > 0 {
        let level = rng.gen_range(1..=budget);
        budget -= level;
        let row = rng.gen_range(1..=n as i32) * if rng.gen_bool(0.5) { 1 } else { -1 };
        let col = rng.gen_range(1..=n as i32);
        w.push(GenSymbol::new(row, col, level).unwrap());
    }
    w
}

/// Independent oracle: multiplying the component relation by `u² − v²`
/// clears denominators, so for `C_{r,s} = [t_{ij}^{(r)}, t_{kl}^{(s)}]`
/// the free-algebra identity
/// `θ(C_{a+2,b} − C_{a,b+2}) = N₁_{a+1,b} + N₁_{a,b+1} − (−1)^{|k|}(N₂_{a+1,b} − N₂_{a,b+1})`
/// must hold, where `N₁, N₂` are the numerator coefficients.
#[test]
fn raw_rules_satisfy_cleared_relation() {
    for n in 1..=2usize {
        let ctx = YangianContext::new(n);
        let nn = n as i32;
        let idx: Vec<i32> = (1..=nn).flat_map(|a| [a, -a]).collect();
        let free = u32::MAX;
        for &i in &idx {
            for j in 1..=nn {
                for &k in &idx {
                    for l in 1..=nn {
                        let comm = |r: u32, s: u32| -> SuperPoly {
                            if r == 0 || s == 0 {
                                return SuperPoly::zero();
                            }
                            let g1 = GenSymbol::new(i, j, r).unwrap();
                            let g2 = GenSymbol::new(k, l, s).unwrap();
                            // The raw correction is C_{r,s} itself.
                            ctx.raw_correction(g1, g2)
                        };
                        let t = |a: i32, b: i32, r: u32| ctx.t(a, b, r).unwrap();
                        let n1 = |p: u32, q: u32| {
                            t(k, j, p).multiply(&t(i, l, q), free).sub(&t(k, j, q).multiply(&t(i, l, p), free))
                        };
                        let n2 = |p: u32, q: u32| {
                            t(-k, j, p).multiply(&t(-i, l, q), free).sub(&t(k, -j, q).multiply(&t(i, -l, p), free))
                        };
                        let sigma = Scalar::sign(k < 0);
                        for a in 0..=3u32 {
                            for b in 0..=3u32 {
                                let theta = Scalar::sign(i < 0 && k < 0);
                                let lhs = comm(a + 2, b).sub(&comm(a, b + 2)).scale(&theta);
                                let rhs = n1(a + 1, b)
                                    .add(&n1(a, b + 1))
                                    .sub(&n2(a + 1, b).sub(&n2(a, b + 1)).scale(&sigma));
                                assert_eq!(lhs, rhs, "i={i} j={j} k={k} l={l} a={a} b={b}");
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn rules_have_lower_degree_corrections() {
    let ctx = YangianContext::new(2);
    let gens = ctx.generators(3);
    for &g1 in &gens {
        for &g2 in &gens {
            if let Ok(rule) = ctx.rule(g1, g2) {
                assert!(rule.correction.degree() < g1.level() + g2.level());
                assert!(rule.correction.iter().all(|(m, _)| m.is_ordered()));
            }
        }
    }
}

#[test]
fn ordered_pair_has_no_rule() {
    let ctx = YangianContext::new(2);
    let a = GenSymbol::new(1, 1, 1).unwrap();
    let b = GenSymbol::new(2, 2, 1).unwrap();
    assert!(ctx.generate_rewrite_rule(a, b).is_err());
    assert!(ctx.generate_rewrite_rule(a, a).is_err());
}

#[test]
fn disjoint_support_rule_is_pure_swap() {
    // t_{11}^{(1)} and t_{22}^{(1)} in Y(q_2): every δ in the correction vanishes.
    let ctx = YangianContext::new(2);
    let a = GenSymbol::new(1, 1, 1).unwrap();
    let b = GenSymbol::new(2, 2, 1).unwrap();
    assert_eq!(ctx.generate_rewrite_rule(b, a).unwrap(), word(&[a, b]));
}

#[test]
fn odd_square_reduces() {
    let ctx = YangianContext::new(1);
    let x = GenSymbol::new(-1, 1, 1).unwrap();
    let sq = ctx.normal_form(&word(&[x, x]));
    assert!(sq.degree() < 2);
    // [x, x] = 2x² computed in the algebra agrees.
    let br = ctx.supercommutator(&SuperPoly::gen(x), &SuperPoly::gen(x));
    assert_eq!(br, sq.scale(&Scalar::int(2)));
}

#[test]
fn normal_form_is_idempotent_and_fixes_ordered_words() {
    let ctx = YangianContext::new(2);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let w = word(&random_word(&mut rng, 2, 5));
        let nf = ctx.normal_form(&w);
        assert_eq!(ctx.normal_form(&nf), nf);
        assert!(nf.degree() <= w.degree());
    }
}

#[test]
fn confluence_two_strategies() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut discrepancies = 0;
    for trial in 0..1000 {
        let n = 1 + trial % 2;
        let ctx = YangianContext::new(n);
        let w = word(&random_word(&mut rng, n, 5));
        let left = reduce(&ctx, &w, Strategy::Leftmost);
        let right = reduce(&ctx, &w, Strategy::Rightmost);
        if left != right || left != ctx.normal_form(&w) {
            discrepancies += 1;
        }
    }
    assert_eq!(discrepancies, 0);
}

#[test]
fn ev_factors_through_normal_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for trial in 0..500 {
        let n = 1 + trial % 3;
        let ctx = YangianContext::new(n);
        let mut p = SuperPoly::zero();
        for _ in 0..3 {
            let c = Scalar::new(rng.gen_range(-5..=5), rng.gen_range(1..=3));
            p.add_scaled(&word(&random_word(&mut rng, n, 5)), &c);
        }
        assert_eq!(ev_poly(n, &ctx.normal_form(&p)), ev_poly(n, &p), "trial {trial}");
    }
}

#[test]
fn normal_form_product_is_compatible() {
    let ctx = YangianContext::new(2);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let p = word(&random_word(&mut rng, 2, 3));
        let q = word(&random_word(&mut rng, 2, 3));
        let direct = ctx.normal_form(&p.multiply(&q, u32::MAX));
        let staged = ctx.mul_normal(&ctx.normal_form(&p), &ctx.normal_form(&q));
        assert_eq!(direct, staged);
    }
}
