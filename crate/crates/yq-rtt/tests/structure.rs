//! Canonicalisation, ω, the evaluation map, the Lie brackets and the
//! leading-term checks.

use yq_core::{canonicalize, GenSymbol, Monomial, Scalar, SuperPoly};
use yq_rtt::*;

fn gen(i: i32, j: i32, r: u32) -> GenSymbol {
    GenSymbol::new(i, j, r).unwrap()
}

#[test]
fn canonicalize_examples() {
    assert_eq!(canonicalize(1, 2, 3, 2).unwrap(), (gen(1, 2, 3), Scalar::ONE));
    assert_eq!(canonicalize(1, -2, 3, 2).unwrap(), (gen(-1, 2, 3), Scalar::int(-1)));
    assert_eq!(canonicalize(-1, -1, 2, 1).unwrap(), (gen(1, 1, 2), Scalar::ONE));
    assert!(canonicalize(0, 1, 1, 1).is_err());
}

#[test]
fn omega_generator_images() {
    let ctx = YangianContext::new(2);
    assert_eq!(omega(&ctx, &SuperPoly::gen(gen(1, 2, 1))), SuperPoly::gen(gen(2, 1, 1)));
    assert_eq!(omega(&ctx, &SuperPoly::gen(gen(-1, 2, 1))), SuperPoly::gen(gen(-2, 1, 1)).neg());
}

#[test]
fn omega_is_an_involution_and_preserves_relations() {
    for n in 1..=2 {
        let ctx = YangianContext::new(n);
        let gens = ctx.generators(3);
        for &a in &gens {
            for &b in &gens {
                if a.level() + b.level() > 4 {
                    continue;
                }
                let w = ctx.normal_form(&SuperPoly::term(Monomial::from_slice(&[a, b]), Scalar::ONE));
                assert_eq!(omega(&ctx, &omega(&ctx, &w)), w);
                if let Ok(rhs) = ctx.generate_rewrite_rule(a, b) {
                    let rel = SuperPoly::term(Monomial::from_slice(&[a, b]), Scalar::ONE).sub(&rhs);
                    assert!(omega(&ctx, &rel).is_zero(), "{a} {b}");
                }
            }
        }
    }
}

#[test]
fn ev_defining_examples() {
    let n = 1;
    let t11 = ev_defining(n, 1, 1);
    assert_eq!(t11[0], DenseMatrix::identity(2));
    assert_eq!(t11[1], DenseMatrix::identity(2).scale(&Scalar::int(-1)));
    let tm = ev_defining(n, -1, 1);
    assert!(tm[0].is_zero());
    let expected = DenseMatrix::unit(2, 1, -1).add(&DenseMatrix::unit(2, -1, 1)).scale(&Scalar::int(-1));
    assert_eq!(tm[1], expected);
    assert_eq!(ev_poly(2, &SuperPoly::one()), DenseMatrix::identity(4));
}

#[test]
fn ev_matches_generator_series() {
    let n = 2;
    for i in [1, -1, 2, -2] {
        for j in [1, 2] {
            let (g, c) = canonicalize(i, j, 1, n).unwrap();
            assert_eq!(ev_generator(n, g).scale(&c), ev_defining(n, i, j)[1]);
        }
    }
}

#[test]
fn iota_is_a_homomorphism() {
    for n in 1..=2 {
        assert!(iota_check(&YangianContext::new(n)));
    }
}

#[test]
fn lie_examples() {
    assert_eq!(lie_bracket_qn(&LieElement::g(1, 1, 0), &LieElement::g(1, 2, 0)), LieElement::g(1, 2, 0));
    assert_eq!(lie_bracket_twisted(&LieElement::g(1, 1, 1), &LieElement::g(1, 2, 0)), LieElement::g(1, 2, 1));
    let a = LieElement::g(2, 1, 3);
    assert!(lie_bracket_twisted(&a, &a).is_zero());
}

#[test]
fn gr_prime_leading_terms() {
    for (n, bound) in [(1usize, 6u32), (2, 5)] {
        let ctx = YangianContext::new(n);
        let gens = ctx.generators(bound - 1);
        for &a in &gens {
            for &b in &gens {
                if a.level() + b.level() <= bound {
                    assert!(gr_leading_check(&ctx, a, b), "n={n} {a} {b}");
                }
            }
        }
    }
}

#[test]
fn relation_dump_format_is_stable() {
    let ctx = YangianContext::new(1);
    let dump = relation_dump(&ctx, 2);
    assert_eq!(dump, relation_dump(&ctx, 2));
    let first = dump.lines().next().unwrap();
    assert!(first.starts_with("REL "), "{first}");
    assert!(dump.lines().all(|l| l.contains(" | ") && l.contains(" : ")));
}
