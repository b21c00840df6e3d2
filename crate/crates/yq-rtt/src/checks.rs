//! The anti-involution `ω`, the embedding `ι: U(q_n) → Y(q_n)`, the
//! leading-term map to the twisted current algebra, and the relation dump.

use yq_core::{GenSymbol, Monomial, Parity, Ring, Scalar, SuperPoly};

use crate::context::YangianContext;
use crate::lie::{lie_bracket_qn, lie_bracket_twisted, LieElement};

/// `ω`: `t_{ij}^{(r)} ↦ t_{ji}^{(r)}`, words reversed, no Koszul sign; the
/// result is returned in normal form.
pub fn omega(ctx: &YangianContext, p: &SuperPoly) -> SuperPoly {
    let image = p.map_monomials(|m| {
        let mut coeff = Scalar::ONE;
        let mut word = Monomial::one();
        for g in m.reversed().gens() {
            let img = ctx.t(g.col(), g.row(), g.level()).expect("valid generator");
            let (w, c) = img.iter().next().expect("single term");
            coeff *= c;
            word = word.concat(w);
        }
        SuperPoly::term(word, coeff)
    });
    ctx.normal_form(&image)
}

/// `π(t_{ij}^{(r+1)}) = −(−1)^{|j|} g_{ji}^{(r)}` for a canonical generator.
pub fn pi_generator(g: GenSymbol) -> LieElement {
    let mut e = LieElement::zero();
    let sign = -Parity::of_index(g.col()).sign();
    e.add_g(g.col(), g.row(), g.level() - 1, &sign);
    e
}

/// Checks that the top second-filtration component of `[g₁, g₂]` (degree
/// `r + s − 2`, grading each letter by `level − 1`) maps under `π` to the
/// twisted bracket `[π(g₁), π(g₂)]`, and that nothing of higher degree
/// appears.
pub fn gr_leading_check(ctx: &YangianContext, g1: GenSymbol, g2: GenSymbol) -> bool {
    let a = SuperPoly::gen(g1);
    let b = SuperPoly::gen(g2);
    let br = ctx.bracket(&a, &b);
    let top = g1.level() + g2.level() - 2;
    if br.iter().any(|(m, _)| m.loop_degree() > top) {
        return false;
    }
    let mut image = LieElement::zero();
    for (m, c) in br.iter().filter(|(m, _)| m.loop_degree() == top) {
        // Ordered words of length ≠ 1 map to PBW monomials of U that are
        // independent from the Lie element on the right, so they must vanish.
        if m.len() != 1 {
            return false;
        }
        image.add_scaled(&pi_generator(m.gens()[0]), c);
    }
    image == lie_bracket_twisted(&pi_generator(g1), &pi_generator(g2))
}

/// `ι(g_{ab}) = −(−1)^{|a|} t_{ba}^{(1)}`, extended linearly.
pub fn iota(ctx: &YangianContext, x: &LieElement) -> SuperPoly {
    let mut out = SuperPoly::zero();
    for (b, c) in x.iter() {
        let sign = -Parity::of_index(b.row).sign();
        out.add_scaled(&ctx.t(b.col, b.row, 1).expect("valid index"), &(c * &sign));
    }
    out
}

/// Basis `{g_{ab} : b > 0}` of `q_n`.
pub fn qn_basis(n: usize) -> Vec<LieElement> {
    let n = n as i32;
    (1..=n).flat_map(|a| [a, -a]).flat_map(|a| (1..=n).map(move |b| LieElement::g(a, b, 0))).collect()
}

/// Verifies `[ι(a), ι(b)] = ι([a, b])` for all pairs of basis elements of `q_n`.
pub fn iota_check(ctx: &YangianContext) -> bool {
    let basis = qn_basis(ctx.n());
    basis.iter().all(|a| {
        basis.iter().all(|b| {
            let lhs = ctx.bracket(&iota(ctx, a), &iota(ctx, b));
            lhs == iota(ctx, &lie_bracket_qn(a, b))
        })
    })
}

/// One line per out-of-order generator pair with `r + s ≤ order`:
/// `REL i j r | k l s : <normal form of the product>`, sorted by the pair.
pub fn relation_dump(ctx: &YangianContext, order: u32) -> String {
    let gens = ctx.generators(order.saturating_sub(1).max(1));
    let mut out = String::new();
    for &g1 in &gens {
        for &g2 in &gens {
            let ooo = g1 > g2 || (g1 == g2 && g1.parity().is_odd());
            if !ooo || g1.level() + g2.level() > order {
                continue;
            }
            let rhs = ctx.generate_rewrite_rule(g1, g2).expect("pair is out of order");
            out.push_str(&format!(
                "REL {} {} {} | {} {} {} : {}\n",
                g1.row(),
                g1.col(),
                g1.level(),
                g2.row(),
                g2.col(),
                g2.level(),
                rhs
            ));
        }
    }
    out
}
