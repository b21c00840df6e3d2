//! A direct word-rewriting reducer with a selectable strategy.
//!
//! This reducer applies the raw (unnormalised) relations to one adjacent
//! out-of-order pair at a time.  It shares nothing with the memoised
//! insertion algorithm except the relation itself, which makes it a useful
//! independent check of confluence.

use rustc_hash::FxHashMap;
use yq_core::{Monomial, Scalar, SuperPoly};

use crate::context::YangianContext;

/// Which out-of-order adjacent pair to rewrite first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// The leftmost pair.
    Leftmost,
    /// The rightmost pair.
    Rightmost,
}

fn needs_swap(a: yq_core::GenSymbol, b: yq_core::GenSymbol) -> bool {
    a > b || (a == b && a.parity().is_odd())
}

/// Reduces `p` to PBW normal form by repeated single-pair rewriting.
pub fn reduce(ctx: &YangianContext, p: &SuperPoly, strategy: Strategy) -> SuperPoly {
    let mut done = SuperPoly::zero();
    let mut pending: FxHashMap<Monomial, Scalar> = FxHashMap::default();
    for (m, c) in p.iter() {
        *pending.entry(m.clone()).or_default() += c;
    }
    // Process the highest-degree words first so that lower-degree
    // contributions accumulate before they are themselves rewritten.
    while let Some(m) = pending.keys().max_by(|a, b| a.cmp(b)).cloned() {
        let c = pending.remove(&m).expect("present");
        if c.is_zero() {
            continue;
        }
        let gens = m.gens();
        let positions = (0..gens.len().saturating_sub(1)).filter(|&k| needs_swap(gens[k], gens[k + 1]));
        let pos = match strategy {
            Strategy::Leftmost => positions.into_iter().next(),
            Strategy::Rightmost => positions.into_iter().last(),
        };
        let Some(k) = pos else {
            done.add_term(m, c);
            continue;
        };
        let (g1, g2) = (gens[k], gens[k + 1]);
        let prefix = Monomial::from_slice(&gens[..k]);
        let suffix = Monomial::from_slice(&gens[k + 2..]);
        let raw = ctx.raw_correction(g1, g2);
        let (swap_sign, corr_scale) = if g1 == g2 {
            (None, Scalar::new(1, 2))
        } else {
            let odd = g1.parity().is_odd() && g2.parity().is_odd();
            (Some(Scalar::sign(odd)), Scalar::ONE)
        };
        if let Some(s) = swap_sign {
            let w = prefix.concat(&Monomial::from_slice(&[g2, g1])).concat(&suffix);
            *pending.entry(w).or_default() += &(&c * &s);
        }
        for (mid, d) in raw.iter() {
            let w = prefix.concat(mid).concat(&suffix);
            *pending.entry(w).or_default() += &(&(&c * d) * &corr_scale);
        }
    }
    done
}
