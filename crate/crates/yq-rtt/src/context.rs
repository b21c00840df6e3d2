//! The algebra `Y(q_n)`: rewrite rules and PBW normal form.
//!
//! For canonical generators `g₁ = t_{ij}^{(r)} > g₂ = t_{kl}^{(s)}` the
//! component form of the RTT relation gives
//!
//! ```text
//! g₁g₂ = (−1)^{|g₁||g₂|} g₂g₁ + θ·(Q₁ − (−1)^{|k|} Q₂)
//! Q₁ = Σ_{a<r} N₁(r−1−a, s+a),   N₁(p,q) = t_{kj}^{(p)} t_{il}^{(q)} − t_{kj}^{(q)} t_{il}^{(p)}
//! Q₂ = Σ_{a<r} (−1)^a N₂(r−1−a, s+a),
//!                                 N₂(p,q) = t_{−k,j}^{(p)} t_{−i,l}^{(q)} − t_{k,−j}^{(q)} t_{i,−l}^{(p)}
//! ```
//!
//! with `θ = (−1)^{|i||k|}` and `t^{(0)} = δ`.  The correction has filtration
//! degree `r + s − 1`, so rewriting terminates.  For an odd generator the
//! same relation with `g₁ = g₂` gives `g² = ½·θ·(Q₁ − (−1)^{|k|}Q₂)`.
//!
//! Normal forms are computed exactly (no truncation) by inserting letters
//! one at a time into an ordered word; this is the leftmost-first reduction
//! strategy, memoised on `(ordered word, letter)`.

use std::sync::Arc;

use dashmap::DashMap;
use rustc_hash::FxBuildHasher;
use yq_core::{canonicalize, CoreError, GenSymbol, Monomial, Ring, Scalar, SuperPoly};

use crate::RttError;

/// A cached rewrite rule `g₁g₂ = sign·g₂g₁ + correction` (correction in
/// normal form).  For an odd square `sign` is zero.
#[derive(Debug, Clone)]
pub struct Rule {
    /// Sign of the swapped term (0 for odd squares).
    pub sign: i8,
    /// Lower-degree correction, already in normal form.
    pub correction: SuperPoly,
}

type Map<K, V> = DashMap<K, V, FxBuildHasher>;

/// The super-Yangian `Y(q_n)` together with its rewriting caches.
///
/// All caches are pure memo tables, so a context can be shared freely
/// between threads.
pub struct YangianContext {
    n: usize,
    rules: Map<(GenSymbol, GenSymbol), Arc<Rule>>,
    inserts: Map<(Monomial, GenSymbol), Arc<SuperPoly>>,
    products: Map<(Monomial, Monomial), Arc<SuperPoly>>,
}

impl std::fmt::Debug for YangianContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("YangianContext").field("n", &self.n).field("cached_rules", &self.rules.len()).finish()
    }
}

/// Does the ordered word `…x` followed by `g` need rewriting?
fn out_of_order(x: GenSymbol, g: GenSymbol) -> bool {
    x > g || (x == g && g.parity().is_odd())
}

impl YangianContext {
    /// The context for `Y(q_n)`.
    pub fn new(n: usize) -> YangianContext {
        assert!(n >= 1, "n must be positive");
        YangianContext {
            n,
            rules: Map::default(),
            inserts: Map::default(),
            products: Map::default(),
        }
    }

    /// Rank `n`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// All canonical generators of level `1..=max_level`, in generator order.
    pub fn generators(&self, max_level: u32) -> Vec<GenSymbol> {
        let n = self.n as i32;
        let mut v = Vec::new();
        for i in (1..=n).flat_map(|a| [a, -a]) {
            for j in 1..=n {
                for r in 1..=max_level {
                    v.push(GenSymbol::new(i, j, r).expect("valid generator"));
                }
            }
        }
        v.sort();
        v
    }

    /// The series coefficient `t_{ij}^{(r)}` as a polynomial, with
    /// `t_{ij}^{(0)} = δ_{ij}` and the symmetry `t_{i,-j}^{(r)} = (−1)^r t_{-i,j}^{(r)}`.
    pub fn t(&self, i: i32, j: i32, r: u32) -> Result<SuperPoly, CoreError> {
        yq_core::check_index(i, self.n)?;
        yq_core::check_index(j, self.n)?;
        if r == 0 {
            return Ok(if i == j { SuperPoly::one() } else { SuperPoly::zero() });
        }
        let (g, c) = canonicalize(i, j, r, self.n)?;
        Ok(SuperPoly::term(Monomial::gen(g), c))
    }

    fn tt(&self, i: i32, j: i32, r: u32) -> SuperPoly {
        self.t(i, j, r).expect("indices produced internally are valid")
    }

    /// The unnormalised right-hand side `θ·(Q₁ − (−1)^{|k|}Q₂)` for the pair
    /// `(t_{ij}^{(r)}, t_{kl}^{(s)})`, as a combination of words of length ≤ 2.
    pub fn raw_correction(&self, g1: GenSymbol, g2: GenSymbol) -> SuperPoly {
        let (i, j, r) = (g1.row(), g1.col(), g1.level());
        let (k, l, s) = (g2.row(), g2.col(), g2.level());
        let free = u32::MAX;
        let mut q1 = SuperPoly::zero();
        let mut q2 = SuperPoly::zero();
        for a in 0..r {
            let (p, q) = (r - 1 - a, s + a);
            q1.add_scaled(&self.tt(k, j, p).multiply(&self.tt(i, l, q), free), &Scalar::ONE);
            q1.add_scaled(&self.tt(k, j, q).multiply(&self.tt(i, l, p), free), &Scalar::int(-1));
            let sa = Scalar::sign(a % 2 == 1);
            q2.add_scaled(&self.tt(-k, j, p).multiply(&self.tt(-i, l, q), free), &sa);
            q2.add_scaled(&self.tt(k, -j, q).multiply(&self.tt(i, -l, p), free), &(-&sa));
        }
        let theta = Scalar::sign(i < 0 && k < 0);
        let mut out = q1;
        out.add_scaled(&q2, &Scalar::sign(k >= 0));
        out.scale(&theta)
    }

    /// The rewrite rule for an out-of-order pair `g₁ > g₂` (or `g₁ = g₂` odd).
    pub fn rule(&self, g1: GenSymbol, g2: GenSymbol) -> Result<Arc<Rule>, RttError> {
        if !out_of_order(g1, g2) {
            return Err(RttError::AlreadyOrdered(g1, g2));
        }
        if let Some(r) = self.rules.get(&(g1, g2)) {
            return Ok(r.clone());
        }
        let raw = self.raw_correction(g1, g2);
        let rule = if g1 == g2 {
            Rule { sign: 0, correction: self.normal_form(&raw).scale(&Scalar::new(1, 2)) }
        } else {
            let odd = g1.parity().is_odd() && g2.parity().is_odd();
            Rule { sign: if odd { -1 } else { 1 }, correction: self.normal_form(&raw) }
        };
        let rule = Arc::new(rule);
        self.rules.insert((g1, g2), rule.clone());
        Ok(rule)
    }

    /// The ordered expression equal to `g₁g₂` for an out-of-order pair.
    pub fn generate_rewrite_rule(&self, g1: GenSymbol, g2: GenSymbol) -> Result<SuperPoly, RttError> {
        let rule = self.rule(g1, g2)?;
        let mut out = rule.correction.clone();
        if rule.sign != 0 {
            out.add_term(Monomial::from_slice(&[g2, g1]), Scalar::int(rule.sign as i64));
        }
        Ok(out)
    }

    /// Normal form of `m · g` for an ordered word `m`.
    pub fn insert(&self, m: &Monomial, g: GenSymbol) -> Arc<SuperPoly> {
        let x = match m.last() {
            Some(x) if out_of_order(x, g) => x,
            _ => {
                let mut w = m.clone();
                w.push(g);
                return Arc::new(SuperPoly::term(w, Scalar::ONE));
            }
        };
        let key = (m.clone(), g);
        if let Some(v) = self.inserts.get(&key) {
            return v.clone();
        }
        let (head, _) = m.split_last().expect("nonempty");
        let rule = self.rule(x, g).expect("pair is out of order");
        let mut out = self.mul_mono_poly(&head, &rule.correction);
        if rule.sign != 0 {
            let moved = self.insert(&head, g);
            let s = Scalar::int(rule.sign as i64);
            for (w, c) in moved.iter() {
                out.add_scaled(&self.insert(w, x), &(c * &s));
            }
        }
        let out = Arc::new(out);
        self.inserts.insert(key, out.clone());
        out
    }

    /// Normal form of `m₁ · m₂` for ordered words.
    pub fn mul_monomials(&self, m1: &Monomial, m2: &Monomial) -> Arc<SuperPoly> {
        match (m1.last(), m2.gens().first()) {
            (None, _) => return Arc::new(SuperPoly::term(m2.clone(), Scalar::ONE)),
            (_, None) => return Arc::new(SuperPoly::term(m1.clone(), Scalar::ONE)),
            (Some(x), Some(&y)) if !out_of_order(x, y) => {
                return Arc::new(SuperPoly::term(m1.concat(m2), Scalar::ONE));
            }
            _ => {}
        }
        if m2.len() == 1 {
            return self.insert(m1, m2.gens()[0]);
        }
        let key = (m1.clone(), m2.clone());
        if let Some(v) = self.products.get(&key) {
            return v.clone();
        }
        let mut cur = SuperPoly::term(m1.clone(), Scalar::ONE);
        for &g in m2.gens() {
            let mut next = SuperPoly::zero();
            for (w, c) in cur.iter() {
                next.add_scaled(&self.insert(w, g), c);
            }
            cur = next;
        }
        let out = Arc::new(cur);
        self.products.insert(key, out.clone());
        out
    }

    fn mul_mono_poly(&self, m: &Monomial, p: &SuperPoly) -> SuperPoly {
        let mut out = SuperPoly::zero();
        for (w, c) in p.iter() {
            out.add_scaled(&self.mul_monomials(m, w), c);
        }
        out
    }

    /// Product of two polynomials that are already in normal form.
    pub fn mul_normal(&self, a: &SuperPoly, b: &SuperPoly) -> SuperPoly {
        let mut out = SuperPoly::zero();
        for (m1, c1) in a.iter() {
            for (m2, c2) in b.iter() {
                out.add_scaled(&self.mul_monomials(m1, m2), &(c1 * c2));
            }
        }
        out
    }

    /// PBW normal form of an arbitrary polynomial: ordered words, odd
    /// generators squarefree.  Exact; never raises the filtration degree.
    pub fn normal_form(&self, p: &SuperPoly) -> SuperPoly {
        let mut out = SuperPoly::zero();
        for (m, c) in p.iter() {
            if m.is_ordered() {
                out.add_term(m.clone(), c.clone());
                continue;
            }
            let mut cur = SuperPoly::one();
            for &g in m.gens() {
                let mut next = SuperPoly::zero();
                for (w, d) in cur.iter() {
                    next.add_scaled(&self.insert(w, g), d);
                }
                cur = next;
            }
            out.add_scaled(&cur, c);
        }
        out
    }

    /// Normal form followed by truncation at filtration degree `order`.
    pub fn normal_form_truncated(&self, p: &SuperPoly, order: u32) -> SuperPoly {
        self.normal_form(p).truncate(order)
    }

    /// Super commutator of normal-form elements, in normal form.
    pub fn supercommutator(&self, a: &SuperPoly, b: &SuperPoly) -> SuperPoly {
        Ring::bracket(self, a, b)
    }

    /// Number of cached rewrite rules (diagnostics).
    pub fn cached_rules(&self) -> usize {
        self.rules.len()
    }
}

impl Ring for YangianContext {
    type Elem = SuperPoly;

    fn zero(&self) -> SuperPoly {
        SuperPoly::zero()
    }
    fn one(&self) -> SuperPoly {
        SuperPoly::one()
    }
    fn is_zero(&self, a: &SuperPoly) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &SuperPoly, b: &SuperPoly) -> SuperPoly {
        a.add(b)
    }
    fn neg(&self, a: &SuperPoly) -> SuperPoly {
        a.neg()
    }
    fn scale(&self, c: &Scalar, a: &SuperPoly) -> SuperPoly {
        a.scale(c)
    }
    fn mul(&self, a: &SuperPoly, b: &SuperPoly) -> SuperPoly {
        self.mul_normal(a, b)
    }
    fn parity_split(&self, a: &SuperPoly) -> (SuperPoly, SuperPoly) {
        a.parity_split()
    }
    fn add_assign(&self, a: &mut SuperPoly, b: &SuperPoly) {
        a.add_scaled(b, &Scalar::ONE);
    }
}
