//! The queer Lie superalgebra `q_n` and its twisted current algebra.
//!
//! Basis elements are `g_{ij}^{(r)}` with the symmetry
//! `g_{ij}^{(r)} = (−1)^r g_{−i,−j}^{(r)}`; the representative with a
//! positive column is stored.  `q_n` itself is the level-0 part.

use std::collections::BTreeMap;
use std::fmt;

use yq_core::{Parity, Scalar};

/// A basis symbol `g_{row,col}^{(level)}` with `col > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LieBasis {
    /// Signed row index.
    pub row: i32,
    /// Positive column index.
    pub col: i32,
    /// Current-algebra degree `r` (0 for `q_n`).
    pub level: u32,
}

impl LieBasis {
    /// Parity `|row| + |col|`.
    pub fn parity(self) -> Parity {
        Parity::of_index(self.row)
    }
}

/// A finite linear combination of basis symbols.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct LieElement {
    terms: BTreeMap<LieBasis, Scalar>,
}

impl LieElement {
    /// The zero element.
    pub fn zero() -> LieElement {
        LieElement::default()
    }

    /// `g_{ij}^{(r)}` for arbitrary signed `i, j`, canonicalised.
    pub fn g(i: i32, j: i32, r: u32) -> LieElement {
        let mut e = LieElement::zero();
        e.add_g(i, j, r, &Scalar::ONE);
        e
    }

    /// Adds `c · g_{ij}^{(r)}` in place.
    pub fn add_g(&mut self, i: i32, j: i32, r: u32, c: &Scalar) {
        let (b, s) = if j > 0 {
            (LieBasis { row: i, col: j, level: r }, Scalar::ONE)
        } else {
            (LieBasis { row: -i, col: -j, level: r }, Scalar::sign(r % 2 == 1))
        };
        let e = self.terms.entry(b).or_insert(Scalar::ZERO);
        *e += &(c * &s);
        if e.is_zero() {
            self.terms.remove(&b);
        }
    }

    /// Adds `c · other`.
    pub fn add_scaled(&mut self, other: &LieElement, c: &Scalar) {
        for (b, v) in &other.terms {
            self.add_g(b.row, b.col, b.level, &(v * c));
        }
    }

    /// Iterates over basis symbols and coefficients.
    pub fn iter(&self) -> impl Iterator<Item = (&LieBasis, &Scalar)> {
        self.terms.iter()
    }

    /// True for zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Parity if homogeneous.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(|b| b.parity());
        let first = it.next().unwrap_or(Parity::Even);
        it.all(|p| p == first).then_some(first)
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|(b, c)| format!("{c} * g[{},{},{}]", b.row, b.col, b.level)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn delta(a: i32, b: i32) -> bool {
    a == b
}

fn bilinear(a: &LieElement, b: &LieElement, f: impl Fn(LieBasis, LieBasis, &mut LieElement)) -> LieElement {
    let mut out = LieElement::zero();
    for (x, c) in a.iter() {
        for (y, d) in b.iter() {
            let mut part = LieElement::zero();
            f(*x, *y, &mut part);
            out.add_scaled(&part, &(c * d));
        }
    }
    out
}

/// Bracket of `q_n`:
/// `[g_{ij}, g_{kl}] = δ_{kj} g_{il} + δ_{j,−k} g_{i,−l} − s(δ_{li} g_{kj} + δ_{l,−i} g_{k,−j})`
/// with `s = (−1)^{(|i|+|j|)(|k|+|l|)}`.  Levels are ignored.
pub fn lie_bracket_qn(a: &LieElement, b: &LieElement) -> LieElement {
    bilinear(a, b, |x, y, out| {
        let (i, j, k, l) = (x.row, x.col, y.row, y.col);
        let s = Scalar::sign(x.parity().times(y.parity()).is_odd());
        let one = Scalar::ONE;
        if delta(k, j) {
            out.add_g(i, l, 0, &one);
        }
        if delta(j, -k) {
            out.add_g(i, -l, 0, &one);
        }
        if delta(l, i) {
            out.add_g(k, j, 0, &-&s);
        }
        if delta(l, -i) {
            out.add_g(k, -j, 0, &-&s);
        }
    })
}

/// Bracket of the twisted current algebra:
/// `[g_{ij}^{(r)}, g_{kl}^{(s)}] = δ_{jk} g_{il}^{(r+s)} + (−1)^r δ_{j,−k} g_{−i,l}^{(r+s)}
///  − σ(δ_{il} g_{kj}^{(r+s)} + (−1)^r δ_{−i,l} g_{k,−j}^{(r+s)})`,
/// `σ = (−1)^{(|i|+|j|)(|k|+|l|)}`.
pub fn lie_bracket_twisted(a: &LieElement, b: &LieElement) -> LieElement {
    bilinear(a, b, |x, y, out| {
        let (i, j, k, l) = (x.row, x.col, y.row, y.col);
        let (r, s) = (x.level, y.level);
        let sigma = Scalar::sign(x.parity().times(y.parity()).is_odd());
        let sr = Scalar::sign(r % 2 == 1);
        if delta(j, k) {
            out.add_g(i, l, r + s, &Scalar::ONE);
        }
        if delta(j, -k) {
            out.add_g(-i, l, r + s, &sr);
        }
        if delta(i, l) {
            out.add_g(k, j, r + s, &-&sigma);
        }
        if delta(-i, l) {
            out.add_g(k, -j, r + s, &-(&sigma * &sr));
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_brackets() {
        assert_eq!(lie_bracket_qn(&LieElement::g(1, 1, 0), &LieElement::g(1, 2, 0)), LieElement::g(1, 2, 0));
        assert_eq!(lie_bracket_twisted(&LieElement::g(1, 1, 1), &LieElement::g(1, 2, 0)), LieElement::g(1, 2, 1));
        let a = LieElement::g(1, 2, 0);
        assert!(lie_bracket_qn(&a, &a).is_zero());
    }

    #[test]
    fn symmetry_representative() {
        assert_eq!(LieElement::g(-1, -2, 0), LieElement::g(1, 2, 0));
        let mut neg = LieElement::zero();
        neg.add_g(1, 2, 1, &Scalar::int(-1));
        assert_eq!(LieElement::g(-1, -2, 1), neg);
    }
}
