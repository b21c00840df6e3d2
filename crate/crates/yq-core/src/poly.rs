//! Sparse polynomials in the free superalgebra on canonical generators.

use std::fmt;

use rustc_hash::FxHashMap;

use crate::error::CoreError;
use crate::generator::GenSymbol;
use crate::monomial::Monomial;
use crate::parity::Parity;
use crate::scalar::Scalar;

/// A finite `Q`-linear combination of words.  No zero coefficient is stored.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct SuperPoly {
    terms: FxHashMap<Monomial, Scalar>,
}

impl SuperPoly {
    /// The zero polynomial.
    pub fn zero() -> SuperPoly {
        SuperPoly::default()
    }

    /// The unit.
    pub fn one() -> SuperPoly {
        SuperPoly::constant(Scalar::ONE)
    }

    /// A scalar multiple of the unit.
    pub fn constant(c: Scalar) -> SuperPoly {
        SuperPoly::term(Monomial::one(), c)
    }

    /// A single generator.
    pub fn gen(g: GenSymbol) -> SuperPoly {
        SuperPoly::term(Monomial::gen(g), Scalar::ONE)
    }

    /// `c · m`.
    pub fn term(m: Monomial, c: Scalar) -> SuperPoly {
        let mut p = SuperPoly::zero();
        p.add_term(m, c);
        p
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates over `(monomial, coefficient)` pairs in unspecified order.
    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    /// Terms sorted by the monomial order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    /// Coefficient of `m` (zero if absent).
    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or(Scalar::ZERO)
    }

    /// Constant term.
    pub fn constant_term(&self) -> Scalar {
        self.coeff(&Monomial::one())
    }

    /// Adds `c · m` in place.
    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                let v = e.get() + &c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    /// Adds `c · other` in place.
    pub fn add_scaled(&mut self, other: &SuperPoly, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (m, a) in &other.terms {
            self.add_term(m.clone(), if c.is_one() { a.clone() } else { a * c });
        }
    }

    /// `self + other`.
    pub fn add(&self, other: &SuperPoly) -> SuperPoly {
        let (mut big, small) = if self.len() >= other.len() { (self.clone(), other) } else { (other.clone(), self) };
        big.add_scaled(small, &Scalar::ONE);
        big
    }

    /// `self − other`.
    pub fn sub(&self, other: &SuperPoly) -> SuperPoly {
        let mut r = self.clone();
        r.add_scaled(other, &Scalar::int(-1));
        r
    }

    /// `−self`.
    pub fn neg(&self) -> SuperPoly {
        self.scale(&Scalar::int(-1))
    }

    /// `c · self`.
    pub fn scale(&self, c: &Scalar) -> SuperPoly {
        if c.is_zero() {
            return SuperPoly::zero();
        }
        SuperPoly { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    /// Largest filtration degree of a term (0 for constants and for zero).
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// Drops every term of filtration degree above `trunc`.
    pub fn truncate(&self, trunc: u32) -> SuperPoly {
        self.filter(|m| m.degree() <= trunc)
    }

    /// Keeps the terms whose monomial satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&Monomial) -> bool) -> SuperPoly {
        SuperPoly { terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), c.clone())).collect() }
    }

    /// Splits into even and odd parts.
    pub fn parity_split(&self) -> (SuperPoly, SuperPoly) {
        let mut even = SuperPoly::zero();
        let mut odd = SuperPoly::zero();
        for (m, c) in &self.terms {
            let target = if m.parity().is_odd() { &mut odd } else { &mut even };
            target.terms.insert(m.clone(), c.clone());
        }
        (even, odd)
    }

    /// The parity if the polynomial is homogeneous (zero counts as even).
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(|m| m.parity());
        let first = it.next().unwrap_or(Parity::Even);
        it.all(|p| p == first).then_some(first)
    }

    /// Applies a letter-wise linear substitution to every word; `f` maps a
    /// monomial to its image and is free to reorder letters.
    pub fn map_monomials(&self, mut f: impl FnMut(&Monomial) -> SuperPoly) -> SuperPoly {
        let mut out = SuperPoly::zero();
        for (m, c) in &self.terms {
            out.add_scaled(&f(m), c);
        }
        out
    }

    /// Multiplies in the free algebra (concatenation of words), discarding
    /// monomials of filtration degree above `trunc`.
    pub fn multiply(&self, other: &SuperPoly, trunc: u32) -> SuperPoly {
        let mut out = SuperPoly::zero();
        for (m1, c1) in &self.terms {
            let d1 = m1.degree();
            if d1 > trunc {
                continue;
            }
            for (m2, c2) in &other.terms {
                if d1 + m2.degree() <= trunc {
                    out.add_term(m1.concat(m2), c1 * c2);
                }
            }
        }
        out
    }

    /// Super commutator `ab − (−1)^{|a||b|} ba` in the free algebra, truncated.
    pub fn supercommutator(&self, other: &SuperPoly, trunc: u32) -> Result<SuperPoly, CoreError> {
        let pa = self.parity().ok_or(CoreError::NotHomogeneous)?;
        let pb = other.parity().ok_or(CoreError::NotHomogeneous)?;
        let ab = self.multiply(other, trunc);
        let ba = other.multiply(self, trunc);
        let mut out = ab;
        out.add_scaled(&ba, &Scalar::sign(!pa.times(pb).is_odd()));
        Ok(out)
    }

    /// Canonical text form, e.g. `1/2 * t[1,1,1] t[-1,1,2] + -3 * t[2,1,1]`.
    pub fn to_canonical_string(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for SuperPoly {
    /// Terms sorted by monomial order, joined by ` + `; the unit monomial
    /// prints as its bare coefficient and the zero polynomial as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c} * {m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SuperPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Scalar> for SuperPoly {
    fn from(c: Scalar) -> Self {
        SuperPoly::constant(c)
    }
}

impl From<GenSymbol> for SuperPoly {
    fn from(g: GenSymbol) -> Self {
        SuperPoly::gen(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(i: i32, j: i32, r: u32) -> SuperPoly {
        SuperPoly::gen(GenSymbol::new(i, j, r).unwrap())
    }

    #[test]
    fn unit_and_truncation() {
        let p = t(1, 1, 2);
        assert_eq!(SuperPoly::one().multiply(&p, 4), p);
        assert!(t(1, 1, 2).multiply(&t(1, 1, 3), 4).is_zero());
    }

    #[test]
    fn bilinearity_and_text() {
        let a = t(1, 1, 1).scale(&Scalar::int(2));
        let b = t(2, 2, 1).scale(&Scalar::int(3));
        assert_eq!(a.multiply(&b, 4).to_string(), "6 * t[1,1,1] t[2,2,1]");
        assert_eq!(SuperPoly::one().to_string(), "1");
        assert_eq!(SuperPoly::zero().to_string(), "0");
    }

    #[test]
    fn supercommutator_cases() {
        let x = t(-1, 1, 1);
        let sq = x.supercommutator(&x, 4).unwrap();
        assert_eq!(sq, x.multiply(&x, 4).scale(&Scalar::int(2)));
        let p = t(1, 1, 1).add(&t(2, 1, 2));
        assert!(p.supercommutator(&p, 6).unwrap().is_zero());
        let mixed = t(1, 1, 1).add(&x);
        assert_eq!(mixed.supercommutator(&x, 4), Err(CoreError::NotHomogeneous));
    }
}
