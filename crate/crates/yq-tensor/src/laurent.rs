//! Laurent polynomials in two commuting even variables `u, v`.

use std::collections::BTreeMap;

use yq_core::{Ring, Scalar};

/// `Σ c_{a,b} u^a v^b` with integer exponents (zero coefficients omitted).
pub type Laurent<E> = BTreeMap<(i32, i32), E>;

/// The ring `A[u^{±1}, v^{±1}]` over an inner ring `A`.
#[derive(Debug, Clone, Copy)]
pub struct LaurentRing<R> {
    /// Coefficient ring.
    pub inner: R,
}

impl<R: Ring> LaurentRing<R> {
    /// `c · u^a v^b`.
    pub fn monomial(&self, a: i32, b: i32, c: R::Elem) -> Laurent<R::Elem> {
        let mut m = Laurent::new();
        if !self.inner.is_zero(&c) {
            m.insert((a, b), c);
        }
        m
    }

    /// Substitutes `u → −u` and/or `v → −v`.
    pub fn substitute_neg(&self, p: &Laurent<R::Elem>, neg_u: bool, neg_v: bool) -> Laurent<R::Elem> {
        p.iter()
            .map(|(&(a, b), c)| {
                let odd = (neg_u && a.rem_euclid(2) == 1) ^ (neg_v && b.rem_euclid(2) == 1);
                ((a, b), if odd { self.inner.neg(c) } else { c.clone() })
            })
            .collect()
    }

    fn accumulate(&self, out: &mut Laurent<R::Elem>, key: (i32, i32), c: R::Elem) {
        let v = match out.remove(&key) {
            Some(old) => self.inner.add(&old, &c),
            None => c,
        };
        if !self.inner.is_zero(&v) {
            out.insert(key, v);
        }
    }
}

impl<R: Ring> Ring for LaurentRing<R> {
    type Elem = Laurent<R::Elem>;

    fn zero(&self) -> Self::Elem {
        Laurent::new()
    }
    fn one(&self) -> Self::Elem {
        self.monomial(0, 0, self.inner.one())
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_empty()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut out = a.clone();
        for (k, c) in b {
            self.accumulate(&mut out, *k, c.clone());
        }
        out
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|(k, c)| (*k, self.inner.neg(c))).collect()
    }
    fn scale(&self, s: &Scalar, a: &Self::Elem) -> Self::Elem {
        if s.is_zero() {
            return Laurent::new();
        }
        a.iter().map(|(k, c)| (*k, self.inner.scale(s, c))).collect()
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut out = Laurent::new();
        for (&(a1, b1), x) in a {
            for (&(a2, b2), y) in b {
                self.accumulate(&mut out, (a1 + a2, b1 + b2), self.inner.mul(x, y));
            }
        }
        out
    }
    fn parity_split(&self, a: &Self::Elem) -> (Self::Elem, Self::Elem) {
        let mut even = Laurent::new();
        let mut odd = Laurent::new();
        for (k, c) in a {
            let (e, o) = self.inner.parity_split(c);
            if !self.inner.is_zero(&e) {
                even.insert(*k, e);
            }
            if !self.inner.is_zero(&o) {
                odd.insert(*k, o);
            }
        }
        (even, odd)
    }
}
