//! Truncated series as coefficient rings in their own right.

use yq_core::{Ring, Scalar};

use crate::bivar::BivarSeries;
use crate::univar::TruncSeries;

/// `A[[u^{-1}]]` truncated at a fixed order, over an inner ring `A`.
#[derive(Debug, Clone, Copy)]
pub struct SeriesRing<'a, R> {
    /// Coefficient ring.
    pub inner: &'a R,
    /// Truncation order of every element.
    pub order: usize,
}

impl<'a, R: Ring> SeriesRing<'a, R> {
    /// Series ring of the given order over `inner`.
    pub fn new(inner: &'a R, order: usize) -> Self {
        SeriesRing { inner, order }
    }
}

impl<R: Ring> Ring for SeriesRing<'_, R> {
    type Elem = TruncSeries<R::Elem>;

    fn zero(&self) -> Self::Elem {
        TruncSeries::zero(self.inner, self.order)
    }
    fn one(&self) -> Self::Elem {
        TruncSeries::one(self.inner, self.order)
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero(self.inner)
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.add(self.inner, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.neg(self.inner)
    }
    fn scale(&self, c: &Scalar, a: &Self::Elem) -> Self::Elem {
        a.scale(self.inner, c)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.mul(self.inner, b)
    }
    fn parity_split(&self, a: &Self::Elem) -> (Self::Elem, Self::Elem) {
        let parts: Vec<_> = a.coeffs().iter().map(|c| self.inner.parity_split(c)).collect();
        (
            TruncSeries::from_coeffs(parts.iter().map(|p| p.0.clone()).collect()),
            TruncSeries::from_coeffs(parts.iter().map(|p| p.1.clone()).collect()),
        )
    }
}

/// `A[[u^{-1}, v^{-1}]]` with total-degree truncation at a fixed order.
#[derive(Debug, Clone, Copy)]
pub struct BivarRing<'a, R> {
    /// Coefficient ring.
    pub inner: &'a R,
    /// Truncation order of the constants `0` and `1`.
    pub order: usize,
}

impl<'a, R: Ring> BivarRing<'a, R> {
    /// Bivariate series ring of the given order over `inner`.
    pub fn new(inner: &'a R, order: usize) -> Self {
        BivarRing { inner, order }
    }
}

impl<R: Ring> Ring for BivarRing<'_, R> {
    type Elem = BivarSeries<R::Elem>;

    fn zero(&self) -> Self::Elem {
        BivarSeries::zero(self.inner, self.order)
    }
    fn one(&self) -> Self::Elem {
        BivarSeries::one(self.inner, self.order)
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero(self.inner)
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.add(self.inner, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.neg(self.inner)
    }
    fn scale(&self, c: &Scalar, a: &Self::Elem) -> Self::Elem {
        a.scale(self.inner, c)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.mul(self.inner, b)
    }
    fn parity_split(&self, a: &Self::Elem) -> (Self::Elem, Self::Elem) {
        (
            a.map(|c| self.inner.parity_split(c).0),
            a.map(|c| self.inner.parity_split(c).1),
        )
    }
}
