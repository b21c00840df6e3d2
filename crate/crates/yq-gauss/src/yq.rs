//! 2×2 matrices of YQ form over truncated series.

use yq_core::{Ring, Scalar};
use yq_series::{SeriesRing, TruncSeries};

use crate::GaussError;

/// A 2×2 matrix `X(u) = Σ ε_{ij} ⊗ x_{ij}(u)` over `A[[u^{-1}]]` of YQ form,
/// i.e. `x_{−1,−1}(u) = x_{11}(u)` at `−u` and `x_{1,−1}(u) = x_{−1,1}(−u)`.
/// Only `a = x_{11}` and `b = x_{−1,1}` are stored.
#[derive(Debug, Clone, PartialEq)]
pub struct YQMatrix<E> {
    /// The `(1,1)` entry.
    pub a: TruncSeries<E>,
    /// The `(−1,1)` entry.
    pub b: TruncSeries<E>,
}

impl<E: Clone> YQMatrix<E> {
    /// Builds a matrix from its two stored entries.
    pub fn new(a: TruncSeries<E>, b: TruncSeries<E>) -> Self {
        YQMatrix { a, b }
    }

    /// Common truncation order.
    pub fn order(&self) -> usize {
        self.a.order().min(self.b.order())
    }

    /// Applies `f` to every coefficient of both entries.
    pub fn map<F: Clone>(&self, mut f: impl FnMut(&E) -> F) -> YQMatrix<F> {
        YQMatrix { a: self.a.map(&mut f), b: self.b.map(&mut f) }
    }
}

/// Arithmetic on YQ matrices with entries in `A[[u^{-1}]]` truncated at a
/// fixed order.
#[derive(Debug, Clone, Copy)]
pub struct YQRing<'a, R> {
    /// The series ring of the entries.
    pub series: SeriesRing<'a, R>,
}

impl<'a, R: Ring> YQRing<'a, R> {
    /// YQ matrices over `inner[[u^{-1}]]` truncated at `order`.
    pub fn new(inner: &'a R, order: usize) -> Self {
        YQRing { series: SeriesRing::new(inner, order) }
    }

    /// The coefficient ring.
    pub fn inner(&self) -> &'a R {
        self.series.inner
    }

    /// Truncation order.
    pub fn order(&self) -> usize {
        self.series.order
    }

    /// The zero matrix.
    pub fn zero(&self) -> YQMatrix<R::Elem> {
        YQMatrix::new(self.series.zero(), self.series.zero())
    }

    /// The identity matrix.
    pub fn one(&self) -> YQMatrix<R::Elem> {
        YQMatrix::new(self.series.one(), self.series.zero())
    }

    /// Zero test.
    pub fn is_zero(&self, x: &YQMatrix<R::Elem>) -> bool {
        self.series.is_zero(&x.a) && self.series.is_zero(&x.b)
    }

    /// Equality up to the truncation order.
    pub fn equal(&self, x: &YQMatrix<R::Elem>, y: &YQMatrix<R::Elem>) -> bool {
        self.is_zero(&self.sub(x, y))
    }

    /// `x + y`.
    pub fn add(&self, x: &YQMatrix<R::Elem>, y: &YQMatrix<R::Elem>) -> YQMatrix<R::Elem> {
        YQMatrix::new(self.series.add(&x.a, &y.a), self.series.add(&x.b, &y.b))
    }

    /// `x − y`.
    pub fn sub(&self, x: &YQMatrix<R::Elem>, y: &YQMatrix<R::Elem>) -> YQMatrix<R::Elem> {
        YQMatrix::new(self.series.sub(&x.a, &y.a), self.series.sub(&x.b, &y.b))
    }

    /// `−x`.
    pub fn neg(&self, x: &YQMatrix<R::Elem>) -> YQMatrix<R::Elem> {
        YQMatrix::new(self.series.neg(&x.a), self.series.neg(&x.b))
    }

    /// `c · x`.
    pub fn scale(&self, c: &Scalar, x: &YQMatrix<R::Elem>) -> YQMatrix<R::Elem> {
        YQMatrix::new(self.series.scale(c, &x.a), self.series.scale(c, &x.b))
    }

    /// The entry at signed labels `(i, j)` with `i, j ∈ {1, −1}`.
    pub fn entry(&self, x: &YQMatrix<R::Elem>, i: i32, j: i32) -> TruncSeries<R::Elem> {
        let inner = self.inner();
        match (i > 0, j > 0) {
            (true, true) => x.a.clone(),
            (false, true) => x.b.clone(),
            (true, false) => x.b.substitute_neg(inner),
            (false, false) => x.a.substitute_neg(inner),
        }
    }

    /// Super matrix product: `(XY)_{11} = ac − b(−u)d`, `(XY)_{−1,1} = bc + a(−u)d`
    /// for `X = (a, b)`, `Y = (c, d)`.
    pub fn mul(&self, x: &YQMatrix<R::Elem>, y: &YQMatrix<R::Elem>) -> YQMatrix<R::Elem> {
        let s = &self.series;
        let inner = self.inner();
        let a_neg = x.a.substitute_neg(inner);
        let b_neg = x.b.substitute_neg(inner);
        YQMatrix::new(
            s.sub(&s.mul(&x.a, &y.a), &s.mul(&b_neg, &y.b)),
            s.add(&s.mul(&x.b, &y.a), &s.mul(&a_neg, &y.b)),
        )
    }

    /// Inverse by the Neumann series `Σ_k (1 − X)^k`, which terminates at the
    /// truncation order because `1 − X` has zero constant term.
    pub fn invert(&self, x: &YQMatrix<R::Elem>) -> Result<YQMatrix<R::Elem>, GaussError> {
        let inner = self.inner();
        if !inner.is_zero(&inner.sub(x.a.coeff(0), &inner.one())) || !inner.is_zero(x.b.coeff(0)) {
            return Err(GaussError::Precondition("YQ matrix must be 1 + O(u^-1)".into()));
        }
        let n = self.sub(&self.one(), x);
        let mut acc = self.one();
        for _ in 0..self.order() {
            acc = self.add(&self.one(), &self.mul(&n, &acc));
        }
        Ok(acc)
    }
}
