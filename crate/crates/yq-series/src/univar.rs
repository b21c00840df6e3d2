//! Univariate truncated series.

use yq_core::{Ring, Scalar};

use crate::SeriesError;

/// `Σ_{k=0}^{L} c_k u^{-k}`; coefficients beyond `L` are unknown.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncSeries<E> {
    coeffs: Vec<E>,
}

impl<E: Clone> TruncSeries<E> {
    /// Series with the given coefficients `c_0..c_L`; panics if empty.
    pub fn from_coeffs(coeffs: Vec<E>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        TruncSeries { coeffs }
    }

    /// Builds `c_k = f(k)` for `k = 0..=order`.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> E) -> Self {
        TruncSeries { coeffs: (0..=order).map(f).collect() }
    }

    /// Truncation order `L`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `u^{-k}`; panics beyond the order.
    pub fn coeff(&self, k: usize) -> &E {
        &self.coeffs[k]
    }

    /// All coefficients.
    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    /// Lowers the truncation order.
    pub fn truncated(&self, order: usize) -> Self {
        TruncSeries { coeffs: self.coeffs[..=order.min(self.order())].to_vec() }
    }

    /// Coefficientwise map.
    pub fn map<F: Clone>(&self, f: impl FnMut(&E) -> F) -> TruncSeries<F> {
        TruncSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }
}

impl<E: Clone> TruncSeries<E> {
    /// The zero series of the given order.
    pub fn zero<R: Ring<Elem = E>>(r: &R, order: usize) -> Self {
        Self::from_fn(order, |_| r.zero())
    }

    /// The constant series `1`.
    pub fn one<R: Ring<Elem = E>>(r: &R, order: usize) -> Self {
        Self::from_fn(order, |k| if k == 0 { r.one() } else { r.zero() })
    }

    /// True if every known coefficient vanishes.
    pub fn is_zero<R: Ring<Elem = E>>(&self, r: &R) -> bool {
        self.coeffs.iter().all(|c| r.is_zero(c))
    }

    /// Sum; the order is the minimum of both orders.
    pub fn add<R: Ring<Elem = E>>(&self, r: &R, o: &Self) -> Self {
        let l = self.order().min(o.order());
        Self::from_fn(l, |k| r.add(&self.coeffs[k], &o.coeffs[k]))
    }

    /// Difference.
    pub fn sub<R: Ring<Elem = E>>(&self, r: &R, o: &Self) -> Self {
        let l = self.order().min(o.order());
        Self::from_fn(l, |k| r.sub(&self.coeffs[k], &o.coeffs[k]))
    }

    /// Negation.
    pub fn neg<R: Ring<Elem = E>>(&self, r: &R) -> Self {
        self.map(|c| r.neg(c))
    }

    /// Scalar multiple.
    pub fn scale<R: Ring<Elem = E>>(&self, r: &R, s: &Scalar) -> Self {
        self.map(|c| r.scale(s, c))
    }

    /// Cauchy product `self · o`, order `min(L_self, L_o)`.
    pub fn mul<R: Ring<Elem = E>>(&self, r: &R, o: &Self) -> Self {
        let l = self.order().min(o.order());
        Self::from_fn(l, |k| {
            let mut acc = r.zero();
            for i in 0..=k {
                if r.is_zero(&self.coeffs[i]) || r.is_zero(&o.coeffs[k - i]) {
                    continue;
                }
                r.add_assign(&mut acc, &r.mul(&self.coeffs[i], &o.coeffs[k - i]));
            }
            acc
        })
    }

    /// `s(u) ↦ s(−u)`: `c_k ↦ (−1)^k c_k`.
    pub fn substitute_neg<R: Ring<Elem = E>>(&self, r: &R) -> Self {
        Self::from_fn(self.order(), |k| if k % 2 == 1 { r.neg(&self.coeffs[k]) } else { self.coeffs[k].clone() })
    }

    /// `∂_u`: `c_k u^{-k} ↦ −k c_k u^{-k-1}`; the order is unchanged because
    /// the top output coefficient only needs `c_{L-1}`.
    pub fn derivative<R: Ring<Elem = E>>(&self, r: &R) -> Self {
        Self::from_fn(self.order(), |k| {
            if k == 0 {
                r.zero()
            } else {
                r.scale(&Scalar::int(-(k as i64 - 1)), &self.coeffs[k - 1])
            }
        })
    }

    /// Multiplication by `u^{-1}`; the order grows by one.
    pub fn mul_x<R: Ring<Elem = E>>(&self, r: &R) -> Self {
        Self::from_fn(self.order() + 1, |k| if k == 0 { r.zero() } else { self.coeffs[k - 1].clone() })
    }

    /// Multiplication by `u`; requires a zero constant term and lowers the order.
    pub fn div_x<R: Ring<Elem = E>>(&self, r: &R) -> Result<Self, SeriesError> {
        if !r.is_zero(&self.coeffs[0]) {
            return Err(SeriesError::NotDivisibleByX);
        }
        if self.order() == 0 {
            return Ok(Self::zero(r, 0));
        }
        Ok(Self::from_fn(self.order() - 1, |k| self.coeffs[k + 1].clone()))
    }

    /// Two-sided inverse of a series whose constant term is `1`, by the
    /// recursion `b_k = −Σ_{j≥1} a_j b_{k−j}`.
    pub fn inverse<R: Ring<Elem = E>>(&self, r: &R) -> Result<Self, SeriesError> {
        let one = r.one();
        if !r.is_zero(&r.sub(&self.coeffs[0], &one)) {
            return Err(SeriesError::NotInvertible("constant term must be 1".into()));
        }
        let mut b: Vec<E> = vec![one];
        for k in 1..=self.order() {
            let mut acc = r.zero();
            for j in 1..=k {
                if r.is_zero(&self.coeffs[j]) {
                    continue;
                }
                r.add_assign(&mut acc, &r.mul(&self.coeffs[j], &b[k - j]));
            }
            b.push(r.neg(&acc));
        }
        Ok(TruncSeries { coeffs: b })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use yq_core::ScalarRing;

    fn s(v: &[i64]) -> TruncSeries<Scalar> {
        TruncSeries::from_coeffs(v.iter().map(|&x| Scalar::int(x)).collect())
    }

    #[test]
    fn neg_and_derivative() {
        let r = ScalarRing;
        assert_eq!(s(&[1, 3, 0]).substitute_neg(&r), s(&[1, -3, 0]));
        assert_eq!(s(&[0, 1, 0, 0]).derivative(&r), s(&[0, 0, -1, 0]));
        assert_eq!(s(&[0, 0, 1, 0]).derivative(&r), s(&[0, 0, 0, -2]));
        assert_eq!(s(&[5, 0, 0]).derivative(&r), s(&[0, 0, 0]));
    }

    #[test]
    fn inverse_multiplies_back() {
        let r = ScalarRing;
        let a = s(&[1, 2, -1, 4, 3]);
        let b = a.inverse(&r).unwrap();
        assert_eq!(a.mul(&r, &b), TruncSeries::one(&r, 4));
        assert!(s(&[2, 1]).inverse(&r).is_err());
    }
}
