//! Bivariate truncated series with total-degree truncation.

use yq_core::{Ring, Scalar};

use crate::univar::TruncSeries;
use crate::SeriesError;

/// `Σ_{r+s≤L} c_{r,s} u^{-r} v^{-s}`; coefficients of higher total degree are unknown.
#[derive(Debug, Clone, PartialEq)]
pub struct BivarSeries<E> {
    order: usize,
    /// Row `r` holds `c_{r,0..=L-r}`.
    rows: Vec<Vec<E>>,
}

impl<E: Clone> BivarSeries<E> {
    /// Builds `c_{r,s} = f(r, s)` for `r + s ≤ order`.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let rows = (0..=order).map(|r| (0..=order - r).map(|s| f(r, s)).collect()).collect();
        BivarSeries { order, rows }
    }

    /// Total-degree truncation order `L`.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `u^{-r} v^{-s}`; panics if `r + s > L`.
    pub fn coeff(&self, r: usize, s: usize) -> &E {
        &self.rows[r][s]
    }

    /// Iterates `(r, s, c_{r,s})` over all known coefficients.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &E)> {
        self.rows.iter().enumerate().flat_map(|(r, row)| row.iter().enumerate().map(move |(s, c)| (r, s, c)))
    }

    /// Lowers the truncation order.
    pub fn truncated(&self, order: usize) -> Self {
        let order = order.min(self.order);
        Self::from_fn(order, |r, s| self.rows[r][s].clone())
    }

    /// Coefficientwise map.
    pub fn map<F: Clone>(&self, mut f: impl FnMut(&E) -> F) -> BivarSeries<F> {
        BivarSeries { order: self.order, rows: self.rows.iter().map(|row| row.iter().map(&mut f).collect()).collect() }
    }

    /// Swaps the roles of `u` and `v`.
    pub fn swap(&self) -> Self {
        Self::from_fn(self.order, |r, s| self.rows[s][r].clone())
    }
}

impl<E: Clone> BivarSeries<E> {
    /// The zero series.
    pub fn zero<R: Ring<Elem = E>>(r: &R, order: usize) -> Self {
        Self::from_fn(order, |_, _| r.zero())
    }

    /// The constant `1`.
    pub fn one<R: Ring<Elem = E>>(r: &R, order: usize) -> Self {
        Self::from_fn(order, |a, b| if a + b == 0 { r.one() } else { r.zero() })
    }

    /// `a(u)` regarded as a bivariate series.
    pub fn lift_u<R: Ring<Elem = E>>(r: &R, a: &TruncSeries<E>) -> Self {
        Self::from_fn(a.order(), |p, q| if q == 0 { a.coeff(p).clone() } else { r.zero() })
    }

    /// `a(v)` regarded as a bivariate series.
    pub fn lift_v<R: Ring<Elem = E>>(r: &R, a: &TruncSeries<E>) -> Self {
        Self::from_fn(a.order(), |p, q| if p == 0 { a.coeff(q).clone() } else { r.zero() })
    }

    /// True if every known coefficient vanishes.
    pub fn is_zero<R: Ring<Elem = E>>(&self, r: &R) -> bool {
        self.iter().all(|(_, _, c)| r.is_zero(c))
    }

    /// First nonzero coefficient in (total degree, r) order, if any.
    pub fn first_nonzero<R: Ring<Elem = E>>(&self, r: &R) -> Option<(usize, usize, &E)> {
        (0..=self.order)
            .flat_map(|d| (0..=d).map(move |p| (p, d - p)))
            .map(|(p, q)| (p, q, &self.rows[p][q]))
            .find(|(_, _, c)| !r.is_zero(c))
    }

    /// Sum, at the smaller order.
    pub fn add<R: Ring<Elem = E>>(&self, r: &R, o: &Self) -> Self {
        Self::from_fn(self.order.min(o.order), |a, b| r.add(&self.rows[a][b], &o.rows[a][b]))
    }

    /// Difference, at the smaller order.
    pub fn sub<R: Ring<Elem = E>>(&self, r: &R, o: &Self) -> Self {
        Self::from_fn(self.order.min(o.order), |a, b| r.sub(&self.rows[a][b], &o.rows[a][b]))
    }

    /// Negation.
    pub fn neg<R: Ring<Elem = E>>(&self, r: &R) -> Self {
        self.map(|c| r.neg(c))
    }

    /// Scalar multiple.
    pub fn scale<R: Ring<Elem = E>>(&self, r: &R, s: &Scalar) -> Self {
        self.map(|c| r.scale(s, c))
    }

    /// Product in `A[[u^{-1}, v^{-1}]]`, at the smaller order.
    pub fn mul<R: Ring<Elem = E>>(&self, r: &R, o: &Self) -> Self {
        let l = self.order.min(o.order);
        let mut out = Self::zero(r, l);
        for (p1, q1, a) in self.iter() {
            if p1 + q1 > l || r.is_zero(a) {
                continue;
            }
            for p2 in 0..=l - p1 - q1 {
                for q2 in 0..=l - p1 - q1 - p2 {
                    let b = &o.rows[p2][q2];
                    if r.is_zero(b) {
                        continue;
                    }
                    let prod = r.mul(a, b);
                    r.add_assign(&mut out.rows[p1 + p2][q1 + q2], &prod);
                }
            }
        }
        out
    }

    /// Substitutes `u → −u` (`neg_u`) and/or `v → −v` (`neg_v`).
    pub fn substitute_neg<R: Ring<Elem = E>>(&self, r: &R, neg_u: bool, neg_v: bool) -> Self {
        Self::from_fn(self.order, |a, b| {
            let odd = (neg_u && a % 2 == 1) ^ (neg_v && b % 2 == 1);
            if odd {
                r.neg(&self.rows[a][b])
            } else {
                self.rows[a][b].clone()
            }
        })
    }

    /// Multiplies by `u^{-a} v^{-b}`; the order grows by `a + b`.
    pub fn mul_xy<R: Ring<Elem = E>>(&self, r: &R, a: usize, b: usize) -> Self {
        Self::from_fn(self.order + a + b, |p, q| {
            if p >= a && q >= b {
                self.rows[p - a][q - b].clone()
            } else {
                r.zero()
            }
        })
    }

    /// Multiplies by `u` (`in_u`) or `v`; the coefficients with zero exponent
    /// in that variable must vanish.  The order drops by one.
    pub fn div_x<R: Ring<Elem = E>>(&self, r: &R, in_u: bool) -> Result<Self, SeriesError> {
        let edge_zero = (0..=self.order).all(|k| r.is_zero(if in_u { &self.rows[0][k] } else { &self.rows[k][0] }));
        if !edge_zero {
            return Err(SeriesError::NotDivisibleByX);
        }
        if self.order == 0 {
            return Ok(Self::zero(r, 0));
        }
        Ok(Self::from_fn(self.order - 1, |p, q| {
            if in_u {
                self.rows[p + 1][q].clone()
            } else {
                self.rows[p][q + 1].clone()
            }
        }))
    }

    /// Restriction to the diagonal `v = sign·u`:
    /// `c_k = Σ_{p+q=k} sign^q c_{p,q}`.
    pub fn diagonal<R: Ring<Elem = E>>(&self, r: &R, sign: i8) -> TruncSeries<E> {
        TruncSeries::from_fn(self.order, |k| {
            let mut acc = r.zero();
            for p in 0..=k {
                let c = &self.rows[p][k - p];
                if r.is_zero(c) {
                    continue;
                }
                if sign < 0 && (k - p) % 2 == 1 {
                    r.add_assign(&mut acc, &r.neg(c));
                } else {
                    r.add_assign(&mut acc, c);
                }
            }
            acc
        })
    }

    fn check_diagonal<R: Ring<Elem = E>>(&self, r: &R, sign: i8) -> Result<(), SeriesError> {
        let d = self.diagonal(r, sign);
        match (0..=self.order).find(|&k| !r.is_zero(d.coeff(k))) {
            Some(degree) => Err(SeriesError::DivisionPrecondition { sign, degree }),
            None => Ok(()),
        }
    }

    /// Exact quotient `n(u,v) / (u − v)`.
    ///
    /// The numerator must vanish on `v = u`.  The quotient coefficients are
    /// `q_{r,s} = Σ_{i<r} n_{r−1−i, s+i}`; every term has degree one higher
    /// than the numerator term it comes from, so the result is exact to order
    /// `L + 1`.
    pub fn divide_u_minus_v<R: Ring<Elem = E>>(&self, r: &R) -> Result<Self, SeriesError> {
        self.check_diagonal(r, 1)?;
        Ok(self.quotient(r, false))
    }

    /// Exact quotient `n(u,v) / (u + v)`; the numerator must vanish on `v = −u`.
    /// `q_{r,s} = Σ_{i<r} (−1)^i n_{r−1−i, s+i}`, exact to order `L + 1`.
    pub fn divide_u_plus_v<R: Ring<Elem = E>>(&self, r: &R) -> Result<Self, SeriesError> {
        self.check_diagonal(r, -1)?;
        Ok(self.quotient(r, true))
    }

    fn quotient<R: Ring<Elem = E>>(&self, r: &R, alternating: bool) -> Self {
        Self::from_fn(self.order + 1, |a, b| {
            let mut acc = r.zero();
            for i in 0..a {
                let c = &self.rows[a - 1 - i][b + i];
                if r.is_zero(c) {
                    continue;
                }
                if alternating && i % 2 == 1 {
                    r.add_assign(&mut acc, &r.neg(c));
                } else {
                    r.add_assign(&mut acc, c);
                }
            }
            acc
        })
    }

    /// Text dump `Σ c_{r,s} x^r y^s` with `x = u^{-1}`, `y = v^{-1}`, for debugging.
    pub fn to_debug_string<R: Ring<Elem = E>>(&self, r: &R) -> String
    where
        E: std::fmt::Debug,
    {
        let parts: Vec<String> = self
            .iter()
            .filter(|(_, _, c)| !r.is_zero(c))
            .map(|(a, b, c)| format!("({c:?}) x^{a} y^{b}"))
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use yq_core::ScalarRing;

    fn xy(order: usize, terms: &[(usize, usize, i64)]) -> BivarSeries<Scalar> {
        BivarSeries::from_fn(order, |a, b| {
            terms.iter().filter(|t| t.0 == a && t.1 == b).map(|t| Scalar::int(t.2)).fold(Scalar::ZERO, |x, y| x + y)
        })
    }

    #[test]
    fn divide_x_minus_y() {
        let r = ScalarRing;
        let n = xy(3, &[(1, 0, 1), (0, 1, -1)]);
        let q = n.divide_u_minus_v(&r).unwrap();
        assert_eq!(q, xy(4, &[(1, 1, -1)]));
    }

    #[test]
    fn divide_x_plus_y() {
        let r = ScalarRing;
        let n = xy(3, &[(1, 0, 1), (0, 1, 1)]);
        assert_eq!(n.divide_u_plus_v(&r).unwrap(), xy(4, &[(1, 1, 1)]));
        assert!(matches!(n.divide_u_minus_v(&r), Err(SeriesError::DivisionPrecondition { sign: 1, degree: 1 })));
    }

    #[test]
    fn diagonals() {
        let r = ScalarRing;
        assert!(xy(2, &[(1, 0, 1), (0, 1, -1)]).diagonal(&r, 1).is_zero(&r));
        assert!(xy(2, &[(1, 0, 1), (0, 1, 1)]).diagonal(&r, -1).is_zero(&r));
    }
}
