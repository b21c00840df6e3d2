//! Rational functions in `u, v` whose denominators are powers of `u ∓ v`.
//!
//! Every rational function appearing in the R-matrix calculus has the form
//! `N(u,v) / ((u−v)^a (u+v)^b)` with `N` a Laurent polynomial, so this small
//! ring suffices and avoids general rational-function arithmetic.  Sums
//! are brought to a common denominator; no cancellation is attempted, and
//! equality is tested by clearing denominators.

use yq_core::{Ring, Scalar, ScalarRing};

use crate::laurent::{Laurent, LaurentRing};

/// `num / ((u−v)^{minus} (u+v)^{plus})`.
#[derive(Debug, Clone, PartialEq)]
pub struct RatUV {
    /// Laurent numerator.
    pub num: Laurent<Scalar>,
    /// Power of `u − v` in the denominator.
    pub minus: u32,
    /// Power of `u + v` in the denominator.
    pub plus: u32,
}

const POLY: LaurentRing<ScalarRing> = LaurentRing { inner: ScalarRing };

fn u_minus_v() -> Laurent<Scalar> {
    let mut p = Laurent::new();
    p.insert((1, 0), Scalar::ONE);
    p.insert((0, 1), Scalar::int(-1));
    p
}

fn u_plus_v() -> Laurent<Scalar> {
    let mut p = Laurent::new();
    p.insert((1, 0), Scalar::ONE);
    p.insert((0, 1), Scalar::ONE);
    p
}

fn pow(p: &Laurent<Scalar>, k: u32) -> Laurent<Scalar> {
    (0..k).fold(POLY.one(), |acc, _| POLY.mul(&acc, p))
}

impl RatUV {
    /// A Laurent polynomial with trivial denominator.
    pub fn poly(num: Laurent<Scalar>) -> RatUV {
        RatUV { num, minus: 0, plus: 0 }
    }

    /// `c · u^a v^b`.
    pub fn monomial(a: i32, b: i32, c: Scalar) -> RatUV {
        RatUV::poly(POLY.monomial(a, b, c))
    }

    /// `1 / (u − v)`.
    pub fn inv_u_minus_v() -> RatUV {
        RatUV { num: POLY.one(), minus: 1, plus: 0 }
    }

    /// `1 / (u + v)`.
    pub fn inv_u_plus_v() -> RatUV {
        RatUV { num: POLY.one(), minus: 0, plus: 1 }
    }

    fn lift(&self, minus: u32, plus: u32) -> Laurent<Scalar> {
        let f = POLY.mul(&pow(&u_minus_v(), minus - self.minus), &pow(&u_plus_v(), plus - self.plus));
        POLY.mul(&self.num, &f)
    }

    /// Substitutes `(u, v) → (−u, −v)`.
    pub fn negate_uv(&self) -> RatUV {
        let num = POLY.substitute_neg(&self.num, true, true);
        let flip = (self.minus + self.plus) % 2 == 1;
        RatUV { num: if flip { POLY.neg(&num) } else { num }, minus: self.minus, plus: self.plus }
    }
}

/// The ring of [`RatUV`] values.
#[derive(Debug, Clone, Copy, Default)]
pub struct RatRing;

impl Ring for RatRing {
    type Elem = RatUV;

    fn zero(&self) -> RatUV {
        RatUV::poly(Laurent::new())
    }
    fn one(&self) -> RatUV {
        RatUV::poly(POLY.one())
    }
    fn is_zero(&self, a: &RatUV) -> bool {
        a.num.is_empty()
    }
    fn add(&self, a: &RatUV, b: &RatUV) -> RatUV {
        if a.num.is_empty() {
            return b.clone();
        }
        if b.num.is_empty() {
            return a.clone();
        }
        let minus = a.minus.max(b.minus);
        let plus = a.plus.max(b.plus);
        RatUV { num: POLY.add(&a.lift(minus, plus), &b.lift(minus, plus)), minus, plus }
    }
    fn neg(&self, a: &RatUV) -> RatUV {
        RatUV { num: POLY.neg(&a.num), ..a.clone() }
    }
    fn scale(&self, c: &Scalar, a: &RatUV) -> RatUV {
        RatUV { num: POLY.scale(c, &a.num), ..a.clone() }
    }
    fn mul(&self, a: &RatUV, b: &RatUV) -> RatUV {
        RatUV { num: POLY.mul(&a.num, &b.num), minus: a.minus + b.minus, plus: a.plus + b.plus }
    }
    fn parity_split(&self, a: &RatUV) -> (RatUV, RatUV) {
        (a.clone(), self.zero())
    }
}
