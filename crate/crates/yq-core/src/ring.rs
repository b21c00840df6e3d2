//! A minimal interface for the coefficient rings used by series, matrices
//! and tensors.
//!
//! Rings are passed as context values (`&self`) so that a ring can carry
//! state such as the rank `n` and the rewriting caches of the Yangian.

use std::fmt::Debug;

use crate::scalar::Scalar;

/// An associative unital `Q`-superalgebra.
pub trait Ring: Send + Sync {
    /// Element type.
    type Elem: Clone + Debug + Send + Sync;

    /// Additive identity.
    fn zero(&self) -> Self::Elem;
    /// Multiplicative identity.
    fn one(&self) -> Self::Elem;
    /// Zero test.
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// `a + b`.
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `−a`.
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `c · a` for a rational scalar `c`.
    fn scale(&self, c: &Scalar, a: &Self::Elem) -> Self::Elem;
    /// `a · b`.
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Splits `a` into its even and odd components.
    fn parity_split(&self, a: &Self::Elem) -> (Self::Elem, Self::Elem);

    /// `a − b`.
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    /// `c · 1`.
    fn from_scalar(&self, c: &Scalar) -> Self::Elem {
        self.scale(c, &self.one())
    }

    /// In-place `a += b`.
    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.add(a, b);
    }

    /// Super commutator extended bilinearly to inhomogeneous elements:
    /// `[a, b] = ab − ba + 2·b₁a₁` where `a₁`, `b₁` are the odd parts.
    fn bracket(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        let mut out = self.sub(&ab, &ba);
        let (_, a1) = self.parity_split(a);
        let (_, b1) = self.parity_split(b);
        if !self.is_zero(&a1) && !self.is_zero(&b1) {
            let t = self.mul(&b1, &a1);
            out = self.add(&out, &self.scale(&Scalar::int(2), &t));
        }
        out
    }
}

/// The field `Q` itself, purely even.
#[derive(Debug, Clone, Copy, Default)]
pub struct ScalarRing;

impl Ring for ScalarRing {
    type Elem = Scalar;

    fn zero(&self) -> Scalar {
        Scalar::ZERO
    }
    fn one(&self) -> Scalar {
        Scalar::ONE
    }
    fn is_zero(&self, a: &Scalar) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a + b
    }
    fn neg(&self, a: &Scalar) -> Scalar {
        -a
    }
    fn scale(&self, c: &Scalar, a: &Scalar) -> Scalar {
        c * a
    }
    fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a * b
    }
    fn parity_split(&self, a: &Scalar) -> (Scalar, Scalar) {
        (a.clone(), Scalar::ZERO)
    }
}

/// The free superalgebra on canonical generators with filtration truncation.
#[derive(Debug, Clone, Copy)]
pub struct FreeRing {
    /// Monomials of filtration degree above this bound are dropped.
    pub trunc: u32,
}

impl Ring for FreeRing {
    type Elem = crate::poly::SuperPoly;

    fn zero(&self) -> Self::Elem {
        Self::Elem::zero()
    }
    fn one(&self) -> Self::Elem {
        Self::Elem::one()
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.add(b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.neg()
    }
    fn scale(&self, c: &Scalar, a: &Self::Elem) -> Self::Elem {
        a.scale(c)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.multiply(b, self.trunc)
    }
    fn parity_split(&self, a: &Self::Elem) -> (Self::Elem, Self::Elem) {
        a.parity_split()
    }
    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        a.add_scaled(b, &Scalar::ONE);
    }
}
