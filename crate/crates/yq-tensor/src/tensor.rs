//! Elements of `End(C^{N})^{⊗m} ⊗ A` with sign-correct super multiplication.
//!
//! Each tensor slot carries a matrix unit `E_{ab}` of the `N`-dimensional
//! super space whose basis is labelled `1, −1, 2, −2, …` (so layout
//! position `p` is odd iff `p` is odd).  The coefficient from `A` is kept
//! in the last factor.  The product rule is
//!
//! ```text
//! (e₁⊗…⊗e_m⊗c)(f₁⊗…⊗f_m⊗d) = (−1)^{Σ_k |f_k|(Σ_{l>k}|e_l| + |c|)} e₁f₁⊗…⊗e_mf_m⊗cd.
//! ```

use rustc_hash::FxHashMap;
use yq_core::{Ring, Scalar};

/// Most tensor slots supported by the packed key.
pub const MAX_ARITY: usize = 8;
/// Largest local dimension supported by the packed key.
pub const MAX_DIM: usize = 16;

/// Packed indices: slot `k` occupies bits `8k..8k+8` (row in the low nibble).
pub type TensorKey = u64;

/// Row and column layout positions of slot `k`.
pub fn key_get(key: TensorKey, k: usize) -> (usize, usize) {
    let b = (key >> (8 * k)) & 0xff;
    ((b & 0xf) as usize, (b >> 4) as usize)
}

/// Replaces slot `k`.
pub fn key_set(key: TensorKey, k: usize, row: usize, col: usize) -> TensorKey {
    let mask = !(0xffu64 << (8 * k));
    (key & mask) | (((row as u64) | ((col as u64) << 4)) << (8 * k))
}

fn slot_parity(key: TensorKey, k: usize) -> bool {
    let (r, c) = key_get(key, k);
    (r + c) % 2 == 1
}

/// An element of `End(C^{dim})^{⊗arity} ⊗ A`, stored sparsely.
#[derive(Debug, Clone, PartialEq)]
pub struct SuperTensor<E> {
    arity: usize,
    dim: usize,
    terms: FxHashMap<TensorKey, E>,
}

impl<E: Clone> SuperTensor<E> {
    /// The zero tensor.
    pub fn zero(arity: usize, dim: usize) -> Self {
        assert!(arity <= MAX_ARITY && dim <= MAX_DIM && dim % 2 == 0, "unsupported tensor shape");
        SuperTensor { arity, dim, terms: FxHashMap::default() }
    }

    /// Number of slots.
    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Local dimension of each slot.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Stored `(key, coefficient)` pairs.
    pub fn iter(&self) -> impl Iterator<Item = (&TensorKey, &E)> {
        self.terms.iter()
    }

    /// Number of stored entries.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// True if nothing is stored.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient at a key, if stored.
    pub fn get(&self, key: TensorKey) -> Option<&E> {
        self.terms.get(&key)
    }

    /// Coefficientwise map (zero results are dropped by `is_zero`).
    pub fn map<F: Clone>(&self, mut f: impl FnMut(&E) -> F, is_zero: impl Fn(&F) -> bool) -> SuperTensor<F> {
        let terms = self
            .terms
            .iter()
            .filter_map(|(k, c)| {
                let v = f(c);
                (!is_zero(&v)).then_some((*k, v))
            })
            .collect();
        SuperTensor { arity: self.arity, dim: self.dim, terms }
    }

    /// Relabels keys (with a sign flag per key); used for slot permutations
    /// and for `τ` on a slot.
    pub fn relabel<R: Ring<Elem = E>>(&self, r: &R, mut f: impl FnMut(TensorKey) -> (TensorKey, bool)) -> Self {
        let mut out = SuperTensor::zero(self.arity, self.dim);
        for (k, c) in &self.terms {
            let (nk, neg) = f(*k);
            out.add_entry(r, nk, if neg { r.neg(c) } else { c.clone() });
        }
        out
    }

    /// Adds `c` at `key`.
    pub fn add_entry<R: Ring<Elem = E>>(&mut self, r: &R, key: TensorKey, c: E) {
        if r.is_zero(&c) {
            return;
        }
        let v = match self.terms.remove(&key) {
            Some(old) => r.add(&old, &c),
            None => c,
        };
        if !r.is_zero(&v) {
            self.terms.insert(key, v);
        }
    }

    /// The identity key for this shape's diagonal entry `(p, p, …)`.
    pub fn diagonal_keys(arity: usize, dim: usize) -> Vec<TensorKey> {
        let mut keys = vec![0u64];
        for k in 0..arity {
            keys = keys.into_iter().flat_map(|key| (0..dim).map(move |p| key_set(key, k, p, p))).collect();
        }
        keys
    }

    /// Total parity of the matrix units in `key`.
    pub fn key_parity(&self, key: TensorKey) -> bool {
        (0..self.arity).filter(|&k| slot_parity(key, k)).count() % 2 == 1
    }
}

/// `End(C^{dim})^{⊗arity} ⊗ A` as a ring.
#[derive(Debug, Clone, Copy)]
pub struct TensorRing<'a, R> {
    /// Coefficient superalgebra `A`.
    pub inner: &'a R,
    /// Number of slots.
    pub arity: usize,
    /// Local dimension.
    pub dim: usize,
}

impl<'a, R: Ring> TensorRing<'a, R> {
    /// A tensor ring over `inner`.
    pub fn new(inner: &'a R, arity: usize, dim: usize) -> Self {
        TensorRing { inner, arity, dim }
    }

    /// `c · 1` with `c ∈ A`.
    pub fn from_coeff(&self, c: R::Elem) -> SuperTensor<R::Elem> {
        let mut t = SuperTensor::zero(self.arity, self.dim);
        for key in SuperTensor::<R::Elem>::diagonal_keys(self.arity, self.dim) {
            t.add_entry(self.inner, key, c.clone());
        }
        t
    }

    /// Lifts a scalar tensor of the same shape into this ring.
    pub fn lift(&self, t: &SuperTensor<Scalar>) -> SuperTensor<R::Elem> {
        assert_eq!((t.arity, t.dim), (self.arity, self.dim), "shape mismatch");
        let one = self.inner.one();
        t.map(|c| self.inner.scale(c, &one), |c| self.inner.is_zero(c))
    }

    /// Multiplies every coefficient on the right by `c` (which stays in the
    /// last factor, so no sign arises).
    pub fn mul_coeff_right(&self, t: &SuperTensor<R::Elem>, c: &R::Elem) -> SuperTensor<R::Elem> {
        t.map(|x| self.inner.mul(x, c), |x| self.inner.is_zero(x))
    }
}

impl<R: Ring> Ring for TensorRing<'_, R> {
    type Elem = SuperTensor<R::Elem>;

    fn zero(&self) -> Self::Elem {
        SuperTensor::zero(self.arity, self.dim)
    }
    fn one(&self) -> Self::Elem {
        self.from_coeff(self.inner.one())
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.terms.is_empty()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let (mut out, small) = if a.len() >= b.len() { (a.clone(), b) } else { (b.clone(), a) };
        for (k, c) in &small.terms {
            out.add_entry(self.inner, *k, c.clone());
        }
        out
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.map(|c| self.inner.neg(c), |c| self.inner.is_zero(c))
    }
    fn scale(&self, s: &Scalar, a: &Self::Elem) -> Self::Elem {
        a.map(|c| self.inner.scale(s, c), |c| self.inner.is_zero(c))
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let m = self.arity;
        let mut out = SuperTensor::zero(m, self.dim);
        // Group the right factor by its row indices so matching is a lookup.
        let mut by_rows: FxHashMap<u64, Vec<(TensorKey, &R::Elem, bool, u32)>> = FxHashMap::default();
        for (kb, d) in &b.terms {
            let mut rows = 0u64;
            let mut odd_mask = 0u32;
            for k in 0..m {
                let (r, _) = key_get(*kb, k);
                rows |= (r as u64) << (4 * k);
                if slot_parity(*kb, k) {
                    odd_mask |= 1 << k;
                }
            }
            by_rows.entry(rows).or_default().push((*kb, d, odd_mask.count_ones() % 2 == 1, odd_mask));
        }
        for (ka, c) in &a.terms {
            let mut cols = 0u64;
            let mut e_odd = 0u32;
            for k in 0..m {
                let (_, col) = key_get(*ka, k);
                cols |= (col as u64) << (4 * k);
                if slot_parity(*ka, k) {
                    e_odd |= 1 << k;
                }
            }
            let Some(list) = by_rows.get(&cols) else { continue };
            let (c0, c1) = self.inner.parity_split(c);
            let c_bar = self.inner.sub(&c0, &c1);
            for (kb, d, f_total, f_mask) in list {
                // Σ_k |f_k| · Σ_{l>k} |e_l|
                let mut s = false;
                for k in 0..m {
                    if f_mask & (1 << k) != 0 {
                        let later = (e_odd >> (k + 1)).count_ones() % 2 == 1;
                        s ^= later;
                    }
                }
                let coeff = if *f_total { &c_bar } else { c };
                let mut prod = self.inner.mul(coeff, d);
                if s {
                    prod = self.inner.neg(&prod);
                }
                let mut key = 0u64;
                for k in 0..m {
                    let (r, _) = key_get(*ka, k);
                    let (_, col) = key_get(*kb, k);
                    key = key_set(key, k, r, col);
                }
                out.add_entry(self.inner, key, prod);
            }
        }
        out
    }
    fn parity_split(&self, a: &Self::Elem) -> (Self::Elem, Self::Elem) {
        let mut even = SuperTensor::zero(self.arity, self.dim);
        let mut odd = SuperTensor::zero(self.arity, self.dim);
        for (k, c) in &a.terms {
            let (c0, c1) = self.inner.parity_split(c);
            let key_odd = a.key_parity(*k);
            let (to_even, to_odd) = if key_odd { (c1, c0) } else { (c0, c1) };
            even.add_entry(self.inner, *k, to_even);
            odd.add_entry(self.inner, *k, to_odd);
        }
        (even, odd)
    }
    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        for (k, c) in &b.terms {
            a.add_entry(self.inner, *k, c.clone());
        }
    }
}
