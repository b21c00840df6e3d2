//! `n × n` block matrices whose blocks are of YQ form.

use rayon::prelude::*;
use yq_core::Ring;

use crate::yq::{YQMatrix, YQRing};
use crate::GaussError;

/// An `n × n` grid of YQ blocks, stored row-major; block `(a, b)` uses
/// 1-based indices as in `T(u) = Σ E_{ab} ⊗ T_{ab}(u)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockMatrix<E> {
    n: usize,
    blocks: Vec<YQMatrix<E>>,
}

impl<E: Clone> BlockMatrix<E> {
    /// Builds the matrix from a block generator `f(a, b)` (1-based).
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> YQMatrix<E>) -> Self {
        let mut blocks = Vec::with_capacity(n * n);
        for a in 1..=n {
            for b in 1..=n {
                blocks.push(f(a, b));
            }
        }
        BlockMatrix { n, blocks }
    }

    /// Number of block rows.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Block `(a, b)`, 1-based.
    pub fn block(&self, a: usize, b: usize) -> &YQMatrix<E> {
        &self.blocks[(a - 1) * self.n + (b - 1)]
    }

    /// The sub-matrix on rows `rows` and columns `cols` (1-based lists).
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> BlockMatrix<E> {
        assert_eq!(rows.len(), cols.len(), "only square sub-matrices are supported");
        BlockMatrix::from_fn(rows.len(), |a, b| self.block(rows[a - 1], cols[b - 1]).clone())
    }
}

/// Block-matrix arithmetic over a [`YQRing`].
#[derive(Debug, Clone, Copy)]
pub struct BlockRing<'a, R> {
    /// The ring of blocks.
    pub yq: YQRing<'a, R>,
}

impl<'a, R: Ring> BlockRing<'a, R> {
    /// Block matrices over YQ matrices of the given order.
    pub fn new(inner: &'a R, order: usize) -> Self {
        BlockRing { yq: YQRing::new(inner, order) }
    }

    /// The identity of size `n`.
    pub fn identity(&self, n: usize) -> BlockMatrix<R::Elem> {
        BlockMatrix::from_fn(n, |a, b| if a == b { self.yq.one() } else { self.yq.zero() })
    }

    /// `x + y`.
    pub fn add(&self, x: &BlockMatrix<R::Elem>, y: &BlockMatrix<R::Elem>) -> BlockMatrix<R::Elem> {
        BlockMatrix::from_fn(x.n, |a, b| self.yq.add(x.block(a, b), y.block(a, b)))
    }

    /// `x − y`.
    pub fn sub(&self, x: &BlockMatrix<R::Elem>, y: &BlockMatrix<R::Elem>) -> BlockMatrix<R::Elem> {
        BlockMatrix::from_fn(x.n, |a, b| self.yq.sub(x.block(a, b), y.block(a, b)))
    }

    /// Equality up to truncation.
    pub fn equal(&self, x: &BlockMatrix<R::Elem>, y: &BlockMatrix<R::Elem>) -> bool {
        x.n == y.n && x.blocks.iter().zip(&y.blocks).all(|(p, q)| self.yq.equal(p, q))
    }

    /// Block product; the `(a, b)` grid is computed in parallel.
    pub fn mul(&self, x: &BlockMatrix<R::Elem>, y: &BlockMatrix<R::Elem>) -> BlockMatrix<R::Elem> {
        let n = x.n;
        let blocks: Vec<_> = (0..n * n)
            .into_par_iter()
            .map(|idx| {
                let (a, b) = (idx / n + 1, idx % n + 1);
                let mut acc = self.yq.zero();
                for c in 1..=n {
                    acc = self.yq.add(&acc, &self.yq.mul(x.block(a, c), y.block(c, b)));
                }
                acc
            })
            .collect();
        BlockMatrix { n, blocks }
    }

    /// Two-sided inverse of `T = 1 + O(u^{-1})` by the Neumann series.
    pub fn invert(&self, t: &BlockMatrix<R::Elem>) -> Result<BlockMatrix<R::Elem>, GaussError> {
        let n = t.n;
        let inner = self.yq.inner();
        for a in 1..=n {
            for b in 1..=n {
                let x = t.block(a, b);
                let want_one = a == b;
                let c = x.a.coeff(0);
                let ok_a = if want_one { inner.is_zero(&inner.sub(c, &inner.one())) } else { inner.is_zero(c) };
                if !ok_a || !inner.is_zero(x.b.coeff(0)) {
                    return Err(GaussError::Precondition("block matrix must be 1 + O(u^-1)".into()));
                }
            }
        }
        if n == 1 {
            return Ok(BlockMatrix::from_fn(1, |_, _| self.yq.invert(t.block(1, 1)).expect("checked")));
        }
        let id = self.identity(n);
        let m = self.sub(&id, t);
        let mut acc = id.clone();
        for _ in 0..self.yq.order() {
            acc = self.add(&id, &self.mul(&m, &acc));
        }
        Ok(acc)
    }

    /// The quasi-determinant `Δ_{r,a,b}(T) = T_{ab} − T_{a,[1..r]} (T_{[1..r],[1..r]})^{-1} T_{[1..r],b}`
    /// for `r < a, b` (1-based).
    pub fn quasi_determinant(
        &self,
        t: &BlockMatrix<R::Elem>,
        r: usize,
        a: usize,
        b: usize,
    ) -> Result<YQMatrix<R::Elem>, GaussError> {
        if r >= a || r >= b || a > t.n || b > t.n {
            return Err(GaussError::Precondition(format!("quasi-determinant needs r < a, b ≤ n (r={r}, a={a}, b={b})")));
        }
        if r == 0 {
            return Ok(t.block(a, b).clone());
        }
        let lead: Vec<usize> = (1..=r).collect();
        let inv = self.invert(&t.submatrix(&lead, &lead))?;
        let mut acc = t.block(a, b).clone();
        for c in 1..=r {
            for d in 1..=r {
                let term = self.yq.mul(&self.yq.mul(t.block(a, c), inv.block(c, d)), t.block(d, b));
                acc = self.yq.sub(&acc, &term);
            }
        }
        Ok(acc)
    }
}
