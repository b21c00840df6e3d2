//! The block Gauss decomposition `T(u) = F(u) H(u) E(u)`.

use std::fmt::Write as _;

use yq_core::Ring;

use crate::block::{BlockMatrix, BlockRing};
use crate::yq::YQMatrix;
use crate::GaussError;

/// The factors of `T = F H E`: `F` lower unitriangular, `H` block diagonal,
/// `E` upper unitriangular.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussData<E> {
    /// Lower unitriangular factor.
    pub f: BlockMatrix<E>,
    /// Diagonal blocks `H_1, …, H_n`.
    pub h: Vec<YQMatrix<E>>,
    /// Upper unitriangular factor.
    pub e: BlockMatrix<E>,
}

/// Names of the Drinfeld generator series read off a [`GaussData`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesName {
    /// `h_a(u)`, the `(1,1)` entry of `H_a`.
    H(usize),
    /// `h̄_a(u)`, the `(−1,1)` entry of `H_a`.
    HBar(usize),
    /// `e_{ab}(u)`, the `(1,1)` entry of `E_{ab}`.
    E(usize, usize),
    /// `ē_{ab}(u)`, the `(−1,1)` entry of `E_{ab}`.
    EBar(usize, usize),
    /// `f_{ba}(u)`, the `(1,1)` entry of `F_{ba}`.
    F(usize, usize),
    /// `f̄_{ba}(u)`, the `(−1,1)` entry of `F_{ba}`.
    FBar(usize, usize),
}

impl<E: Clone> GaussData<E> {
    /// Rank `n`.
    pub fn n(&self) -> usize {
        self.h.len()
    }

    /// The series with the given name; indices are 1-based, with `E(a, b)`
    /// requiring `a < b` and `F(b, a)` requiring `b > a`.
    pub fn series(&self, name: SeriesName) -> &yq_series::TruncSeries<E> {
        match name {
            SeriesName::H(a) => &self.h[a - 1].a,
            SeriesName::HBar(a) => &self.h[a - 1].b,
            SeriesName::E(a, b) => &self.e.block(a, b).a,
            SeriesName::EBar(a, b) => &self.e.block(a, b).b,
            SeriesName::F(b, a) => &self.f.block(b, a).a,
            SeriesName::FBar(b, a) => &self.f.block(b, a).b,
        }
    }

    /// `h_a(u)`.
    pub fn h(&self, a: usize) -> &yq_series::TruncSeries<E> {
        self.series(SeriesName::H(a))
    }

    /// `h̄_a(u)`.
    pub fn hbar(&self, a: usize) -> &yq_series::TruncSeries<E> {
        self.series(SeriesName::HBar(a))
    }

    /// `e_b(u) = e_{b,b+1}(u)`.
    pub fn e(&self, b: usize) -> &yq_series::TruncSeries<E> {
        self.series(SeriesName::E(b, b + 1))
    }

    /// `ē_b(u) = ē_{b,b+1}(u)`.
    pub fn ebar(&self, b: usize) -> &yq_series::TruncSeries<E> {
        self.series(SeriesName::EBar(b, b + 1))
    }

    /// `f_b(u) = f_{b+1,b}(u)`.
    pub fn f(&self, b: usize) -> &yq_series::TruncSeries<E> {
        self.series(SeriesName::F(b + 1, b))
    }

    /// `f̄_b(u) = f̄_{b+1,b}(u)`.
    pub fn fbar(&self, b: usize) -> &yq_series::TruncSeries<E> {
        self.series(SeriesName::FBar(b + 1, b))
    }

    /// Every series name that exists for rank `n`.
    pub fn names(n: usize) -> Vec<SeriesName> {
        let mut out = Vec::new();
        for a in 1..=n {
            out.push(SeriesName::H(a));
            out.push(SeriesName::HBar(a));
        }
        for a in 1..=n {
            for b in a + 1..=n {
                out.extend([SeriesName::E(a, b), SeriesName::EBar(a, b), SeriesName::F(b, a), SeriesName::FBar(b, a)]);
            }
        }
        out
    }
}

impl std::fmt::Display for SeriesName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SeriesName::H(a) => write!(f, "h[{a}]"),
            SeriesName::HBar(a) => write!(f, "hbar[{a}]"),
            SeriesName::E(a, b) => write!(f, "e[{a},{b}]"),
            SeriesName::EBar(a, b) => write!(f, "ebar[{a},{b}]"),
            SeriesName::F(b, a) => write!(f, "f[{b},{a}]"),
            SeriesName::FBar(b, a) => write!(f, "fbar[{b},{a}]"),
        }
    }
}

impl<'a, R: Ring> BlockRing<'a, R> {
    /// Gauss factors by the quasi-determinant formulas
    /// `H_a = Δ_{a−1,a,a}`, `E_{ab} = H_a^{-1} Δ_{a−1,a,b}`, `F_{ba} = Δ_{a−1,b,a} H_a^{-1}`.
    pub fn gauss_quasideterminant(&self, t: &BlockMatrix<R::Elem>) -> Result<GaussData<R::Elem>, GaussError> {
        let n = t.n();
        let yq = &self.yq;
        let mut h = Vec::with_capacity(n);
        let mut h_inv = Vec::with_capacity(n);
        for a in 1..=n {
            let ha = self.quasi_determinant(t, a - 1, a, a)?;
            h_inv.push(yq.invert(&ha)?);
            h.push(ha);
        }
        let mut e_blocks = vec![vec![yq.zero(); n]; n];
        let mut f_blocks = vec![vec![yq.zero(); n]; n];
        for a in 1..=n {
            e_blocks[a - 1][a - 1] = yq.one();
            f_blocks[a - 1][a - 1] = yq.one();
            for b in a + 1..=n {
                e_blocks[a - 1][b - 1] = yq.mul(&h_inv[a - 1], &self.quasi_determinant(t, a - 1, a, b)?);
                f_blocks[b - 1][a - 1] = yq.mul(&self.quasi_determinant(t, a - 1, b, a)?, &h_inv[a - 1]);
            }
        }
        Ok(GaussData {
            f: BlockMatrix::from_fn(n, |a, b| f_blocks[a - 1][b - 1].clone()),
            h,
            e: BlockMatrix::from_fn(n, |a, b| e_blocks[a - 1][b - 1].clone()),
        })
    }

    /// Gauss factors by successive block elimination (Schur complements).
    pub fn gauss_elimination(&self, t: &BlockMatrix<R::Elem>) -> Result<GaussData<R::Elem>, GaussError> {
        let n = t.n();
        let yq = &self.yq;
        let mut cur: Vec<Vec<YQMatrix<R::Elem>>> =
            (1..=n).map(|a| (1..=n).map(|b| t.block(a, b).clone()).collect()).collect();
        let mut h = Vec::with_capacity(n);
        let mut e_blocks = vec![vec![yq.zero(); n]; n];
        let mut f_blocks = vec![vec![yq.zero(); n]; n];
        for k in 0..n {
            let hk = cur[k][k].clone();
            let hk_inv = yq.invert(&hk)?;
            e_blocks[k][k] = yq.one();
            f_blocks[k][k] = yq.one();
            for b in k + 1..n {
                e_blocks[k][b] = yq.mul(&hk_inv, &cur[k][b]);
                f_blocks[b][k] = yq.mul(&cur[b][k], &hk_inv);
            }
            for a in k + 1..n {
                for b in k + 1..n {
                    let term = yq.mul(&yq.mul(&f_blocks[a][k], &hk), &e_blocks[k][b]);
                    cur[a][b] = yq.sub(&cur[a][b], &term);
                }
            }
            h.push(hk);
        }
        Ok(GaussData {
            f: BlockMatrix::from_fn(n, |a, b| f_blocks[a - 1][b - 1].clone()),
            h,
            e: BlockMatrix::from_fn(n, |a, b| e_blocks[a - 1][b - 1].clone()),
        })
    }

    /// `F · H · E`.
    pub fn reconstruct(&self, gd: &GaussData<R::Elem>) -> BlockMatrix<R::Elem> {
        let n = gd.n();
        let hm = BlockMatrix::from_fn(n, |a, b| if a == b { gd.h[a - 1].clone() } else { self.yq.zero() });
        self.mul(&self.mul(&gd.f, &hm), &gd.e)
    }

    /// Whether two decompositions agree up to truncation.
    pub fn gauss_equal(&self, x: &GaussData<R::Elem>, y: &GaussData<R::Elem>) -> bool {
        self.equal(&x.f, &y.f)
            && self.equal(&x.e, &y.e)
            && x.h.iter().zip(&y.h).all(|(p, q)| self.yq.equal(p, q))
    }

    /// Checks the triangularity and constant-term invariants of a decomposition.
    pub fn check_invariants(&self, gd: &GaussData<R::Elem>) -> bool {
        let n = gd.n();
        let yq = &self.yq;
        let inner = yq.inner();
        for a in 1..=n {
            for b in 1..=n {
                let (eb, fb) = (gd.e.block(a, b), gd.f.block(a, b));
                let ok = match a.cmp(&b) {
                    std::cmp::Ordering::Equal => yq.equal(eb, &yq.one()) && yq.equal(fb, &yq.one()),
                    std::cmp::Ordering::Less => {
                        yq.is_zero(fb) && inner.is_zero(eb.a.coeff(0)) && inner.is_zero(eb.b.coeff(0))
                    }
                    std::cmp::Ordering::Greater => {
                        yq.is_zero(eb) && inner.is_zero(fb.a.coeff(0)) && inner.is_zero(fb.b.coeff(0))
                    }
                };
                if !ok {
                    return false;
                }
            }
            let h = &gd.h[a - 1];
            if !inner.is_zero(&inner.sub(h.a.coeff(0), &inner.one())) || !inner.is_zero(h.b.coeff(0)) {
                return false;
            }
        }
        true
    }
}

/// Canonical text form: one line `name^(k) = <coefficient>` per nonzero
/// coefficient, in a fixed order.
pub fn gauss_to_text<E: Clone>(gd: &GaussData<E>, fmt: impl Fn(&E) -> Option<String>) -> String {
    let mut out = String::new();
    for name in GaussData::<E>::names(gd.n()) {
        for (k, c) in gd.series(name).coeffs().iter().enumerate() {
            if let Some(s) = fmt(c) {
                let _ = writeln!(out, "{name}^({k}) = {s}");
            }
        }
    }
    out
}
