//! The evaluation homomorphism composed with the defining representation.
//!
//! `ev: t_{ij}(u) ↦ δ_{ij} − (−1)^{|j|} g_{ji} u^{-1}` maps `Y(q_n)` onto
//! `U(q_n)`, and `g_{ij} ↦ E_{ij} + E_{−i,−j}` realises `q_n` on `C^{n|n}`.
//! The composite sends every polynomial to an exact rational matrix, which
//! makes it an oracle for anything computed symbolically.

use std::fmt;

use yq_core::{index_position, GenSymbol, Monomial, Parity, Ring, Scalar, SuperPoly};

/// A dense square matrix over `Q` with rows and columns labelled by
/// `I_{n|n}` in the order `1, −1, 2, −2, …`.
#[derive(Clone, PartialEq, Eq)]
pub struct DenseMatrix {
    dim: usize,
    data: Vec<Scalar>,
}

impl DenseMatrix {
    /// The zero matrix.
    pub fn zero(dim: usize) -> DenseMatrix {
        DenseMatrix { dim, data: vec![Scalar::ZERO; dim * dim] }
    }

    /// The identity matrix.
    pub fn identity(dim: usize) -> DenseMatrix {
        let mut m = DenseMatrix::zero(dim);
        for k in 0..dim {
            m.data[k * dim + k] = Scalar::ONE;
        }
        m
    }

    /// Side length.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry at layout positions `(a, b)`.
    pub fn at(&self, a: usize, b: usize) -> &Scalar {
        &self.data[a * self.dim + b]
    }

    /// Mutable entry at layout positions `(a, b)`.
    pub fn at_mut(&mut self, a: usize, b: usize) -> &mut Scalar {
        &mut self.data[a * self.dim + b]
    }

    /// Entry indexed by signed labels `i, j ∈ I_{n|n}`.
    pub fn get(&self, i: i32, j: i32) -> &Scalar {
        self.at(index_position(i) as usize, index_position(j) as usize)
    }

    /// The matrix unit `E_{ij}` for signed labels.
    pub fn unit(dim: usize, i: i32, j: i32) -> DenseMatrix {
        let mut m = DenseMatrix::zero(dim);
        *m.at_mut(index_position(i) as usize, index_position(j) as usize) = Scalar::ONE;
        m
    }

    /// True if every entry vanishes.
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    /// Entrywise sum.
    pub fn add(&self, o: &DenseMatrix) -> DenseMatrix {
        DenseMatrix { dim: self.dim, data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect() }
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &Scalar) -> DenseMatrix {
        DenseMatrix { dim: self.dim, data: self.data.iter().map(|a| a * c).collect() }
    }

    /// Ordinary matrix product.
    pub fn matmul(&self, o: &DenseMatrix) -> DenseMatrix {
        let d = self.dim;
        let mut out = DenseMatrix::zero(d);
        for a in 0..d {
            for k in 0..d {
                let x = self.at(a, k);
                if x.is_zero() {
                    continue;
                }
                for b in 0..d {
                    let y = o.at(k, b);
                    if !y.is_zero() {
                        out.data[a * d + b] += &(x * y);
                    }
                }
            }
        }
        out
    }

    /// Supertrace `Σ (−1)^{|i|} a_{ii}`.
    pub fn supertrace(&self) -> Scalar {
        (0..self.dim).fold(Scalar::ZERO, |acc, a| {
            if a % 2 == 1 {
                acc - self.at(a, a)
            } else {
                acc + self.at(a, a)
            }
        })
    }
}

impl fmt::Debug for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.dim)
            .map(|a| (0..self.dim).map(|b| self.at(a, b).to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

/// The matrix superalgebra `End(C^{n|n})`, graded by `|E_{ij}| = |i| + |j|`.
#[derive(Debug, Clone, Copy)]
pub struct MatrixRing {
    /// Side length `2n`.
    pub dim: usize,
}

impl Ring for MatrixRing {
    type Elem = DenseMatrix;

    fn zero(&self) -> DenseMatrix {
        DenseMatrix::zero(self.dim)
    }
    fn one(&self) -> DenseMatrix {
        DenseMatrix::identity(self.dim)
    }
    fn is_zero(&self, a: &DenseMatrix) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &DenseMatrix, b: &DenseMatrix) -> DenseMatrix {
        a.add(b)
    }
    fn neg(&self, a: &DenseMatrix) -> DenseMatrix {
        a.scale(&Scalar::int(-1))
    }
    fn scale(&self, c: &Scalar, a: &DenseMatrix) -> DenseMatrix {
        a.scale(c)
    }
    fn mul(&self, a: &DenseMatrix, b: &DenseMatrix) -> DenseMatrix {
        a.matmul(b)
    }
    fn parity_split(&self, a: &DenseMatrix) -> (DenseMatrix, DenseMatrix) {
        let mut even = a.clone();
        let mut odd = a.clone();
        for x in 0..self.dim {
            for y in 0..self.dim {
                // Positions alternate even/odd labels: parity of (x + y) decides.
                if (x + y) % 2 == 1 {
                    *even.at_mut(x, y) = Scalar::ZERO;
                } else {
                    *odd.at_mut(x, y) = Scalar::ZERO;
                }
            }
        }
        (even, odd)
    }
}

/// Image of `g_{ij} = E_{ij} + E_{−i,−j}` in the defining representation.
pub fn g_matrix(n: usize, i: i32, j: i32) -> DenseMatrix {
    DenseMatrix::unit(2 * n, i, j).add(&DenseMatrix::unit(2 * n, -i, -j))
}

/// Image of a generator under `ev` followed by the defining representation:
/// `t_{ij}^{(1)} ↦ −(−1)^{|j|} (E_{ji} + E_{−j,−i})`, higher levels ↦ 0.
pub fn ev_generator(n: usize, g: GenSymbol) -> DenseMatrix {
    if g.level() != 1 {
        return DenseMatrix::zero(2 * n);
    }
    let sign = -Parity::of_index(g.col()).sign();
    g_matrix(n, g.col(), g.row()).scale(&sign)
}

/// Image of a word.
pub fn ev_monomial(n: usize, m: &Monomial) -> DenseMatrix {
    m.gens().iter().fold(DenseMatrix::identity(2 * n), |acc, &g| {
        if acc.is_zero() {
            acc
        } else {
            acc.matmul(&ev_generator(n, g))
        }
    })
}

/// Image of a polynomial (evaluated word by word, no rewriting).
pub fn ev_poly(n: usize, p: &SuperPoly) -> DenseMatrix {
    p.iter().fold(DenseMatrix::zero(2 * n), |acc, (m, c)| acc.add(&ev_monomial(n, m).scale(c)))
}

/// `ev(t_{ij}(u))` as a polynomial in `x = u^{-1}`: the list of matrix
/// coefficients `[δ_{ij}·1, −(−1)^{|j|}(E_{ji} + E_{−j,−i})]`.
pub fn ev_defining(n: usize, i: i32, j: i32) -> Vec<DenseMatrix> {
    let c0 = if i == j { DenseMatrix::identity(2 * n) } else { DenseMatrix::zero(2 * n) };
    let c1 = g_matrix(n, j, i).scale(&-Parity::of_index(j).sign());
    vec![c0, c1]
}
