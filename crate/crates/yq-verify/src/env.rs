//! The evaluation environment: Gauss data of `T(u)` and the derived series
//! that relation atoms refer to.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use yq_core::{Ring, SuperPoly};
use yq_gauss::{
    defining_block_matrix, generator_block_matrix, BlockMatrix, BlockRing, GaussData, GaussError, SeriesName,
    YQMatrix, YQRing,
};
use yq_rtt::{DenseMatrix, MatrixRing, YangianContext};
use yq_series::TruncSeries;

use crate::EvalError;

/// Human-readable rendering of a coefficient, used in failure witnesses.
pub trait Describe {
    /// A one-line description.
    fn describe(&self) -> String;
}

impl Describe for SuperPoly {
    fn describe(&self) -> String {
        self.to_canonical_string()
    }
}

impl Describe for DenseMatrix {
    fn describe(&self) -> String {
        let d = self.dim();
        let mut parts = Vec::new();
        for a in 0..d {
            for b in 0..d {
                let c = self.at(a, b);
                if !c.is_zero() {
                    parts.push(format!("{c}*E[{},{}]", yq_core::index_at_position(a as u32), yq_core::index_at_position(b as u32)));
                }
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// How the auxiliary series `h′_a(u)`, `h̄′_a(u)` are read off the inverse
/// `H̃_a(u) = H_a(u)^{-1}` (whose YQ entries are `(h̃_a(u), h̃̄_a(u))`):
/// `h′_a = h̃_a` and `h̄′_a = sign · h̃̄_a(±u)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HPrimeBinding {
    /// Sign in front of the odd entry.
    pub bar_sign: i8,
    /// Whether the odd entry is taken at `−u`.
    pub bar_negated: bool,
}

impl HPrimeBinding {
    /// The candidate bindings, in the order they are tried.
    pub const CANDIDATES: [HPrimeBinding; 4] = [
        HPrimeBinding { bar_sign: 1, bar_negated: false },
        HPrimeBinding { bar_sign: -1, bar_negated: false },
        HPrimeBinding { bar_sign: 1, bar_negated: true },
        HPrimeBinding { bar_sign: -1, bar_negated: true },
    ];
}

impl Default for HPrimeBinding {
    fn default() -> Self {
        HPrimeBinding::CANDIDATES[0]
    }
}

impl fmt::Display for HPrimeBinding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.bar_sign < 0 { "-" } else { "" };
        let arg = if self.bar_negated { "-u" } else { "u" };
        write!(f, "h'_a(u) = (H_a(u)^-1)[1,1](u), hbar'_a(u) = {sign}(H_a(u)^-1)[-1,1]({arg})")
    }
}

/// Everything a relation atom can refer to, for one rank `n` and truncation `L`.
pub struct Env<'r, R: Ring> {
    ring: &'r R,
    n: usize,
    order: usize,
    t: BlockMatrix<R::Elem>,
    gauss: GaussData<R::Elem>,
    h_inv: Vec<YQMatrix<R::Elem>>,
    hprime: HPrimeBinding,
    t_inv: OnceLock<Result<BlockMatrix<R::Elem>, GaussError>>,
    psi: Mutex<HashMap<usize, Arc<BlockMatrix<R::Elem>>>>,
    describe: fn(&R::Elem) -> String,
}

impl<'r> Env<'r, YangianContext> {
    /// The symbolic environment: Gauss data of the generator matrix of `Y(q_n)`.
    pub fn symbolic(ctx: &'r YangianContext, order: usize) -> Result<Self, GaussError> {
        let t = generator_block_matrix(ctx, order);
        let gauss = BlockRing::new(ctx, order).gauss_quasideterminant(&t)?;
        Env::from_parts(ctx, order, t, gauss, SuperPoly::describe)
    }
}

impl<'r> Env<'r, MatrixRing> {
    /// The numeric environment: Gauss data of `ev(T(u))` in the defining
    /// representation; `ring` must be `MatrixRing { dim: 2n }`.
    pub fn numeric(ring: &'r MatrixRing, order: usize) -> Result<Self, GaussError> {
        let n = ring.dim / 2;
        let t = defining_block_matrix(n, order);
        let gauss = BlockRing::new(ring, order).gauss_elimination(&t)?;
        Env::from_parts(ring, order, t, gauss, DenseMatrix::describe)
    }
}

impl<'r, R: Ring> Env<'r, R> {
    /// Assembles an environment from a block matrix and its Gauss data.
    pub fn from_parts(
        ring: &'r R,
        order: usize,
        t: BlockMatrix<R::Elem>,
        gauss: GaussData<R::Elem>,
        describe: fn(&R::Elem) -> String,
    ) -> Result<Self, GaussError> {
        let yq = YQRing::new(ring, order);
        let h_inv = gauss.h.iter().map(|h| yq.invert(h)).collect::<Result<Vec<_>, _>>()?;
        Ok(Env {
            ring,
            n: gauss.n(),
            order,
            t,
            gauss,
            h_inv,
            hprime: HPrimeBinding::default(),
            t_inv: OnceLock::new(),
            psi: Mutex::new(HashMap::new()),
            describe,
        })
    }

    /// Coefficient ring.
    pub fn ring(&self) -> &'r R {
        self.ring
    }

    /// Rank `n`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Truncation order `L`.
    pub fn order(&self) -> usize {
        self.order
    }

    /// The Gauss factors.
    pub fn gauss(&self) -> &GaussData<R::Elem> {
        &self.gauss
    }

    /// The current `h′` binding.
    pub fn hprime(&self) -> HPrimeBinding {
        self.hprime
    }

    /// Rebinds `h′`.
    pub fn set_hprime(&mut self, b: HPrimeBinding) {
        self.hprime = b;
    }

    /// Renders a coefficient.
    pub fn describe(&self, e: &R::Elem) -> String {
        (self.describe)(e)
    }

    fn yq(&self) -> YQRing<'r, R> {
        YQRing::new(self.ring, self.order)
    }

    fn check(&self, ok: bool, what: impl FnOnce() -> String) -> Result<(), EvalError> {
        if ok {
            Ok(())
        } else {
            Err(EvalError::BadIndex(what()))
        }
    }

    fn node(&self, a: i64) -> Result<usize, EvalError> {
        self.check(a >= 1 && a as usize <= self.n, || format!("block index {a} outside 1..={}", self.n))?;
        Ok(a as usize)
    }

    /// `ψ_m(T(u)) = F^{[m]} H^{[m]} E^{[m]}`, the product of the lower-right
    /// `(n−m) × (n−m)` Gauss factors.
    pub fn psi(&self, m: usize) -> Result<Arc<BlockMatrix<R::Elem>>, EvalError> {
        self.check(m >= 1 && m < self.n, || format!("psi_{m} needs 1 <= m < n = {}", self.n))?;
        if let Some(p) = self.psi.lock().expect("psi cache").get(&m) {
            return Ok(p.clone());
        }
        let k = self.n - m;
        let idx: Vec<usize> = (m + 1..=self.n).collect();
        let f = self.gauss.f.submatrix(&idx, &idx);
        let e = self.gauss.e.submatrix(&idx, &idx);
        let yq = self.yq();
        let h = BlockMatrix::from_fn(k, |a, b| if a == b { self.gauss.h[a + m - 1].clone() } else { yq.zero() });
        let br = BlockRing::new(self.ring, self.order);
        let p = Arc::new(br.mul(&br.mul(&f, &h), &e));
        self.psi.lock().expect("psi cache").insert(m, p.clone());
        Ok(p)
    }

    /// `T̃(u) = T(u)^{-1}`.
    pub fn t_inverse(&self) -> Result<&BlockMatrix<R::Elem>, EvalError> {
        self.t_inv
            .get_or_init(|| BlockRing::new(self.ring, self.order).invert(&self.t))
            .as_ref()
            .map_err(|e| EvalError::Gauss(e.to_string()))
    }

    /// The YQ matrix named by a matrix atom: `H{a}`, `Ht{a}` (inverse of
    /// `H_a`), `E{a}` (`= E_{a,a+1}`), `E{a,b}`, `F{b}` (`= F_{b+1,b}`),
    /// `F{b,a}`, `T{a,b}`, `Tt{a,b}`, `Ec{a,b}` (`E_{ab} − E_{a,a+1}E_{a+1,b}`)
    /// and `Psi{m,b,c}` (block `(b,c)` of `ψ_m(T)`).
    pub fn matrix(&self, name: &str, idx: &[i64]) -> Result<YQMatrix<R::Elem>, EvalError> {
        let arity = |k: usize| {
            if idx.len() == k {
                Ok(())
            } else {
                Err(EvalError::BadIndex(format!("{name} takes {k} indices, got {}", idx.len())))
            }
        };
        match (name, idx.len()) {
            ("H", _) => {
                arity(1)?;
                Ok(self.gauss.h[self.node(idx[0])? - 1].clone())
            }
            ("Ht", _) => {
                arity(1)?;
                Ok(self.h_inv[self.node(idx[0])? - 1].clone())
            }
            ("E", 1) => self.matrix("E", &[idx[0], idx[0] + 1]),
            ("F", 1) => self.matrix("F", &[idx[0] + 1, idx[0]]),
            ("E", 2) => {
                let (a, b) = (self.node(idx[0])?, self.node(idx[1])?);
                self.check(a < b, || format!("E{{{a},{b}}} needs a < b"))?;
                Ok(self.gauss.e.block(a, b).clone())
            }
            ("F", 2) => {
                let (b, a) = (self.node(idx[0])?, self.node(idx[1])?);
                self.check(a < b, || format!("F{{{b},{a}}} needs b > a"))?;
                Ok(self.gauss.f.block(b, a).clone())
            }
            ("T", _) => {
                arity(2)?;
                Ok(self.t.block(self.node(idx[0])?, self.node(idx[1])?).clone())
            }
            ("Tt", _) => {
                arity(2)?;
                let (a, b) = (self.node(idx[0])?, self.node(idx[1])?);
                Ok(self.t_inverse()?.block(a, b).clone())
            }
            ("Ec", _) => {
                arity(2)?;
                let (a, b) = (self.node(idx[0])?, self.node(idx[1])?);
                self.check(a + 1 < b, || format!("Ec{{{a},{b}}} needs a + 1 < b"))?;
                let yq = self.yq();
                let prod = yq.mul(self.gauss.e.block(a, a + 1), self.gauss.e.block(a + 1, b));
                Ok(yq.sub(self.gauss.e.block(a, b), &prod))
            }
            ("Psi", _) => {
                arity(3)?;
                let m = idx[0];
                self.check(m >= 1, || "psi index m must be positive".into())?;
                let p = self.psi(m as usize)?;
                let k = p.n() as i64;
                let (b, c) = (idx[1], idx[2]);
                self.check((1..=k).contains(&b) && (1..=k).contains(&c), || {
                    format!("Psi block ({b},{c}) outside 1..={k}")
                })?;
                Ok(p.block(b as usize, c as usize).clone())
            }
            _ => Err(EvalError::UnknownSeries(format!("{name} with {} indices", idx.len()))),
        }
    }

    /// The series named by a scalar atom: `h`, `hb`, `e`, `eb`, `f`, `fb`
    /// (the `(1,1)` resp. `(−1,1)` entries of `H`, `E`, `F` with the same
    /// indexing as [`Env::matrix`]), `hp`, `hbp` (the bound `h′`, `h̄′`) and
    /// the ring-dotted `eo`, `ebo`, `fo`, `fbo` (first coefficient removed).
    pub fn scalar(&self, name: &str, idx: &[i64]) -> Result<TruncSeries<R::Elem>, EvalError> {
        let (base, dotted) = match name {
            "eo" => ("e", true),
            "ebo" => ("eb", true),
            "fo" => ("f", true),
            "fbo" => ("fb", true),
            other => (other, false),
        };
        let s = match base {
            "h" => self.matrix("H", idx)?.a,
            "hb" => self.matrix("H", idx)?.b,
            "e" => self.matrix("E", idx)?.a,
            "eb" => self.matrix("E", idx)?.b,
            "f" => self.matrix("F", idx)?.a,
            "fb" => self.matrix("F", idx)?.b,
            "hp" => self.matrix("Ht", idx)?.a,
            "hbp" => {
                let b = self.matrix("Ht", idx)?.b;
                let b = if self.hprime.bar_negated { b.substitute_neg(self.ring) } else { b };
                if self.hprime.bar_sign < 0 {
                    b.neg(self.ring)
                } else {
                    b
                }
            }
            _ => return Err(EvalError::UnknownSeries(name.to_string())),
        };
        if dotted {
            let ring = self.ring;
            Ok(TruncSeries::from_fn(s.order(), |k| if k == 1 { ring.zero() } else { s.coeff(k).clone() }))
        } else {
            Ok(s)
        }
    }

    /// A named Gauss series (used by the CLI `eval` accessors).
    pub fn series(&self, name: SeriesName) -> &TruncSeries<R::Elem> {
        self.gauss.series(name)
    }
}
