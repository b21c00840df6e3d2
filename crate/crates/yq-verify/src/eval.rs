//! Evaluation of relation expressions to tensors of bivariate series.

use yq_core::{Ring, Scalar};
use yq_series::{BivarRing, BivarSeries, SeriesError, SeriesRing, TruncSeries};
use yq_tensor::{build_operator, key_get, place_matrix, yq_entry, OperatorName, SuperTensor, TensorRing};

use crate::env::Env;
use crate::expr::{Expr, OpKind, Relation, SeriesAtom};
use crate::EvalError;

/// Local dimension of every tensor slot (`C^{1|1}`).
pub const SLOT_DIM: usize = 2;

/// A value: an element of `End(C^{1|1})^{⊗k} ⊗ A[[u^{-1}, v^{-1}]]`.
pub type Value<E> = SuperTensor<BivarSeries<E>>;

/// Evaluates expressions in a fixed environment, tensor arity and index binding.
pub struct Evaluator<'e, 'r, R: Ring> {
    env: &'e Env<'r, R>,
    bivar: BivarRing<'r, R>,
    arity: usize,
    vars: Vec<(char, i64)>,
}

/// Where two sides of a relation first differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// Which adjacent pair of sides differs (0 for the first `=`).
    pub side: usize,
    /// Matrix-unit labels of the tensor slots, e.g. `[(1,1),(-1,1)]`.
    pub entry: Vec<(i32, i32)>,
    /// Exponents `(r, s)` of `u^{-r} v^{-s}`.
    pub degree: (usize, usize),
    /// The nonzero coefficient.
    pub coeff: String,
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let entry: Vec<String> = self.entry.iter().map(|(i, j)| format!("E[{i},{j}]")).collect();
        let entry = if entry.is_empty() { "scalar".to_string() } else { entry.join("⊗") };
        write!(
            f,
            "side {}: {} coefficient of u^-{} v^-{} is {}",
            self.side, entry, self.degree.0, self.degree.1, self.coeff
        )
    }
}

fn division_error(e: SeriesError) -> EvalError {
    match e {
        SeriesError::DivisionPrecondition { sign, degree } => EvalError::Division { sign, degree },
        other => EvalError::Gauss(other.to_string()),
    }
}

impl<'e, 'r, R: Ring> Evaluator<'e, 'r, R> {
    /// An evaluator with `arity` tensor slots and index variables `vars`.
    pub fn new(env: &'e Env<'r, R>, arity: usize, vars: Vec<(char, i64)>) -> Self {
        Evaluator { env, bivar: BivarRing::new(env.ring(), env.order()), arity, vars }
    }

    fn tensor(&self) -> TensorRing<'_, BivarRing<'r, R>> {
        TensorRing::new(&self.bivar, self.arity, SLOT_DIM)
    }

    fn var(&self, c: char) -> Option<i64> {
        self.vars.iter().find(|(v, _)| *v == c).map(|(_, x)| *x)
    }

    /// Evaluates an expression.
    pub fn eval(&self, e: &Expr) -> Result<Value<R::Elem>, EvalError> {
        self.eval_k(e, None)
    }

    fn eval_k(&self, e: &Expr, k: Option<OpKind>) -> Result<Value<R::Elem>, EvalError> {
        let tr = self.tensor();
        Ok(match e {
            Expr::Int(v) => tr.from_scalar(&Scalar::int(*v)),
            Expr::X => tr.from_coeff(self.monomial(1, 0)),
            Expr::Y => tr.from_coeff(self.monomial(0, 1)),
            Expr::Series(a) => self.atom(a)?,
            Expr::Op(kind, a, b) => {
                let kind = match kind {
                    OpKind::K => k.ok_or(EvalError::KOutsideSplit)?,
                    other => *other,
                };
                if *a > self.arity || *b > self.arity {
                    return Err(EvalError::BadIndex(format!("operator slot beyond arity {}", self.arity)));
                }
                let name = if kind == OpKind::P { OperatorName::P } else { OperatorName::Q };
                tr.lift(&build_operator(name, SLOT_DIM, a - 1, b - 1, self.arity))
            }
            Expr::Add(a, b) => tr.add(&self.eval_k(a, k)?, &self.eval_k(b, k)?),
            Expr::Sub(a, b) => tr.sub(&self.eval_k(a, k)?, &self.eval_k(b, k)?),
            Expr::Neg(a) => tr.neg(&self.eval_k(a, k)?),
            Expr::Mul(a, b) => tr.mul(&self.eval_k(a, k)?, &self.eval_k(b, k)?),
            Expr::Bracket(a, b) => tr.bracket(&self.eval_k(a, k)?, &self.eval_k(b, k)?),
            Expr::DivMinus(a) => self.divide(&self.eval_k(a, k)?, false)?,
            Expr::DivPlus(a) => self.divide(&self.eval_k(a, k)?, true)?,
            Expr::KSplit(a) => {
                let p = self.divide(&self.eval_k(a, Some(OpKind::P))?, false)?;
                let q = self.divide(&self.eval_k(a, Some(OpKind::Q))?, true)?;
                tr.add(&p, &q)
            }
        })
    }

    fn monomial(&self, r: usize, s: usize) -> BivarSeries<R::Elem> {
        let ring = self.env.ring();
        BivarSeries::from_fn(self.env.order(), |a, b| if (a, b) == (r, s) { ring.one() } else { ring.zero() })
    }

    fn divide(&self, t: &Value<R::Elem>, plus: bool) -> Result<Value<R::Elem>, EvalError> {
        let ring = self.env.ring();
        let mut out = SuperTensor::zero(self.arity, SLOT_DIM);
        let mut keys: Vec<_> = t.iter().map(|(k, _)| *k).collect();
        keys.sort_unstable();
        for key in keys {
            let c = t.get(key).expect("key present");
            let q = if plus { c.divide_u_plus_v(ring) } else { c.divide_u_minus_v(ring) };
            out.add_entry(&self.bivar, key, q.map_err(division_error)?);
        }
        Ok(out)
    }

    fn atom(&self, a: &SeriesAtom) -> Result<Value<R::Elem>, EvalError> {
        let env = self.env;
        let ring = env.ring();
        let order = env.order();
        let idx = a
            .index
            .iter()
            .map(|i| i.eval(&|c| self.var(c)))
            .collect::<Result<Vec<_>, _>>()
            .map_err(EvalError::BadIndex)?;
        let coeff = match &a.coeff {
            Some(t) => {
                let t = t.eval(&|c| self.var(c)).map_err(EvalError::BadIndex)?;
                if t < 0 {
                    return Err(EvalError::BadIndex(format!("negative coefficient index {t}")));
                }
                Some(t as usize)
            }
            None => None,
        };
        let lift = |s: &TruncSeries<R::Elem>| -> BivarSeries<R::Elem> {
            if let Some(t) = coeff {
                let c = if t <= s.order() { s.coeff(t).clone() } else { ring.zero() };
                return BivarSeries::from_fn(order, |p, q| if p + q == 0 { c.clone() } else { ring.zero() });
            }
            let arg = a.arg.expect("parser guarantees an argument");
            let s = if arg.negated() { s.substitute_neg(ring) } else { s.clone() };
            if arg.in_u() {
                BivarSeries::lift_u(ring, &s)
            } else {
                BivarSeries::lift_v(ring, &s)
            }
        };
        match a.slot {
            None => Ok(self.tensor().from_coeff(lift(&env.scalar(&a.name, &idx)?))),
            Some(slot) => {
                if slot > self.arity {
                    return Err(EvalError::BadIndex(format!("slot {slot} beyond arity {}", self.arity)));
                }
                let m = env.matrix(&a.name, &idx)?;
                let sr = SeriesRing::new(ring, order);
                let entries: Vec<Vec<BivarSeries<R::Elem>>> =
                    (0..2).map(|p| (0..2).map(|q| lift(&yq_entry(&sr, &m.a, &m.b, p, q))).collect()).collect();
                Ok(place_matrix(&self.bivar, self.arity, SLOT_DIM, slot - 1, |p, q| entries[p][q].clone()))
            }
        }
    }

    /// Checks a relation chain; `Ok(None)` if every adjacent difference vanishes.
    pub fn check(&self, rel: &Relation) -> Result<Option<Witness>, EvalError> {
        let sides = rel.sides.iter().map(|s| self.eval(s)).collect::<Result<Vec<_>, _>>()?;
        let tr = self.tensor();
        for (i, w) in sides.windows(2).enumerate() {
            let d = tr.sub(&w[0], &w[1]);
            if let Some(wit) = self.witness(&d, i) {
                return Ok(Some(wit));
            }
        }
        Ok(None)
    }

    /// The first nonzero coefficient of `d` (keys sorted), if any.
    pub fn witness(&self, d: &Value<R::Elem>, side: usize) -> Option<Witness> {
        let ring = self.env.ring();
        let mut keys: Vec<_> = d.iter().map(|(k, _)| *k).collect();
        keys.sort_unstable();
        for key in keys {
            let c = d.get(key).expect("key present");
            // Entries absent from one side are exact zeros of unbounded
            // order, so compare only up to the common truncation order.
            let c = if c.order() > self.env.order() { c.truncated(self.env.order()) } else { c.clone() };
            if let Some((r, s, x)) = c.first_nonzero(ring) {
                let entry = (0..self.arity)
                    .map(|k| {
                        let (p, q) = key_get(key, k);
                        (yq_core::index_at_position(p as u32), yq_core::index_at_position(q as u32))
                    })
                    .collect();
                return Some(Witness { side, entry, degree: (r, s), coeff: self.env.describe(x) });
            }
        }
        None
    }
}
