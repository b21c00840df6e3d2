//! The expression language of `yq eval`.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary (["*"] unary)*           juxtaposition multiplies
//! unary  := "-" unary | atom
//! atom   := number ["/" number]
//!         | "t[" i "," j "," r "]"
//!         | ("h" | "hbar") "[" a "," r "]"
//!         | ("e" | "ebar" | "f" | "fbar") "[" a "," b "," r "]"
//!         | ("e" | "ebar" | "f" | "fbar") "[" a "," r "]"   simple root a
//!         | "[" expr "," expr "]"            super commutator
//!         | "(" expr ")"
//! ```
//!
//! `t[i,j,0]` is `δ_ij`.  The Gauss accessors read coefficients of the
//! Drinfeld series from a decomposition computed on first use and cached.

use std::cell::OnceCell;

use yq_core::{canonicalize, Ring, Scalar, SuperPoly};
use yq_gauss::{yangian_gauss, GaussData, GaussError, SeriesName};
use yq_rtt::YangianContext;

/// Errors of [`Calculator::eval`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CalcError {
    /// The input does not match the grammar.
    #[error("parse error at column {column}: {message}")]
    Parse {
        /// 1-based character column.
        column: usize,
        /// What was expected.
        message: String,
    },
    /// An index or level is out of range for the configured rank and order.
    #[error("{0}")]
    Range(String),
    /// The Gauss decomposition could not be formed.
    #[error(transparent)]
    Gauss(#[from] GaussError),
}

/// Evaluates expressions in `Y(q_n)` at a fixed truncation order.
pub struct Calculator {
    ctx: YangianContext,
    order: usize,
    gauss: OnceCell<GaussData<SuperPoly>>,
}

impl Calculator {
    /// Calculator for rank `n` and truncation order `L`.
    pub fn new(n: usize, order: usize) -> Calculator {
        Calculator { ctx: YangianContext::new(n), order, gauss: OnceCell::new() }
    }

    /// Parses and evaluates `input`; the result is in PBW normal form,
    /// truncated at filtration degree `L`.
    pub fn eval(&self, input: &str) -> Result<SuperPoly, CalcError> {
        let mut p = Parser { calc: self, chars: input.chars().collect(), pos: 0 };
        let v = p.expr()?;
        p.skip_ws();
        if p.pos < p.chars.len() {
            return Err(p.error("expected an operator or end of input"));
        }
        Ok(self.ctx.normal_form_truncated(&v, self.order as u32))
    }

    fn gauss(&self) -> Result<&GaussData<SuperPoly>, CalcError> {
        if let Some(gd) = self.gauss.get() {
            return Ok(gd);
        }
        let gd = yangian_gauss(&self.ctx, self.order)?;
        Ok(self.gauss.get_or_init(|| gd))
    }

    fn generator(&self, i: i64, j: i64, r: i64) -> Result<SuperPoly, CalcError> {
        let n = self.ctx.n() as i64;
        let ok = |x: i64| x != 0 && x.abs() <= n;
        if !ok(i) || !ok(j) || r < 0 {
            return Err(CalcError::Range(format!("t[{i},{j},{r}] is not defined for n = {n}")));
        }
        if r == 0 {
            return Ok(if i == j { SuperPoly::one() } else { SuperPoly::zero() });
        }
        let (g, c) = canonicalize(i as i32, j as i32, r as u32, self.ctx.n())
            .map_err(|e| CalcError::Range(e.to_string()))?;
        Ok(SuperPoly::gen(g).scale(&c))
    }

    fn accessor(&self, name: &str, args: &[i64]) -> Result<SuperPoly, CalcError> {
        let n = self.ctx.n() as i64;
        let bad = || CalcError::Range(format!("{name}{args:?} is not defined for n = {n}"));
        let (series, r) = match (name, args) {
            ("h", &[a, r]) | ("hbar", &[a, r]) => {
                if a < 1 || a > n {
                    return Err(bad());
                }
                let a = a as usize;
                (if name == "h" { SeriesName::H(a) } else { SeriesName::HBar(a) }, r)
            }
            ("h", _) | ("hbar", _) => return Err(bad()),
            (_, &[a, r]) if name.starts_with('e') => return self.accessor(name, &[a, a + 1, r]),
            (_, &[a, r]) => return self.accessor(name, &[a + 1, a, r]),
            (_, &[a, b, r]) => {
                let (lo, hi) = if name.starts_with('e') { (a, b) } else { (b, a) };
                if lo < 1 || hi > n || lo >= hi {
                    return Err(bad());
                }
                let (a, b) = (a as usize, b as usize);
                let s = match name {
                    "e" => SeriesName::E(a, b),
                    "ebar" => SeriesName::EBar(a, b),
                    "f" => SeriesName::F(a, b),
                    _ => SeriesName::FBar(a, b),
                };
                (s, r)
            }
            _ => return Err(bad()),
        };
        if r < 0 || r as usize > self.order {
            return Err(CalcError::Range(format!(
                "coefficient {r} of {series} is beyond the truncation order {}",
                self.order
            )));
        }
        Ok(self.gauss()?.series(series).coeff(r as usize).clone())
    }
}

const ACCESSORS: [&str; 6] = ["hbar", "h", "ebar", "e", "fbar", "f"];

struct Parser<'a> {
    calc: &'a Calculator,
    chars: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> CalcError {
        CalcError::Parse { column: self.pos + 1, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> Result<(), CalcError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn expr(&mut self) -> Result<SuperPoly, CalcError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some('-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_factor(c: Option<char>) -> bool {
        c.is_some_and(|c| c.is_ascii_digit() || c.is_ascii_alphabetic() || c == '(' || c == '[')
    }

    fn term(&mut self) -> Result<SuperPoly, CalcError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = self.calc.ctx.mul(&acc, &rhs);
                }
                c if Self::starts_factor(c) => {
                    let rhs = self.unary()?;
                    acc = self.calc.ctx.mul(&acc, &rhs);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<SuperPoly, CalcError> {
        if self.peek() == Some('-') {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        self.atom()
    }

    fn integer(&mut self) -> Result<i64, CalcError> {
        self.skip_ws();
        let start = self.pos;
        if self.chars.get(self.pos) == Some(&'-') {
            self.pos += 1;
        }
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse().map_err(|_| {
            self.pos = start;
            self.error("expected an integer")
        })
    }

    fn index_list(&mut self) -> Result<Vec<i64>, CalcError> {
        self.expect('[')?;
        let mut out = vec![self.integer()?];
        while self.peek() == Some(',') {
            self.pos += 1;
            out.push(self.integer()?);
        }
        self.expect(']')?;
        Ok(out)
    }

    fn atom(&mut self) -> Result<SuperPoly, CalcError> {
        let start = self.pos;
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(')')?;
                Ok(v)
            }
            Some('[') => {
                self.pos += 1;
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(']')?;
                Ok(self.calc.ctx.bracket(&a, &b))
            }
            Some(c) if c.is_ascii_digit() => {
                let begin = self.pos;
                while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit() || *c == '/') {
                    self.pos += 1;
                }
                let text: String = self.chars[begin..self.pos].iter().collect();
                let c: Scalar = text.parse().map_err(|_| {
                    self.pos = begin;
                    self.error("malformed number")
                })?;
                Ok(SuperPoly::constant(c))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let begin = self.pos;
                while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_alphanumeric()) {
                    self.pos += 1;
                }
                let name: String = self.chars[begin..self.pos].iter().collect();
                if name == "t" {
                    let args = self.index_list()?;
                    let &[i, j, r] = args.as_slice() else {
                        self.pos = begin;
                        return Err(self.error("t[...] takes three indices i, j, r"));
                    };
                    return self.calc.generator(i, j, r);
                }
                if ACCESSORS.contains(&name.as_str()) {
                    let args = self.index_list()?;
                    return self.calc.accessor(&name, &args);
                }
                self.pos = begin;
                Err(self.error(&format!("unknown name '{name}'")))
            }
            Some(_) => Err(self.error("expected a number, generator, bracket or '('")),
            None => {
                self.pos = start.max(self.chars.len());
                Err(self.error("unexpected end of input"))
            }
        }
    }
}
