//! The relation language: a small expression grammar over named series.
//!
//! ```text
//! rel    := expr ('=' expr)*
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | atom
//! atom   := INT | 'x' | 'y' | '(' expr ')' | '[' expr ',' expr ']'
//!         | ('dm' | 'dp' | 'ks') '(' expr ')'
//!         | OP                      -- P, Q, K, optionally with slots: P12, Q13, K
//!         | NAME ['{' idx (',' idx)* '}'] ['^' INT] ['[' idx ']'] ['(' arg ')']
//! idx    := iterm (('+' | '-') iterm)*     iterm := INT | VAR
//! arg    := ['-'] ('u' | 'v')
//! ```
//!
//! `x = u^{-1}` and `y = v^{-1}`; `dm(e)` and `dp(e)` divide by `u − v` and
//! `u + v`; `ks(e)` evaluates `e` twice with `K := P` and `K := Q` and
//! returns `dm(e|_P) + dp(e|_Q)`, i.e. it expands `K(u,v) = P/(u−v) + Q/(u+v)`.
//! A series atom with `^k` is a matrix placed in tensor slot `k`; without it
//! the atom is a scalar series.  `[t]` selects the constant coefficient of
//! `u^{-t}` (used for a third spectral parameter that is read off termwise).

use std::fmt;

use thiserror::Error;

/// A parse error with the byte offset where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at {pos}: {msg}")]
pub struct ParseError {
    /// Byte offset in the source text.
    pub pos: usize,
    /// Description.
    pub msg: String,
}

/// The spectral argument of a series atom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Arg {
    /// `u`
    U,
    /// `v`
    V,
    /// `−u`
    NegU,
    /// `−v`
    NegV,
}

impl Arg {
    /// True for the first spectral parameter.
    pub fn in_u(self) -> bool {
        matches!(self, Arg::U | Arg::NegU)
    }

    /// True for `−u` and `−v`.
    pub fn negated(self) -> bool {
        matches!(self, Arg::NegU | Arg::NegV)
    }
}

/// An index expression: a signed sum of integers and variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexExpr(pub Vec<(i64, IndexTerm)>);

/// One summand of an [`IndexExpr`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum IndexTerm {
    /// A literal.
    Int(i64),
    /// A bound variable such as `a`.
    Var(char),
}

impl IndexExpr {
    /// Evaluates with the variable lookup `var`.
    pub fn eval(&self, var: &impl Fn(char) -> Option<i64>) -> Result<i64, String> {
        let mut acc = 0;
        for (sign, t) in &self.0 {
            let v = match t {
                IndexTerm::Int(k) => *k,
                IndexTerm::Var(c) => var(*c).ok_or_else(|| format!("unbound index variable '{c}'"))?,
            };
            acc += sign * v;
        }
        Ok(acc)
    }
}

/// A series atom such as `hb{a+1}(-u)` or `E{1,3}^2(v)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeriesAtom {
    /// Series name.
    pub name: String,
    /// Index expressions inside `{…}`.
    pub index: Vec<IndexExpr>,
    /// Tensor slot (1-based) for matrix atoms; `None` for scalar atoms.
    pub slot: Option<usize>,
    /// Selected constant coefficient `[t]`, if any.
    pub coeff: Option<IndexExpr>,
    /// Spectral argument; may be omitted only when `coeff` is present.
    pub arg: Option<Arg>,
}

/// Fixed operators on the tensor slots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OpKind {
    /// The super flip.
    P,
    /// The twisted flip.
    Q,
    /// `K(u,v)`, only meaningful inside `ks(…)`.
    K,
}

/// Expression tree of the relation language.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    /// Integer constant.
    Int(i64),
    /// `u^{-1}`.
    X,
    /// `v^{-1}`.
    Y,
    /// A series atom.
    Series(SeriesAtom),
    /// `P^{ab}`, `Q^{ab}` or `K^{ab}` with 1-based slots.
    Op(OpKind, usize, usize),
    /// Sum.
    Add(Box<Expr>, Box<Expr>),
    /// Difference.
    Sub(Box<Expr>, Box<Expr>),
    /// Negation.
    Neg(Box<Expr>),
    /// Product.
    Mul(Box<Expr>, Box<Expr>),
    /// Super commutator.
    Bracket(Box<Expr>, Box<Expr>),
    /// Exact division by `u − v`.
    DivMinus(Box<Expr>),
    /// Exact division by `u + v`.
    DivPlus(Box<Expr>),
    /// `K`-split: `dm(e|_{K=P}) + dp(e|_{K=Q})`.
    KSplit(Box<Expr>),
}

/// A chain `e₀ = e₁ = … = e_k`; every adjacent difference must vanish.
#[derive(Debug, Clone, PartialEq)]
pub struct Relation {
    /// The sides, left to right.
    pub sides: Vec<Expr>,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(i64),
    Ident(String),
    Sym(char),
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let mut v: i64 = 0;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                v = v * 10 + chars[i].1.to_digit(10).unwrap() as i64;
                i += 1;
            }
            out.push((pos, Tok::Int(v)));
        } else if c.is_ascii_alphabetic() {
            let mut s = String::new();
            while i < chars.len() && chars[i].1.is_ascii_alphanumeric() {
                s.push(chars[i].1);
                i += 1;
            }
            out.push((pos, Tok::Ident(s)));
        } else if "+-*()[]{},^=".contains(c) {
            out.push((pos, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(ParseError { pos, msg: format!("unexpected character '{c}'") });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|t| t.0).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { pos: self.pos(), msg: msg.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn relation(&mut self) -> Result<Relation, ParseError> {
        let mut sides = vec![self.expr()?];
        while self.eat('=') {
            sides.push(self.expr()?);
        }
        if self.at != self.toks.len() {
            return self.err("trailing input");
        }
        Ok(Relation { sides })
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.term()?;
        loop {
            if self.eat('+') {
                e = Expr::Add(Box::new(e), Box::new(self.term()?));
            } else if self.eat('-') {
                e = Expr::Sub(Box::new(e), Box::new(self.term()?));
            } else {
                return Ok(e);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.unary()?;
        while self.eat('*') {
            e = Expr::Mul(Box::new(e), Box::new(self.unary()?));
        }
        Ok(e)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat('-') {
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else {
            self.atom()
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Int(v)) => {
                self.at += 1;
                Ok(Expr::Int(v))
            }
            Some(Tok::Sym('(')) => {
                self.at += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Sym('[')) => {
                self.at += 1;
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(']')?;
                Ok(Expr::Bracket(Box::new(a), Box::new(b)))
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                self.ident(name)
            }
            _ => self.err("expected an operand"),
        }
    }

    fn ident(&mut self, name: String) -> Result<Expr, ParseError> {
        match name.as_str() {
            "x" => return Ok(Expr::X),
            "y" => return Ok(Expr::Y),
            "dm" | "dp" | "ks" => {
                self.expect('(')?;
                let e = Box::new(self.expr()?);
                self.expect(')')?;
                return Ok(match name.as_str() {
                    "dm" => Expr::DivMinus(e),
                    "dp" => Expr::DivPlus(e),
                    _ => Expr::KSplit(e),
                });
            }
            _ => {}
        }
        if let Some(op) = parse_op(&name) {
            return op.ok_or_else(|| ParseError { pos: self.pos(), msg: format!("bad operator '{name}'") });
        }
        self.series(name)
    }

    fn series(&mut self, name: String) -> Result<Expr, ParseError> {
        if !name.chars().all(|c| c.is_ascii_alphabetic()) {
            return self.err(format!("bad series name '{name}'"));
        }
        let mut index = Vec::new();
        if self.eat('{') {
            index.push(self.index()?);
            while self.eat(',') {
                index.push(self.index()?);
            }
            self.expect('}')?;
        }
        let slot = if self.eat('^') {
            match self.peek() {
                Some(Tok::Int(k)) if *k >= 1 => {
                    let k = *k as usize;
                    self.at += 1;
                    Some(k)
                }
                _ => return self.err("expected slot number after '^'"),
            }
        } else {
            None
        };
        let coeff = if self.eat('[') {
            let t = self.index()?;
            self.expect(']')?;
            Some(t)
        } else {
            None
        };
        let arg = if self.eat('(') {
            let neg = self.eat('-');
            let a = match self.peek() {
                Some(Tok::Ident(s)) if s == "u" => Arg::U,
                Some(Tok::Ident(s)) if s == "v" => Arg::V,
                _ => return self.err("expected spectral argument u or v"),
            };
            self.at += 1;
            self.expect(')')?;
            Some(match (a, neg) {
                (Arg::U, true) => Arg::NegU,
                (Arg::V, true) => Arg::NegV,
                (a, _) => a,
            })
        } else {
            None
        };
        if arg.is_none() && coeff.is_none() {
            return self.err(format!("series '{name}' needs an argument or a coefficient"));
        }
        Ok(Expr::Series(SeriesAtom { name, index, slot, coeff, arg }))
    }

    fn index(&mut self) -> Result<IndexExpr, ParseError> {
        let mut terms = Vec::new();
        let mut sign = if self.eat('-') { -1 } else { 1 };
        loop {
            let t = match self.peek().cloned() {
                Some(Tok::Int(v)) => IndexTerm::Int(v),
                Some(Tok::Ident(s)) if s.len() == 1 => IndexTerm::Var(s.chars().next().unwrap()),
                _ => return self.err("expected an index"),
            };
            self.at += 1;
            terms.push((sign, t));
            if self.eat('+') {
                sign = 1;
            } else if self.eat('-') {
                sign = -1;
            } else {
                return Ok(IndexExpr(terms));
            }
        }
    }
}

/// `Some(Some(op))` for a well-formed operator name, `Some(None)` for a
/// malformed one, `None` if the name is not an operator.
fn parse_op(name: &str) -> Option<Option<Expr>> {
    let mut cs = name.chars();
    let kind = match cs.next()? {
        'P' => OpKind::P,
        'Q' => OpKind::Q,
        'K' => OpKind::K,
        _ => return None,
    };
    let rest: Vec<char> = cs.collect();
    if rest.is_empty() {
        return Some(Some(Expr::Op(kind, 1, 2)));
    }
    if !rest.iter().all(|c| c.is_ascii_digit()) {
        return None;
    }
    if rest.len() != 2 || rest[0] == rest[1] || rest[0] == '0' || rest[1] == '0' {
        return Some(None);
    }
    let a = rest[0].to_digit(10).unwrap() as usize;
    let b = rest[1].to_digit(10).unwrap() as usize;
    Some(Some(Expr::Op(kind, a, b)))
}

/// Parses a relation chain.
pub fn parse_relation(src: &str) -> Result<Relation, ParseError> {
    let toks = lex(src)?;
    Parser { toks, at: 0, end: src.len() }.relation()
}

/// Parses a single expression.
pub fn parse_expr(src: &str) -> Result<Expr, ParseError> {
    let rel = parse_relation(src)?;
    match <[Expr; 1]>::try_from(rel.sides) {
        Ok([e]) => Ok(e),
        Err(_) => Err(ParseError { pos: 0, msg: "expected a single expression".into() }),
    }
}

impl Expr {
    /// Every series atom occurring in the expression.
    pub fn atoms(&self) -> Vec<&SeriesAtom> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut Vec<&'a SeriesAtom>) {
        match self {
            Expr::Series(a) => out.push(a),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Bracket(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
            Expr::Neg(a) | Expr::DivMinus(a) | Expr::DivPlus(a) | Expr::KSplit(a) => a.collect_atoms(out),
            Expr::Int(_) | Expr::X | Expr::Y | Expr::Op(..) => {}
        }
    }

    /// Largest tensor slot referenced by an atom or operator.
    pub fn max_slot(&self) -> usize {
        match self {
            Expr::Series(a) => a.slot.unwrap_or(0),
            Expr::Op(_, a, b) => *a.max(b),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Bracket(a, b) => a.max_slot().max(b.max_slot()),
            Expr::Neg(a) | Expr::DivMinus(a) | Expr::DivPlus(a) | Expr::KSplit(a) => a.max_slot(),
            Expr::Int(_) | Expr::X | Expr::Y => 0,
        }
    }
}

impl fmt::Display for Arg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Arg::U => "u",
            Arg::V => "v",
            Arg::NegU => "-u",
            Arg::NegV => "-v",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_chain_with_atoms() {
        let r = parse_relation("[h{a}(u),hb{a+1}(-v)] = dm(e{a}(v) - e{a}(u)) = 0").unwrap();
        assert_eq!(r.sides.len(), 3);
        let atoms = r.sides[0].atoms();
        assert_eq!(atoms[1].name, "hb");
        assert_eq!(atoms[1].arg, Some(Arg::NegV));
        assert_eq!(atoms[1].index[0].eval(&|c| (c == 'a').then_some(2)).unwrap(), 3);
    }

    #[test]
    fn parses_operators_and_slots() {
        let e = parse_expr("P12*[E{a}^1(v),[E{a}^2(v),E{b}^3[t]]] + Q13*K").unwrap();
        assert_eq!(e.max_slot(), 3);
        assert!(parse_expr("P11").is_err());
        assert!(parse_expr("h{1}").is_err());
        assert!(parse_expr("[h{1}(u) h{1}(v)]").is_err());
    }
}
