//! Words in the canonical generators.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::generator::GenSymbol;
use crate::parity::Parity;

/// An ordered word `g_1 g_2 ... g_k` of generators; the empty word is the unit.
///
/// Monomials compare by (filtration degree, length, lexicographic generator
/// keys), which is the order used when printing polynomials.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[GenSymbol; 6]>);

impl Monomial {
    /// The empty word.
    pub fn one() -> Monomial {
        Monomial(SmallVec::new())
    }

    /// A single generator.
    pub fn gen(g: GenSymbol) -> Monomial {
        let mut v = SmallVec::new();
        v.push(g);
        Monomial(v)
    }

    /// The word with the given letters.
    pub fn from_slice(gs: &[GenSymbol]) -> Monomial {
        Monomial(SmallVec::from_slice(gs))
    }

    /// Letters of the word.
    pub fn gens(&self) -> &[GenSymbol] {
        &self.0
    }

    /// Number of letters.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True for the unit.
    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// True for the unit (alias of [`Monomial::is_one`]).
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of levels.
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|g| g.level()).sum()
    }

    /// Sum of `level − 1`, the second filtration degree.
    pub fn loop_degree(&self) -> u32 {
        self.0.iter().map(|g| g.level() - 1).sum()
    }

    /// Sum of generator parities.
    pub fn parity(&self) -> Parity {
        Parity::from_odd(self.0.iter().filter(|g| g.parity().is_odd()).count() % 2 == 1)
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Monomial) -> Monomial {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Monomial(v)
    }

    /// Appends a letter.
    pub fn push(&mut self, g: GenSymbol) {
        self.0.push(g);
    }

    /// Last letter, if any.
    pub fn last(&self) -> Option<GenSymbol> {
        self.0.last().copied()
    }

    /// Splits off the last letter.
    pub fn split_last(&self) -> Option<(Monomial, GenSymbol)> {
        let (last, rest) = self.0.split_last()?;
        Some((Monomial(SmallVec::from_slice(rest)), *last))
    }

    /// The word read backwards.
    pub fn reversed(&self) -> Monomial {
        Monomial(self.0.iter().rev().copied().collect())
    }

    /// True if the letters are non-decreasing and no odd letter repeats,
    /// i.e. the word is a PBW basis monomial.
    pub fn is_ordered(&self) -> bool {
        self.0
            .windows(2)
            .all(|w| w[0] < w[1] || (w[0] == w[1] && !w[0].parity().is_odd()))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.len().cmp(&other.len()))
            .then_with(|| self.0.iter().map(|g| g.key()).cmp(other.0.iter().map(|g| g.key())))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, g) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromIterator<GenSymbol> for Monomial {
    fn from_iter<I: IntoIterator<Item = GenSymbol>>(iter: I) -> Self {
        Monomial(iter.into_iter().collect())
    }
}
