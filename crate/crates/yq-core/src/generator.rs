//! Canonical generators `t_{ij}^{(r)}` of the super-Yangian.
//!
//! The symmetry `t_{i,j}(-u) = t_{-i,-j}(u)` identifies `t_{i,-j}^{(r)}` with
//! `(-1)^r t_{-i,j}^{(r)}`, so every generator can be written with a positive
//! column index.  A [`GenSymbol`] always stores that canonical form.

use std::cmp::Ordering;
use std::fmt;

use crate::error::CoreError;
use crate::parity::Parity;
use crate::scalar::Scalar;

const LEVEL_BITS: u32 = 12;
const COL_BITS: u32 = 8;
const LEVEL_MASK: u32 = (1 << LEVEL_BITS) - 1;
const COL_MASK: u32 = (1 << COL_BITS) - 1;

/// Largest supported rank `n`.
pub const MAX_N: i32 = 100;
/// Largest supported level `r`.
pub const MAX_LEVEL: u32 = LEVEL_MASK;

/// Position of a signed row index in the order `1, -1, 2, -2, ...`.
pub const fn index_position(i: i32) -> u32 {
    (2 * (i.unsigned_abs() - 1)) + (i < 0) as u32
}

/// Inverse of [`index_position`].
pub const fn index_at_position(p: u32) -> i32 {
    let a = (p / 2 + 1) as i32;
    if p % 2 == 1 {
        -a
    } else {
        a
    }
}

/// A canonical generator `t_{row,col}^{(level)}` with `col > 0`.
///
/// The packed key orders generators by (row position in `1,-1,2,-2,...`,
/// column, level), which is the monomial order used for normal forms.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct GenSymbol(u32);

impl GenSymbol {
    /// Builds a canonical generator; `col` must be positive and `level ≥ 1`.
    pub fn new(row: i32, col: i32, level: u32) -> Result<GenSymbol, CoreError> {
        if row == 0 || row.abs() > MAX_N || col <= 0 || col > MAX_N || level == 0 || level > MAX_LEVEL {
            return Err(CoreError::OutOfRange(format!("t[{row},{col},{level}]")));
        }
        Ok(Self::new_unchecked(row, col, level))
    }

    pub(crate) const fn new_unchecked(row: i32, col: i32, level: u32) -> GenSymbol {
        GenSymbol((index_position(row) << (COL_BITS + LEVEL_BITS)) | ((col as u32) << LEVEL_BITS) | level)
    }

    /// Signed row index.
    pub const fn row(self) -> i32 {
        index_at_position(self.0 >> (COL_BITS + LEVEL_BITS))
    }

    /// Positive column index.
    pub const fn col(self) -> i32 {
        ((self.0 >> LEVEL_BITS) & COL_MASK) as i32
    }

    /// Level `r` (the first filtration degree).
    pub const fn level(self) -> u32 {
        self.0 & LEVEL_MASK
    }

    /// Parity `|row| + |col|`, i.e. odd iff the row is negative.
    pub const fn parity(self) -> Parity {
        Parity::from_odd(self.row() < 0)
    }

    /// Same generator at another level.
    pub fn with_level(self, level: u32) -> GenSymbol {
        GenSymbol((self.0 & !LEVEL_MASK) | level)
    }

    /// Packed order key.
    pub const fn key(self) -> u32 {
        self.0
    }
}

impl Ord for GenSymbol {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl PartialOrd for GenSymbol {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GenSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t[{},{},{}]", self.row(), self.col(), self.level())
    }
}

impl fmt::Debug for GenSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Checks that `i` is a valid index of `I_{n|n}`.
pub fn check_index(i: i32, n: usize) -> Result<(), CoreError> {
    if i == 0 || i.unsigned_abs() as usize > n {
        Err(CoreError::OutOfRange(format!("index {i} not in I_{{{n}|{n}}}")))
    } else {
        Ok(())
    }
}

/// Rewrites `t_{ij}^{(r)}` in canonical form: returns the generator and the
/// scalar `c` with `t_{ij}^{(r)} = c · generator`.
pub fn canonicalize(i: i32, j: i32, r: u32, n: usize) -> Result<(GenSymbol, Scalar), CoreError> {
    check_index(i, n)?;
    check_index(j, n)?;
    if r == 0 {
        return Err(CoreError::OutOfRange("level 0 is not a generator".into()));
    }
    if j > 0 {
        Ok((GenSymbol::new(i, j, r)?, Scalar::ONE))
    } else {
        Ok((GenSymbol::new(-i, -j, r)?, Scalar::sign(r % 2 == 1)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_round_trip() {
        for i in [1, -1, 2, -2, 7, -7] {
            assert_eq!(index_at_position(index_position(i)), i);
        }
        assert_eq!(index_position(1), 0);
        assert_eq!(index_position(-1), 1);
        assert_eq!(index_position(2), 2);
    }

    #[test]
    fn accessors() {
        let g = GenSymbol::new(-2, 3, 5).unwrap();
        assert_eq!((g.row(), g.col(), g.level()), (-2, 3, 5));
        assert!(g.parity().is_odd());
        assert_eq!(g.to_string(), "t[-2,3,5]");
    }

    #[test]
    fn order_is_row_position_then_col_then_level() {
        let a = GenSymbol::new(1, 2, 9).unwrap();
        let b = GenSymbol::new(-1, 1, 1).unwrap();
        let c = GenSymbol::new(-1, 1, 2).unwrap();
        assert!(a < b && b < c);
    }

    #[test]
    fn canonical_signs() {
        let (g, c) = canonicalize(1, -2, 3, 2).unwrap();
        assert_eq!((g.row(), g.col(), c), (-1, 2, Scalar::int(-1)));
        let (g, c) = canonicalize(-1, -1, 2, 1).unwrap();
        assert_eq!((g.row(), g.col(), c), (1, 1, Scalar::ONE));
        assert!(canonicalize(3, 1, 1, 2).is_err());
    }
}
