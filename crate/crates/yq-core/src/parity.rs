//! The two-element parity group and Koszul signs.

use std::ops::Add;

use crate::scalar::Scalar;

/// An element of `Z/2`: even or odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Parity {
    /// Degree 0.
    #[default]
    Even,
    /// Degree 1.
    Odd,
}

impl Parity {
    /// Builds a parity from a boolean "is odd" flag.
    pub const fn from_odd(odd: bool) -> Parity {
        if odd {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    /// True for [`Parity::Odd`].
    pub const fn is_odd(self) -> bool {
        matches!(self, Parity::Odd)
    }

    /// Parity of a signed index of `I_{n|n}`: odd iff the index is negative.
    pub const fn of_index(i: i32) -> Parity {
        Parity::from_odd(i < 0)
    }

    /// The product `|a||b|` in `Z/2`.
    pub const fn times(self, other: Parity) -> Parity {
        Parity::from_odd(self.is_odd() && other.is_odd())
    }

    /// `(-1)^self` as a scalar.
    pub fn sign(self) -> Scalar {
        Scalar::sign(self.is_odd())
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_odd(self.is_odd() ^ rhs.is_odd())
    }
}

/// Sum of a sequence of parities.
pub fn total_parity(ps: &[Parity]) -> Parity {
    ps.iter().fold(Parity::Even, |acc, &p| acc + p)
}

/// Sign acquired when the block `right` is moved to the left past the block
/// `left`, i.e. `(-1)^{Σ |a||b|}` over `a ∈ left`, `b ∈ right`.
///
/// This is the sign in `(a_1 ⊗ b_1)(a_2 ⊗ b_2) = (-1)^{|b_1||a_2|} a_1a_2 ⊗ b_1b_2`
/// generalised to sequences by iterated transpositions.
pub fn koszul_sign(left: &[Parity], right: &[Parity]) -> Scalar {
    let odd_left = left.iter().filter(|p| p.is_odd()).count();
    let odd_right = right.iter().filter(|p| p.is_odd()).count();
    Scalar::sign(odd_left * odd_right % 2 == 1)
}

/// Sign of reordering homogeneous factors: `factors[perm[0]] factors[perm[1]] ...`
/// compared to the original order, computed by counting inversions of odd pairs.
pub fn permutation_sign(parities: &[Parity], perm: &[usize]) -> Scalar {
    let mut odd = false;
    for a in 0..perm.len() {
        for b in a + 1..perm.len() {
            if perm[a] > perm[b] && parities[perm[a]].is_odd() && parities[perm[b]].is_odd() {
                odd = !odd;
            }
        }
    }
    Scalar::sign(odd)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Parity::*;

    #[test]
    fn basic_signs() {
        assert_eq!(koszul_sign(&[Even], &[Even]), Scalar::ONE);
        assert_eq!(koszul_sign(&[Odd], &[Odd]), Scalar::int(-1));
        assert_eq!(koszul_sign(&[Odd, Odd], &[Odd]), Scalar::ONE);
    }

    #[test]
    fn parity_arithmetic() {
        assert_eq!(Odd + Odd, Even);
        assert_eq!(Odd.times(Even), Even);
        assert_eq!(Parity::of_index(-2), Odd);
    }
}
