//! The symmetric group on three input labels.
//!
//! Permutations are written in one-line form: `P231` sends slot 1 to label 2,
//! slot 2 to label 3, and slot 3 to label 1. This is the same triple that
//! labels amplitudes and row-permuted matrices elsewhere in the crate, so
//! `Perm3` doubles as the canonical index into six-component quantities.

use std::fmt;

use crate::error::{Error, Result};

/// A permutation of (1, 2, 3), named by its one-line form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Perm3 {
    P123,
    P132,
    P213,
    P231,
    P312,
    P321,
}

/// Conjugacy class of an `S3` element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum S3Class {
    Identity,
    Transposition,
    ThreeCycle,
}

impl Perm3 {
    /// All six permutations in lexicographic order of their one-line form.
    pub const ALL: [Perm3; 6] = [
        Perm3::P123,
        Perm3::P132,
        Perm3::P213,
        Perm3::P231,
        Perm3::P312,
        Perm3::P321,
    ];

    /// The one-line form as a 1-based triple (i, j, k).
    pub const fn triple(self) -> [usize; 3] {
        match self {
            Perm3::P123 => [1, 2, 3],
            Perm3::P132 => [1, 3, 2],
            Perm3::P213 => [2, 1, 3],
            Perm3::P231 => [2, 3, 1],
            Perm3::P312 => [3, 1, 2],
            Perm3::P321 => [3, 2, 1],
        }
    }

    /// Builds a permutation from a 1-based triple.
    pub fn from_triple(triple: [usize; 3]) -> Result<Self> {
        for p in Perm3::ALL {
            if p.triple() == triple {
                return Ok(p);
            }
        }
        Err(Error::NotAPermutation(triple))
    }

    /// Position in [`Perm3::ALL`].
    pub const fn index(self) -> usize {
        match self {
            Perm3::P123 => 0,
            Perm3::P132 => 1,
            Perm3::P213 => 2,
            Perm3::P231 => 3,
            Perm3::P312 => 4,
            Perm3::P321 => 5,
        }
    }

    /// Image of the 1-based slot `m` under the permutation.
    pub fn apply(self, m: usize) -> usize {
        debug_assert!((1..=3).contains(&m));
        self.triple()[m - 1]
    }

    /// Sign of the permutation: +1 for even, -1 for odd.
    pub const fn parity(self) -> i32 {
        match self.class() {
            S3Class::Transposition => -1,
            _ => 1,
        }
    }

    /// Conjugacy class (identity, transposition, or 3-cycle).
    pub const fn class(self) -> S3Class {
        match self {
            Perm3::P123 => S3Class::Identity,
            Perm3::P132 | Perm3::P213 | Perm3::P321 => S3Class::Transposition,
            Perm3::P231 | Perm3::P312 => S3Class::ThreeCycle,
        }
    }

    /// The inverse permutation.
    pub fn inverse(self) -> Perm3 {
        let t = self.triple();
        let mut inv = [0usize; 3];
        for (slot, &label) in t.iter().enumerate() {
            inv[label - 1] = slot + 1;
        }
        Perm3::from_triple(inv).expect("inverse of a permutation is a permutation")
    }
}

impl fmt::Display for Perm3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [i, j, k] = self.triple();
        write!(f, "{i}{j}{k}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triples_round_trip() {
        for p in Perm3::ALL {
            assert_eq!(Perm3::from_triple(p.triple()).unwrap(), p);
        }
    }

    #[test]
    fn rejects_non_permutations() {
        assert_eq!(
            Perm3::from_triple([1, 1, 3]),
            Err(Error::NotAPermutation([1, 1, 3]))
        );
        assert!(Perm3::from_triple([0, 1, 2]).is_err());
        assert!(Perm3::from_triple([4, 2, 3]).is_err());
    }

    #[test]
    fn parity_matches_class() {
        assert_eq!(Perm3::P123.parity(), 1);
        assert_eq!(Perm3::P132.parity(), -1);
        assert_eq!(Perm3::P213.parity(), -1);
        assert_eq!(Perm3::P321.parity(), -1);
        assert_eq!(Perm3::P231.parity(), 1);
        assert_eq!(Perm3::P312.parity(), 1);
    }

    #[test]
    fn inverse_composes_to_identity() {
        for p in Perm3::ALL {
            let inv = p.inverse();
            for m in 1..=3 {
                assert_eq!(inv.apply(p.apply(m)), m);
            }
        }
        assert_eq!(Perm3::P231.inverse(), Perm3::P312);
        assert_eq!(Perm3::P312.inverse(), Perm3::P231);
    }
}
