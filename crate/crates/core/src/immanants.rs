//! Matrix immanants via symmetric-group characters.
//!
//! An immanant weighs the n! products of matrix entries by the character of
//! an irreducible representation of the symmetric group:
//!
//! ```text
//!   imm_X(chi) = sum over sigma of chi(sigma) * x_{1,sigma(1)} * ... * x_{n,sigma(n)}
//! ```
//!
//! The all-ones character gives the permanent, the sign character the
//! determinant, and for 3x3 matrices the two-dimensional mixed-symmetry
//! representation gives a third function, here called *the* immanant. At this
//! size the explicit six-term sum is exact and cheap, and it doubles as the
//! oracle against which the closed-form group functions are tested.

use num_complex::Complex;

use crate::conv;
use crate::linalg::{Matrix2, Matrix3};
use crate::perm::{Perm3, S3Class};
use crate::Real;

/// Irreducible representation of the permutation group on three labels,
/// named by its partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum S3Irrep {
    /// Partition `[3]`: character 1 on every element; yields the permanent.
    Symmetric,
    /// Partition `[2,1]`: characters (2, 0, -1) on (identity, transpositions,
    /// 3-cycles); yields the mixed immanant.
    Mixed,
    /// Partition `[1,1,1]`: the sign character; yields the determinant.
    Antisymmetric,
}

impl S3Irrep {
    /// Character evaluated on the class of `sigma`.
    pub fn character(self, sigma: Perm3) -> i32 {
        let [on_id, on_swap, on_cycle] = self.class_characters();
        match sigma.class() {
            S3Class::Identity => on_id,
            S3Class::Transposition => on_swap,
            S3Class::ThreeCycle => on_cycle,
        }
    }

    /// Character values on the classes (identity, transpositions, 3-cycles).
    pub fn class_characters(self) -> [i32; 3] {
        match self {
            S3Irrep::Symmetric => [1, 1, 1],
            S3Irrep::Mixed => [2, 0, -1],
            S3Irrep::Antisymmetric => [1, -1, 1],
        }
    }
}

/// Irrep of the two-element permutation group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum S2Irrep {
    Symmetric,
    Antisymmetric,
}

/// Immanant of a 3x3 matrix by the explicit character sum.
pub fn immanant3<R: Real>(x: &Matrix3<R>, irrep: S3Irrep) -> Complex<R> {
    let e = &x.entries;
    let mut total = Complex::new(R::zero(), R::zero());
    for sigma in Perm3::ALL {
        let [s1, s2, s3] = sigma.triple();
        let term = e[0][s1 - 1] * e[1][s2 - 1] * e[2][s3 - 1];
        total += term * conv::<R>(irrep.character(sigma) as f64);
    }
    total
}

/// Immanant of a 2x2 matrix: the two-term analog of [`immanant3`].
pub fn immanant2<R: Real>(x: &Matrix2<R>, irrep: S2Irrep) -> Complex<R> {
    let e = &x.entries;
    let diag = e[0][0] * e[1][1];
    let off = e[0][1] * e[1][0];
    match irrep {
        S2Irrep::Symmetric => diag + off,
        S2Irrep::Antisymmetric => diag - off,
    }
}

pub fn permanent3<R: Real>(x: &Matrix3<R>) -> Complex<R> {
    immanant3(x, S3Irrep::Symmetric)
}

pub fn determinant3<R: Real>(x: &Matrix3<R>) -> Complex<R> {
    immanant3(x, S3Irrep::Antisymmetric)
}

pub fn mixed_immanant3<R: Real>(x: &Matrix3<R>) -> Complex<R> {
    immanant3(x, S3Irrep::Mixed)
}

pub fn permanent2<R: Real>(x: &Matrix2<R>) -> Complex<R> {
    immanant2(x, S2Irrep::Symmetric)
}

pub fn determinant2<R: Real>(x: &Matrix2<R>) -> Complex<R> {
    immanant2(x, S2Irrep::Antisymmetric)
}

/// Matrix whose rows are rows (i, j, k) of `r`, in that order.
///
/// With `target = (2,1,3)` the first two rows swap. The permanent is
/// invariant under any `target`; the determinant picks up the permutation
/// sign; the mixed immanant transforms nontrivially, which is what makes the
/// six row-permuted immanants informative.
pub fn row_permuted<R: Real>(r: &Matrix3<R>, target: Perm3) -> Matrix3<R> {
    let [i, j, k] = target.triple();
    Matrix3::new([r.row(i - 1), r.row(j - 1), r.row(k - 1)])
}

/// Permanent, determinant, and the six row-permuted mixed immanants of one
/// matrix.
#[derive(Clone, Copy, Debug)]
pub struct ImmanantSet<R> {
    pub permanent: Complex<R>,
    pub determinant: Complex<R>,
    mixed: [Complex<R>; 6],
}

impl<R: Real> ImmanantSet<R> {
    /// Assembles a set from caller-supplied values, `mixed` in lexicographic
    /// label order. Sets built by [`immanant_set`] satisfy the linear
    /// dependence relations; nothing is checked here.
    pub fn from_parts(
        permanent: Complex<R>,
        determinant: Complex<R>,
        mixed: [Complex<R>; 6],
    ) -> Self {
        Self {
            permanent,
            determinant,
            mixed,
        }
    }

    /// Mixed immanant of the row-permuted matrix labelled by `target`.
    pub fn mixed(&self, target: Perm3) -> Complex<R> {
        self.mixed[target.index()]
    }

    /// The six mixed immanants in lexicographic label order.
    pub fn mixed_all(&self) -> &[Complex<R>; 6] {
        &self.mixed
    }
}

/// Evaluates the full [`ImmanantSet`] of a 3x3 matrix.
///
/// Only four of the six mixed immanants are linearly independent:
/// `mixed(231) = -mixed(123) - mixed(312)` and
/// `mixed(321) = -mixed(213) - mixed(132)`.
pub fn immanant_set<R: Real>(r: &Matrix3<R>) -> ImmanantSet<R> {
    let mut mixed = [Complex::new(R::zero(), R::zero()); 6];
    for target in Perm3::ALL {
        mixed[target.index()] = mixed_immanant3(&row_permuted(r, target));
    }
    ImmanantSet {
        permanent: permanent3(r),
        determinant: determinant3(r),
        mixed,
    }
}
