//! Closed-form SU(3) group functions, the fixed coefficient table expanding
//! amplitude products over them, conversions to and from immanants, and the
//! basis change used when modes 1 and 2 carry the identical photon pair.
//!
//! Conventions: `d30` is the symmetric-irrep function (equal to the permanent
//! of the interferometer matrix), `d00` the antisymmetric one (equal to the
//! determinant), and `d11[j][i]` the four mixed-irrep functions indexed by
//! the SU(2)-subgroup labels `(J, I)` of the output and input states. The
//! mixed functions are real for every octuple.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::immanants::{determinant3, ImmanantSet};
use crate::perm::Perm3;
use crate::su3::{su3_matrix, OmegaSu3};
use crate::{conv, Real};

/// One row of the expansion table: the six coefficients that combine the
/// group functions into the amplitude product for output assignment (ijk).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CoefficientRow<R> {
    pub sym: R,
    pub mixed_11: R,
    pub mixed_00: R,
    pub mixed_10: R,
    pub mixed_01: R,
    pub antisym: R,
}

/// The expansion coefficients for one output assignment.
///
/// Every `sym` entry is 1/6 and every `antisym` entry is +-1/6; the mixed
/// columns each sum to zero over the six rows, which is what makes the sum
/// of all amplitudes collapse to the permanent.
pub fn coefficient_row<R: Real>(p: Perm3) -> CoefficientRow<R> {
    let sixth = conv::<R>(1.0 / 6.0);
    let third = conv::<R>(1.0 / 3.0);
    // 1/(2*sqrt(3))
    let s = R::one() / (conv::<R>(2.0) * conv::<R>(3.0).sqrt());
    let z = R::zero();
    match p {
        Perm3::P123 => CoefficientRow {
            sym: sixth,
            mixed_11: third,
            mixed_00: third,
            mixed_10: z,
            mixed_01: z,
            antisym: sixth,
        },
        Perm3::P132 => CoefficientRow {
            sym: sixth,
            mixed_11: third,
            mixed_00: -third,
            mixed_10: z,
            mixed_01: z,
            antisym: -sixth,
        },
        Perm3::P213 => CoefficientRow {
            sym: sixth,
            mixed_11: -sixth,
            mixed_00: sixth,
            mixed_10: s,
            mixed_01: s,
            antisym: -sixth,
        },
        Perm3::P231 => CoefficientRow {
            sym: sixth,
            mixed_11: -sixth,
            mixed_00: -sixth,
            mixed_10: -s,
            mixed_01: s,
            antisym: sixth,
        },
        Perm3::P312 => CoefficientRow {
            sym: sixth,
            mixed_11: -sixth,
            mixed_00: -sixth,
            mixed_10: s,
            mixed_01: -s,
            antisym: sixth,
        },
        Perm3::P321 => CoefficientRow {
            sym: sixth,
            mixed_11: -sixth,
            mixed_00: sixth,
            mixed_10: -s,
            mixed_01: -s,
            antisym: -sixth,
        },
    }
}

/// All six rows in lexicographic label order.
pub fn coefficient_table<R: Real>() -> [CoefficientRow<R>; 6] {
    let mut rows = [coefficient_row::<R>(Perm3::P123); 6];
    for p in Perm3::ALL {
        rows[p.index()] = coefficient_row(p);
    }
    rows
}

/// The group functions entering three-photon amplitudes: symmetric (`d30`),
/// antisymmetric (`d00`), and the four mixed functions (`d11[j][i]`).
#[derive(Clone, Copy, Debug)]
pub struct DFunctionSet<R> {
    pub d30: Complex<R>,
    pub d00: Complex<R>,
    pub d11: [[Complex<R>; 2]; 2],
}

impl<R: Real> DFunctionSet<R> {
    /// Mixed function for validated indices `(j, i)`, each 0 or 1.
    pub fn mixed(&self, j: usize, i: usize) -> Result<Complex<R>> {
        if j > 1 || i > 1 {
            return Err(Error::InvalidDFunctionIndex { j, i });
        }
        Ok(self.d11[j][i])
    }

    /// Largest |imaginary part| among the four mixed functions. Zero up to
    /// rounding for matrices built from an octuple.
    pub fn max_mixed_imag(&self) -> R {
        let mut worst = R::zero();
        for row in &self.d11 {
            for v in row {
                worst = worst.max(v.im.abs());
            }
        }
        worst
    }
}

/// Closed form of the symmetric-irrep function:
///
/// ```text
///   cos b1 cos b2 cos b3
///     - 1/4 sin b1 cos(b2/2) sin b3
///       (3 e^{i(a1-a3)} cos b2 - e^{i(a1-a3)} + 2 e^{-i(a1-a3)})
/// ```
///
/// Equals the permanent of `su3_matrix(omega)`.
pub fn d30_closed_form<R: Real>(omega: &OmegaSu3<R>) -> Complex<R> {
    let (b1, b2, b3) = (omega.beta1(), omega.beta2(), omega.beta3());
    let a13 = omega.alpha1() - omega.alpha3();
    let plus = Complex::new(R::zero(), a13).exp();
    let minus = Complex::new(R::zero(), -a13).exp();
    let half = conv::<R>(0.5);
    let leading = b1.cos() * b2.cos() * b3.cos();
    let prefactor = conv::<R>(0.25) * b1.sin() * (b2 * half).cos() * b3.sin();
    let bracket = plus * (conv::<R>(3.0) * b2.cos()) - plus + minus * conv::<R>(2.0);
    Complex::new(leading, R::zero()) - bracket * prefactor
}

fn d11_closed<R: Real>(omega: &OmegaSu3<R>, j: usize, i: usize) -> Complex<R> {
    let (b1, b2, b3) = (omega.beta1(), omega.beta2(), omega.beta3());
    let half = conv::<R>(0.5);
    let quarter = conv::<R>(0.25);
    let sqrt3 = conv::<R>(3.0).sqrt();
    let sin_half_sq = (b2 * half).sin() * (b2 * half).sin();
    let value = match (j, i) {
        (0, 0) => quarter * (conv::<R>(3.0) * b2.cos() + R::one()),
        (1, 0) => -(sqrt3 * half) * b1.cos() * sin_half_sq,
        (0, 1) => -(sqrt3 * half) * sin_half_sq * b3.cos(),
        (1, 1) => {
            let a13 = omega.alpha1() - omega.alpha3();
            quarter
                * (b1.cos() * b3.cos() * (b2.cos() + conv::<R>(3.0))
                    - conv::<R>(4.0) * a13.cos() * b1.sin() * (b2 * half).cos() * b3.sin())
        }
        _ => unreachable!("indices validated by caller"),
    };
    Complex::new(value, R::zero())
}

/// Closed form of the mixed-irrep function for subgroup labels `(J, I)`.
pub fn d11_closed_form<R: Real>(omega: &OmegaSu3<R>, j: usize, i: usize) -> Result<Complex<R>> {
    if j > 1 || i > 1 {
        return Err(Error::InvalidDFunctionIndex { j, i });
    }
    Ok(d11_closed(omega, j, i))
}

/// The full set by the closed-form route. `d30` and the four `d11` come from
/// the printed expressions; `d00` has no separate closed form and is
/// evaluated as the determinant (identically 1 on the special-unitary
/// family, but kept explicit so arbitrary matrices stay representable).
pub fn dfunction_set<R: Real>(omega: &OmegaSu3<R>) -> DFunctionSet<R> {
    let d00 = determinant3(&su3_matrix(omega));
    DFunctionSet {
        d30: d30_closed_form(omega),
        d00,
        d11: [
            [d11_closed(omega, 0, 0), d11_closed(omega, 0, 1)],
            [d11_closed(omega, 1, 0), d11_closed(omega, 1, 1)],
        ],
    }
}

/// The group functions reconstructed from an [`ImmanantSet`]: the mixed
/// four-vector is a fixed linear image of the four independent mixed
/// immanants,
///
/// ```text
///   [ d11(1,1) ]       [ 1       0       1       0      ] [ mixed(123) ]
///   [ d11(0,0) ] = 1/2 [ 1       0      -1       0      ] [ mixed(213) ]
///   [ d11(1,0) ]       [ 1/s3    2/s3    1/s3    2/s3   ] [ mixed(132) ]
///   [ d11(0,1) ]       [-1/s3    2/s3    1/s3   -2/s3   ] [ mixed(312) ]
/// ```
///
/// with `s3 = sqrt(3)`, while `d30` and `d00` are the permanent and the
/// determinant unchanged.
pub fn dfunctions_from_immanants<R: Real>(set: &ImmanantSet<R>) -> DFunctionSet<R> {
    let half = conv::<R>(0.5);
    let inv_s3 = R::one() / conv::<R>(3.0).sqrt();
    let two = conv::<R>(2.0);
    let m123 = set.mixed(Perm3::P123);
    let m213 = set.mixed(Perm3::P213);
    let m132 = set.mixed(Perm3::P132);
    let m312 = set.mixed(Perm3::P312);
    let d11_11 = (m123 + m132) * half;
    let d11_00 = (m123 - m132) * half;
    let d11_10 = (m123 + m213 * two + m132 + m312 * two) * (half * inv_s3);
    let d11_01 = (-m123 + m213 * two + m132 - m312 * two) * (half * inv_s3);
    DFunctionSet {
        d30: set.permanent,
        d00: set.determinant,
        d11: [[d11_00, d11_01], [d11_10, d11_11]],
    }
}

/// Amplitude product for output assignment `(ijk)` assembled from the group
/// functions with the coefficients of [`coefficient_row`].
pub fn amplitude_from_dfunctions<R: Real>(p: Perm3, d: &DFunctionSet<R>) -> Complex<R> {
    let c = coefficient_row::<R>(p);
    d.d30 * c.sym
        + d.d00 * c.antisym
        + d.d11[1][1] * c.mixed_11
        + d.d11[0][0] * c.mixed_00
        + d.d11[1][0] * c.mixed_10
        + d.d11[0][1] * c.mixed_01
}

/// Group functions in the basis where modes 1 and 2 carry the symmetrized
/// pair. Only the two combinations that enter rate formulas are exposed; the
/// symmetric function is unchanged by the basis change.
#[derive(Clone, Copy, Debug)]
pub struct I12DFunctions<R> {
    /// Mixed function with `(J, I) = (0, 1)` in the 12-pair basis.
    pub mixed_01: Complex<R>,
    /// Mixed function with `(J, I) = (1, 1)` in the 12-pair basis.
    pub mixed_11: Complex<R>,
    /// Symmetric function; identical to `d30`.
    pub sym: Complex<R>,
}

/// Basis change from the 23-pair labels to the 12-pair labels:
///
/// ```text
///   dt(0,1) = s3/4 d(0,0) - s3/4 d(1,1) - 3/4 d(1,0) + 1/4 d(0,1)
///   dt(1,1) =  3/4 d(0,0) + s3/4 d(0,1) + s3/4 d(1,0) + 1/4 d(1,1)
/// ```
pub fn dtilde_from_d<R: Real>(d: &DFunctionSet<R>) -> I12DFunctions<R> {
    let quarter = conv::<R>(0.25);
    let s3_4 = conv::<R>(3.0).sqrt() * quarter;
    let three_4 = conv::<R>(0.75);
    let mixed_01 =
        d.d11[0][0] * s3_4 - d.d11[1][1] * s3_4 - d.d11[1][0] * three_4 + d.d11[0][1] * quarter;
    let mixed_11 =
        d.d11[0][0] * three_4 + d.d11[0][1] * s3_4 + d.d11[1][0] * s3_4 + d.d11[1][1] * quarter;
    I12DFunctions {
        mixed_01,
        mixed_11,
        sym: d.d30,
    }
}

/// Full 4x4 basis change on the mixed four-vector in the order
/// ((1,1), (0,0), (1,0), (0,1)): the Kronecker square of the 2x2 label
/// rotation. Rows 4 and 1 reproduce the two printed combinations above.
#[cfg(test)]
pub(crate) fn i12_basis_matrix<R: Real>() -> [[R; 4]; 4] {
    let half = conv::<R>(0.5);
    let s3_2 = conv::<R>(3.0).sqrt() * half;
    // label rotation o[new][old] taking 23-pair labels to 12-pair labels
    let o = [[-half, s3_2], [-s3_2, -half]];
    let order = [(1usize, 1usize), (0, 0), (1, 0), (0, 1)];
    let mut out = [[R::zero(); 4]; 4];
    for (r, &(jn, inew)) in order.iter().enumerate() {
        for (c, &(jo, iold)) in order.iter().enumerate() {
            out[r][c] = o[jn][jo] * o[inew][iold];
        }
    }
    out
}
