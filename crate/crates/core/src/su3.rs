//! Three-channel interferometer matrices from the SU(3) Euler factorization,
//! and the six three-photon amplitude products.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::linalg::Matrix3;
use crate::perm::Perm3;
use crate::{conv, ensure_finite, Real};

/// The octuple of Euler-like angles `(alpha1, beta1, alpha2, beta2, alpha3,
/// beta3, gamma1, gamma2)` parametrizing a 3x3 special-unitary matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OmegaSu3<R> {
    angles: [R; 8],
}

impl<R: Real> OmegaSu3<R> {
    /// Validates that every angle is finite.
    pub fn new(angles: [R; 8]) -> Result<Self> {
        const NAMES: [&str; 8] = [
            "alpha1", "beta1", "alpha2", "beta2", "alpha3", "beta3", "gamma1", "gamma2",
        ];
        for (name, &value) in NAMES.iter().zip(angles.iter()) {
            ensure_finite(name, value)?;
        }
        Ok(Self { angles })
    }

    /// All-zero octuple; `su3_matrix` maps it to the identity.
    pub fn zero() -> Self {
        Self {
            angles: [R::zero(); 8],
        }
    }

    pub fn angles(&self) -> [R; 8] {
        self.angles
    }

    pub fn alpha1(&self) -> R {
        self.angles[0]
    }
    pub fn beta1(&self) -> R {
        self.angles[1]
    }
    pub fn alpha2(&self) -> R {
        self.angles[2]
    }
    pub fn beta2(&self) -> R {
        self.angles[3]
    }
    pub fn alpha3(&self) -> R {
        self.angles[4]
    }
    pub fn beta3(&self) -> R {
        self.angles[5]
    }
    pub fn gamma1(&self) -> R {
        self.angles[6]
    }
    pub fn gamma2(&self) -> R {
        self.angles[7]
    }
}

/// Which embedded factor of the decomposition to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubgroupKind {
    /// SU(2) block acting on modes 2 and 3; takes three angles.
    T23,
    /// SU(2) block acting on modes 1 and 2; takes three angles.
    T12,
    /// Diagonal phase matrix; takes two angles.
    Phi,
}

fn phase<R: Real>(x: R) -> Complex<R> {
    Complex::new(R::zero(), x).exp()
}

fn t23<R: Real>(alpha: R, beta: R, gamma: R) -> Matrix3<R> {
    let half = conv::<R>(0.5);
    let (c, s) = ((beta * half).cos(), (beta * half).sin());
    let sum = (alpha + gamma) * half;
    let diff = (alpha - gamma) * half;
    let zero = Complex::new(R::zero(), R::zero());
    let one = Complex::new(R::one(), R::zero());
    Matrix3::new([
        [one, zero, zero],
        [zero, phase(-sum) * c, -(phase(-diff) * s)],
        [zero, phase(diff) * s, phase(sum) * c],
    ])
}

fn t12<R: Real>(alpha: R, beta: R, gamma: R) -> Matrix3<R> {
    let half = conv::<R>(0.5);
    let (c, s) = ((beta * half).cos(), (beta * half).sin());
    let sum = (alpha + gamma) * half;
    let diff = (alpha - gamma) * half;
    let zero = Complex::new(R::zero(), R::zero());
    let one = Complex::new(R::one(), R::zero());
    Matrix3::new([
        [phase(-sum) * c, -(phase(-diff) * s), zero],
        [phase(diff) * s, phase(sum) * c, zero],
        [zero, zero, one],
    ])
}

fn phi<R: Real>(gamma1: R, gamma2: R) -> Matrix3<R> {
    let zero = Complex::new(R::zero(), R::zero());
    let half = conv::<R>(0.5);
    Matrix3::new([
        [phase(-(gamma1 + gamma1)), zero, zero],
        [zero, phase(gamma1 - gamma2 * half), zero],
        [zero, zero, phase(gamma1 + gamma2 * half)],
    ])
}

/// One factor of the Euler decomposition as an embedded 3x3 matrix.
///
/// `T23` and `T12` take `(alpha, beta, gamma)`; `Phi` takes
/// `(gamma1, gamma2)`. Passing the wrong number of angles is an error.
pub fn subgroup_factor<R: Real>(kind: SubgroupKind, angles: &[R]) -> Result<Matrix3<R>> {
    let expected = match kind {
        SubgroupKind::T23 | SubgroupKind::T12 => 3,
        SubgroupKind::Phi => 2,
    };
    if angles.len() != expected {
        return Err(Error::WrongAngleCount {
            kind: match kind {
                SubgroupKind::T23 => "T23",
                SubgroupKind::T12 => "T12",
                SubgroupKind::Phi => "Phi",
            },
            expected,
            got: angles.len(),
        });
    }
    for &a in angles {
        ensure_finite("subgroup angle", a)?;
    }
    Ok(match kind {
        SubgroupKind::T23 => t23(angles[0], angles[1], angles[2]),
        SubgroupKind::T12 => t12(angles[0], angles[1], angles[2]),
        SubgroupKind::Phi => phi(angles[0], angles[1]),
    })
}

/// The interferometer matrix
///
/// ```text
///   R = T23(a1, b1, -a1) . T12(a2, b2, -a2) . T23(a3, b3, -a3) . Phi(g1, g2)
/// ```
///
/// Each factor has unit determinant, so `R` is special-unitary for every
/// octuple. Physically the factorization is a phase-shifter/beam-splitter
/// sequence on mode pairs (23), (12), (23) followed by output phases.
pub fn su3_matrix<R: Real>(omega: &OmegaSu3<R>) -> Matrix3<R> {
    let [a1, b1, a2, b2, a3, b3, g1, g2] = omega.angles;
    t23(a1, b1, -a1)
        .mul(&t12(a2, b2, -a2))
        .mul(&t23(a3, b3, -a3))
        .mul(&phi(g1, g2))
}

/// The six products `a_ijk = R_i1 R_j2 R_k3` over permutations (ijk) of
/// (123): the amplitude for the photons entering ports 1, 2, 3 to leave
/// through ports i, j, k.
///
/// Their sum over all six permutations is the permanent of `R`, and each
/// component has modulus at most 1 when `R` is unitary.
#[derive(Clone, Copy, Debug)]
pub struct AmplitudeVector<R> {
    components: [Complex<R>; 6],
}

impl<R: Real> AmplitudeVector<R> {
    /// Component for output assignment `(ijk)`.
    pub fn get(&self, p: Perm3) -> Complex<R> {
        self.components[p.index()]
    }

    /// Components in lexicographic label order (123, 132, 213, 231, 312, 321).
    pub fn as_array(&self) -> &[Complex<R>; 6] {
        &self.components
    }

    /// Sum of all six components (equals the permanent of the source matrix).
    pub fn sum(&self) -> Complex<R> {
        let mut total = Complex::new(R::zero(), R::zero());
        for &a in &self.components {
            total += a;
        }
        total
    }

    /// Sum of squared magnitudes; the fully-distinguishable rate background.
    pub fn sum_norm_sqr(&self) -> R {
        let mut total = R::zero();
        for &a in &self.components {
            total += a.norm_sqr();
        }
        total
    }
}

/// Builds the [`AmplitudeVector`] of a 3x3 matrix.
pub fn amplitude_vector<R: Real>(r: &Matrix3<R>) -> AmplitudeVector<R> {
    let mut components = [Complex::new(R::zero(), R::zero()); 6];
    for p in Perm3::ALL {
        let [i, j, k] = p.triple();
        components[p.index()] = r.entries[i - 1][0] * r.entries[j - 1][1] * r.entries[k - 1][2];
    }
    AmplitudeVector { components }
}
