//! Two-channel (beam-splitter) transformations and the two-photon
//! Hong-Ou-Mandel coincidence rate.

use num_complex::Complex;

use crate::error::Result;
use crate::immanants::{determinant2, permanent2};
use crate::linalg::Matrix2;
use crate::{conv, ensure_finite, ensure_sigma, Real};

/// Euler-angle triplet parametrizing a 2x2 special-unitary beam splitter.
///
/// Angles are in radians with no range restriction; periodicity is the
/// caller's concern. Construction rejects non-finite values, so every held
/// triplet is valid.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EulerSu2<R> {
    alpha: R,
    beta: R,
    gamma: R,
}

impl<R: Real> EulerSu2<R> {
    pub fn new(alpha: R, beta: R, gamma: R) -> Result<Self> {
        ensure_finite("alpha", alpha)?;
        ensure_finite("beta", beta)?;
        ensure_finite("gamma", gamma)?;
        Ok(Self { alpha, beta, gamma })
    }

    pub fn alpha(&self) -> R {
        self.alpha
    }

    pub fn beta(&self) -> R {
        self.beta
    }

    pub fn gamma(&self) -> R {
        self.gamma
    }
}

/// The beam-splitter matrix
///
/// ```text
///   [ e^{-i(alpha+gamma)/2} cos(beta/2)   -e^{-i(alpha-gamma)/2} sin(beta/2) ]
///   [ e^{ i(alpha-gamma)/2} sin(beta/2)    e^{ i(alpha+gamma)/2} cos(beta/2) ]
/// ```
///
/// Unitary with determinant +1 for every triplet; the permanent is
/// `cos(beta)`. The determinant phase of a general U(2) element is not
/// modelled: it drops out of every coincidence quantity.
pub fn su2_matrix<R: Real>(omega: &EulerSu2<R>) -> Matrix2<R> {
    let half = conv::<R>(0.5);
    let cos_half = (omega.beta * half).cos();
    let sin_half = (omega.beta * half).sin();
    let phase = |x: R| Complex::new(R::zero(), x).exp();
    let sum = (omega.alpha + omega.gamma) * half;
    let diff = (omega.alpha - omega.gamma) * half;
    Matrix2::new([
        [phase(-sum) * cos_half, -(phase(-diff) * sin_half)],
        [phase(diff) * sin_half, phase(sum) * cos_half],
    ])
}

/// Inputs for the two-photon coincidence rate: relative delay, spectral
/// half-width, and the beam-splitter angles. `delay` carries the same units
/// as `1/sigma`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HomRateParams<R> {
    delay: R,
    sigma: R,
    omega: EulerSu2<R>,
}

impl<R: Real> HomRateParams<R> {
    pub fn new(delay: R, sigma: R, omega: EulerSu2<R>) -> Result<Self> {
        ensure_finite("delay", delay)?;
        ensure_sigma(sigma)?;
        Ok(Self {
            delay,
            sigma,
            omega,
        })
    }

    pub fn delay(&self) -> R {
        self.delay
    }

    pub fn sigma(&self) -> R {
        self.sigma
    }

    pub fn omega(&self) -> &EulerSu2<R> {
        &self.omega
    }
}

/// Two-photon coincidence rate with one photon per input port:
///
/// ```text
///   p11(delay) = 1/2 [ (1 + e^{-sigma^2 delay^2}) |per R|^2
///              + (1 - e^{-sigma^2 delay^2}) |det R|^2 ]
/// ```
///
/// At zero delay only the permanent survives, giving `cos^2(beta)`; a
/// balanced splitter (`beta = pi/2`) therefore yields the Hong-Ou-Mandel
/// zero. At large delay the rate settles to the distinguishable-photon
/// background `(|per|^2 + |det|^2) / 2`.
///
/// ```
/// use coincidence_core::su2::{hom_rate, EulerSu2, HomRateParams};
/// use std::f64::consts::FRAC_PI_2;
///
/// # fn main() -> coincidence_core::Result<()> {
/// let balanced = EulerSu2::new(0.0, FRAC_PI_2, 0.0)?;
/// let dip = hom_rate(&HomRateParams::new(0.0, 1.0, balanced)?);
/// assert!(dip.abs() < 1e-12);
/// # Ok(())
/// # }
/// ```
pub fn hom_rate<R: Real>(params: &HomRateParams<R>) -> R {
    let r = su2_matrix(&params.omega);
    let per_sq = permanent2(&r).norm_sqr();
    let det_sq = determinant2(&r).norm_sqr();
    let overlap = (-(params.sigma * params.sigma * params.delay * params.delay)).exp();
    conv::<R>(0.5) * ((R::one() + overlap) * per_sq + (R::one() - overlap) * det_sq)
}
