//! Coincidence rates and two-delay landscapes for two- and three-channel
//! passive linear optical interferometers.
//!
//! One photon enters each port of a lossless interferometer with a
//! controllable arrival time; detectors at the outputs register coincidences.
//! For two channels this is the familiar Hong-Ou-Mandel experiment; for three
//! channels the coincidence rate becomes a surface over the two independent
//! pairwise delays. The rate mixes the permanent, the determinant, and the
//! mixed-symmetry immanants of the interferometer matrix, with Gaussian
//! wavepacket overlaps controlling how much each symmetry class contributes.
//!
//! The crate is organised around cross-checkable routes to the same numbers:
//!
//! - [`su2`] builds 2x2 special-unitary beam-splitter matrices and the
//!   two-photon coincidence rate.
//! - [`su3`] builds 3x3 special-unitary matrices from an eight-angle Euler
//!   factorization and the six three-photon amplitude products.
//! - [`immanants`] evaluates permanents, determinants, and mixed immanants by
//!   the explicit character sum over the symmetric group, plus row-permuted
//!   variants.
//! - [`dfunctions`] carries the closed-form group functions, the fixed
//!   coefficient tables relating amplitudes to immanants, and the basis
//!   change used when the first two photons are the identical pair.
//! - [`rates`] assembles three-photon coincidence rates from a 6x6 Gaussian
//!   overlap matrix, provides the special-case closed forms, and sweeps
//!   delay grids into landscapes.
//! - [`verify`] runs the seeded cross-path check suite that the CLI exposes.
//!
//! All numerics are generic over the scalar type through the [`Real`] trait;
//! `f64` aliases for the main types live at the crate root.
//!
//! # Example
//!
//! ```
//! use coincidence_core::rates::{coincidence_rate, DelaySpec};
//! use coincidence_core::su3::OmegaSu3;
//!
//! # fn main() -> coincidence_core::Result<()> {
//! let omega = OmegaSu3::new([0.0f64, 1.2, 0.4, 1.6, 0.0, 0.9, 0.0, 0.0])?;
//! // photons arrive at 0, 2, and 4 time units with spectral width 0.5
//! let spec = DelaySpec::from_deltas(2.0, 2.0, 0.5)?;
//! let rate = coincidence_rate(&omega, &spec);
//! assert!(rate.is_finite() && rate >= 0.0);
//! # Ok(())
//! # }
//! ```

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

pub mod dfunctions;
pub mod error;
pub mod immanants;
pub mod linalg;
pub mod perm;
pub mod rates;
pub mod su2;
pub mod su3;
pub mod verify;

pub use error::{Error, Result};
pub use num_complex::Complex;
pub use perm::Perm3;

/// Floating-point scalar the numerics are generic over: `f32` or `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + NumAssign + Debug + Display + Send + Sync + 'static
{
}

impl<T> Real for T where
    T: Float + FloatConst + FromPrimitive + NumAssign + Debug + Display + Send + Sync + 'static
{
}

/// Converts an `f64` constant into the working scalar type.
pub(crate) fn conv<R: Real>(x: f64) -> R {
    R::from_f64(x).expect("finite f64 constant converts to the scalar type")
}

pub type C32 = Complex<f32>;
pub type C64 = Complex<f64>;

/// Double-precision aliases for the main domain types (what the CLI uses).
pub type Matrix2F64 = linalg::Matrix2<f64>;
pub type Matrix3F64 = linalg::Matrix3<f64>;
pub type EulerSu2F64 = su2::EulerSu2<f64>;
pub type HomRateParamsF64 = su2::HomRateParams<f64>;
pub type OmegaSu3F64 = su3::OmegaSu3<f64>;
pub type AmplitudeVectorF64 = su3::AmplitudeVector<f64>;
pub type ImmanantSetF64 = immanants::ImmanantSet<f64>;
pub type DFunctionSetF64 = dfunctions::DFunctionSet<f64>;
pub type DelaySpecF64 = rates::DelaySpec<f64>;
pub type GramMatrix6F64 = rates::GramMatrix6<f64>;
pub type RateLandscapeF64 = rates::RateLandscape<f64>;

pub(crate) fn ensure_finite<R: Real>(name: &'static str, value: R) -> Result<()> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite {
            name,
            value: value.to_f64().unwrap_or(f64::NAN),
        })
    }
}

pub(crate) fn ensure_sigma<R: Real>(sigma: R) -> Result<()> {
    if sigma.is_finite() && sigma > R::zero() {
        Ok(())
    } else {
        Err(Error::NonPositiveSigma {
            value: sigma.to_f64().unwrap_or(f64::NAN),
        })
    }
}
