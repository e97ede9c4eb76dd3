use thiserror::Error;

/// Errors produced when validating inputs to the library's constructors and
/// operations. Numerical routines themselves are total once their inputs
/// have been validated.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An angle, time, or width parameter was NaN or infinite.
    #[error("{name} must be finite, got {value}")]
    NonFinite { name: &'static str, value: f64 },

    /// A spectral width was zero or negative.
    #[error("sigma must be positive, got {value}")]
    NonPositiveSigma { value: f64 },

    /// A triple that was supposed to be a rearrangement of (1, 2, 3) was not.
    #[error("{0:?} is not a permutation of (1, 2, 3)")]
    NotAPermutation([usize; 3]),

    /// A subgroup factor was given the wrong number of angles.
    #[error("subgroup factor {kind} takes {expected} angles, got {got}")]
    WrongAngleCount {
        kind: &'static str,
        expected: usize,
        got: usize,
    },

    /// A mixed D-function index outside {0, 1} x {0, 1}.
    #[error("D-function index (J, I) = ({j}, {i}) out of range; J and I must be 0 or 1")]
    InvalidDFunctionIndex { j: usize, i: usize },

    /// A landscape grid that cannot be sampled.
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    /// An internal consistency check failed; indicates a bug, not bad input.
    #[error("numerical inconsistency: {0}")]
    Numerical(String),
}

/// Shorthand for results carrying [`enum@Error`].
pub type Result<T> = std::result::Result<T, Error>;
