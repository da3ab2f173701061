use thiserror::Error;

/// Errors raised by the numerical layers of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not Hermitian: |M - M^dagger| = {deviation:e} at entry ({row}, {col})")]
    NotHermitian {
        deviation: f64,
        row: usize,
        col: usize,
    },

    #[error("trace is not 1 (got {0})")]
    TraceNotOne(f64),

    #[error("not positive semidefinite (min eigenvalue {0:e})")]
    NotPositive(f64),

    #[error("eigensolver did not converge for a {0}x{0} matrix")]
    ConvergenceFailure(usize),

    #[error("dimension {dim} exceeds the cap of {cap}")]
    DimensionOverflow { dim: usize, cap: usize },

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("parameter `{name}` out of range: {value}")]
    ParameterOutOfRange { name: &'static str, value: f64 },

    #[error("metric weight undefined for `{function}` at ratio {ratio}")]
    UndefinedWeight { function: String, ratio: f64 },

    #[error("invalid POVM: {0}")]
    InvalidPovm(String),

    #[error("Fisher information {0:e} is zero; the Cramer-Rao bound is infinite")]
    ZeroInformation(f64),

    #[error("rotation angle must be nonzero")]
    ZeroTheta,

    #[error("criterion is not monotone in the family parameter near p = {0}")]
    NonMonotone(f64),

    #[error("criterion never exceeds its threshold on [0, 1]")]
    NotCrossed,

    #[error("correlators do not describe a physical state (min eigenvalue {0:e})")]
    Unphysical(f64),

    #[error("not an X-state: off-pattern entry of magnitude {magnitude:e} at ({row}, {col})")]
    NotXState {
        magnitude: f64,
        row: usize,
        col: usize,
    },

    #[error("invalid measurement basis: {0}")]
    InvalidBasis(String),

    #[error("invalid shot count: {0}")]
    InvalidShots(u64),

    #[error("invalid CM function `{name}`: {reason}")]
    InvalidCmFunction { name: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
