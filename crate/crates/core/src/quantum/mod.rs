//! States, observables, Pauli strings, spectral decomposition and the probe families.

pub mod matrix;
pub mod pauli;
pub mod probes;
pub mod spectral;
pub mod state;

pub use matrix::{tensor, ComplexMatrix, DEFAULT_DIM_CAP};
pub use pauli::{collective_spin, Axis, Pauli, PauliString};
pub use probes::{bell_diagonal_probe, ghz_state, plus_noise_probe, werner_state, StateFamily};
pub use spectral::SpectralDecomposition;
pub use state::{evolve_phase, DensityMatrix, MatrixJson, Observable};

/// Alias kept for callers that think in terms of the operation rather than the type.
pub fn validate_state(raw: ComplexMatrix) -> crate::Result<DensityMatrix> {
    DensityMatrix::new(raw)
}

pub fn spectral_decompose(m: &ComplexMatrix) -> crate::Result<SpectralDecomposition> {
    SpectralDecomposition::of(m)
}
