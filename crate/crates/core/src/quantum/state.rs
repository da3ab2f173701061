//! Validated density matrices and observables.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::matrix::{
    ensure_hermitian, ensure_same_dim, ensure_square, from_parts, hermitian_part, identity,
    projector, trace, trace_product, ComplexMatrix,
};
use super::spectral::SpectralDecomposition;
use crate::error::{Error, Result};

pub const HERMITIAN_TOL: f64 = 1e-10;
pub const TRACE_TOL: f64 = 1e-10;
/// Eigenvalues in `[-PSD_TOL, 0)` are clamped to zero on validation.
pub const PSD_TOL: f64 = 1e-10;

/// A Hermitian, unit-trace, positive-semidefinite matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix(ComplexMatrix);

/// A Hermitian operator: a Hamiltonian, a generator, or a measured quantity.
#[derive(Debug, Clone, PartialEq)]
pub struct Observable(ComplexMatrix);

impl DensityMatrix {
    /// Checks Hermiticity, trace and positivity (in that order) and returns the state.
    ///
    /// Slightly negative eigenvalues are clamped to zero and the spectrum renormalized.
    pub fn new(raw: ComplexMatrix) -> Result<Self> {
        ensure_square(&raw)?;
        ensure_hermitian(&raw, HERMITIAN_TOL)?;
        let m = hermitian_part(&raw);
        let tr = trace(&m).re;
        if (tr - 1.0).abs() > TRACE_TOL {
            return Err(Error::TraceNotOne(tr));
        }
        let spec = SpectralDecomposition::of(&m)?;
        let min = spec.eigenvalues[0];
        if min < -PSD_TOL {
            return Err(Error::NotPositive(min));
        }
        if min < 0.0 {
            let total: f64 = spec.eigenvalues.iter().map(|&l| l.max(0.0)).sum();
            return Ok(Self(spec.apply(|l| l.max(0.0) / total)));
        }
        Ok(Self(m))
    }

    /// Wraps a matrix already known to be a state (e.g. the image of one under a unitary).
    pub(crate) fn from_trusted(m: ComplexMatrix) -> Self {
        Self(hermitian_part(&m))
    }

    /// |ψ⟩⟨ψ| for a (normalized on the fly) state vector.
    pub fn pure(psi: &[Complex64]) -> Result<Self> {
        let norm2: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
        if psi.is_empty() || norm2 <= f64::MIN_POSITIVE {
            return Err(Error::ParameterOutOfRange {
                name: "state vector norm",
                value: norm2.sqrt(),
            });
        }
        Ok(Self(projector(psi)))
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        Self(identity(dim).unscale(dim as f64))
    }

    /// p·a + (1 − p)·b.
    pub fn mix(p: f64, a: &Self, b: &Self) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::ParameterOutOfRange {
                name: "p",
                value: p,
            });
        }
        ensure_same_dim(&a.0, &b.0)?;
        Ok(Self(a.0.scale(p) + b.0.scale(1.0 - p)))
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn spectrum(&self) -> Result<SpectralDecomposition> {
        SpectralDecomposition::of(&self.0)
    }

    /// Tr ρ².
    pub fn purity(&self) -> f64 {
        trace_product(&self.0, &self.0).re
    }

    /// Tr ρσ.
    pub fn overlap(&self, other: &Self) -> Result<f64> {
        ensure_same_dim(&self.0, &other.0)?;
        Ok(trace_product(&self.0, &other.0).re)
    }

    /// Tr ρA.
    pub fn expectation(&self, op: &ComplexMatrix) -> Result<f64> {
        ensure_same_dim(&self.0, op)?;
        Ok(trace_product(&self.0, op).re)
    }

    pub fn tensor(&self, other: &Self) -> Result<Self> {
        Ok(Self(super::matrix::tensor(&self.0, &other.0)?))
    }

    /// U ρ U†. `u` is trusted to be unitary.
    pub fn unitary_conjugate(&self, u: &ComplexMatrix) -> Result<Self> {
        ensure_same_dim(&self.0, u)?;
        Ok(Self::from_trusted(u * &self.0 * u.adjoint()))
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson::from_matrix(&self.0)
    }

    pub fn from_json(json: &MatrixJson) -> Result<Self> {
        Self::new(json.to_matrix()?)
    }
}

impl Observable {
    pub fn new(m: ComplexMatrix) -> Result<Self> {
        ensure_square(&m)?;
        ensure_hermitian(&m, HERMITIAN_TOL)?;
        Ok(Self(hermitian_part(&m)))
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn spectrum(&self) -> Result<SpectralDecomposition> {
        SpectralDecomposition::of(&self.0)
    }

    /// e^{−iHθ}, built from the spectral decomposition of H.
    pub fn phase_unitary(&self, theta: f64) -> Result<ComplexMatrix> {
        let spec = self.spectrum()?;
        Ok(spec.apply_complex(|h| Complex64::from_polar(1.0, -h * theta)))
    }

    /// U† H U.
    pub fn unitary_conjugate(&self, u: &ComplexMatrix) -> Result<Self> {
        ensure_same_dim(&self.0, u)?;
        Ok(Self(hermitian_part(&(u.adjoint() * &self.0 * u))))
    }

    pub fn scale(&self, k: f64) -> Self {
        Self(self.0.scale(k))
    }
}

/// ρ_θ = e^{−iHθ} ρ e^{iHθ}.
pub fn evolve_phase(rho: &DensityMatrix, h: &Observable, theta: f64) -> Result<DensityMatrix> {
    ensure_same_dim(rho.matrix(), h.matrix())?;
    let u = h.phase_unitary(theta)?;
    rho.unitary_conjugate(&u)
}

/// JSON wire form of a square complex matrix: `{"dim": d, "re": [[...]], "im": [[...]]}`, row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub dim: usize,
    pub re: Vec<Vec<f64>>,
    pub im: Vec<Vec<f64>>,
}

impl MatrixJson {
    pub fn from_matrix(m: &ComplexMatrix) -> Self {
        let dim = m.nrows();
        let rows = |f: fn(&Complex64) -> f64| {
            (0..dim)
                .map(|r| (0..dim).map(|col| f(&m[(r, col)])).collect())
                .collect()
        };
        Self {
            dim,
            re: rows(|z| z.re),
            im: rows(|z| z.im),
        }
    }

    pub fn to_matrix(&self) -> Result<ComplexMatrix> {
        if self.re.len() != self.dim {
            return Err(Error::DimensionMismatch(self.dim, self.re.len()));
        }
        from_parts(&self.re, &self.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::matrix::{c, max_abs_diff, pauli_x, pauli_z};

    #[test]
    fn maximally_mixed_qubit_is_valid() {
        let rho = DensityMatrix::new(identity(2).unscale(2.0)).unwrap();
        let s = rho.spectrum().unwrap();
        assert!((s.eigenvalues[0] - 0.5).abs() < 1e-15);
        assert!((s.eigenvalues[1] - 0.5).abs() < 1e-15);
    }

    #[test]
    fn tiny_negative_eigenvalue_is_clamped() {
        let mut m = ComplexMatrix::zeros(2, 2);
        m[(0, 0)] = c(1.0, 0.0);
        m[(1, 1)] = c(-1e-11, 0.0);
        let rho = DensityMatrix::new(m).unwrap();
        let s = rho.spectrum().unwrap();
        assert!(s.eigenvalues[0].abs() < 1e-15);
        assert!((s.eigenvalues[1] - 1.0).abs() < 1e-15);
        assert!((trace(rho.matrix()).re - 1.0).abs() < 1e-15);
    }

    #[test]
    fn trace_not_one() {
        let m = identity(2).scale(0.6);
        match DensityMatrix::new(m) {
            Err(Error::TraceNotOne(t)) => assert!((t - 1.2).abs() < 1e-12),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn not_hermitian_names_entry() {
        let mut m = identity(2).unscale(2.0);
        m[(0, 1)] = c(0.1, 0.0);
        match DensityMatrix::new(m) {
            Err(Error::NotHermitian {
                row,
                col,
                deviation,
            }) => {
                assert_eq!((row, col), (0, 1));
                assert!((deviation - 0.1).abs() < 1e-12);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn negative_state_rejected() {
        let mut m = ComplexMatrix::zeros(2, 2);
        m[(0, 0)] = c(1.5, 0.0);
        m[(1, 1)] = c(-0.5, 0.0);
        assert!(
            matches!(DensityMatrix::new(m), Err(Error::NotPositive(v)) if (v + 0.5).abs() < 1e-12)
        );
    }

    #[test]
    fn zero_angle_is_identity() {
        let rho = DensityMatrix::pure(&[c(0.6, 0.0), c(0.0, 0.8)]).unwrap();
        let h = Observable::new(pauli_x()).unwrap();
        let out = evolve_phase(&rho, &h, 0.0).unwrap();
        assert!(max_abs_diff(out.matrix(), rho.matrix()) < 1e-15);
    }

    #[test]
    fn half_sigma_x_for_pi_flips_the_qubit() {
        // e^{-iπσx/2} = -iσx, so |0⟩⟨0| ↦ |1⟩⟨1|.
        let rho = DensityMatrix::pure(&[c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        let h = Observable::new(pauli_x().scale(0.5)).unwrap();
        let out = evolve_phase(&rho, &h, std::f64::consts::PI).unwrap();
        let expected = DensityMatrix::pure(&[c(0.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert!(max_abs_diff(out.matrix(), expected.matrix()) < 1e-12);
    }

    #[test]
    fn commuting_state_is_stationary() {
        let rho = DensityMatrix::new(ComplexMatrix::from_diagonal(&nalgebra::DVector::from_vec(
            vec![c(0.3, 0.0), c(0.7, 0.0)],
        )))
        .unwrap();
        let h = Observable::new(pauli_z()).unwrap();
        for theta in [0.1, 1.0, 2.5, -4.0] {
            let out = evolve_phase(&rho, &h, theta).unwrap();
            assert!(max_abs_diff(out.matrix(), rho.matrix()) < 1e-15);
        }
    }

    #[test]
    fn evolve_rejects_dimension_mismatch() {
        let rho = DensityMatrix::maximally_mixed(4);
        let h = Observable::new(pauli_z()).unwrap();
        assert_eq!(
            evolve_phase(&rho, &h, 0.3),
            Err(Error::DimensionMismatch(4, 2))
        );
    }

    #[test]
    fn json_round_trip() {
        let rho = DensityMatrix::pure(&[c(0.6, 0.0), c(0.0, 0.8)]).unwrap();
        let text = serde_json::to_string(&rho.to_json()).unwrap();
        let back: MatrixJson = serde_json::from_str(&text).unwrap();
        assert_eq!(DensityMatrix::from_json(&back).unwrap(), rho);
    }
}
