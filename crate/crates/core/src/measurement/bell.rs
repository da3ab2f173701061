//! Purity and overlap of a two-qubit state from singlet projections on two copies.
//!
//! The register is laid out A₁B₁A₂B₂ (copy 1, then copy 2). With P⁻ the singlet projector,
//!
//! ```text
//! O₁ = P⁻_{A₁A₂},  O₂ = P⁻_{B₁B₂},  O₃ = O₁ O₂
//! Tr{V (ρ ⊗ σ)} = 1 + 4⟨O₃⟩ − 2⟨O₁⟩ − 2⟨O₂⟩
//! ```
//!
//! because V = (I − 2 O₁)(I − 2 O₂). Taking σ = ρ gives the purity, σ = U_θ ρ U_θ† the overlap.

use serde::{Deserialize, Serialize};

use super::sampling::{
    sample_shots_on_stream, EstimateWithError, ProjectiveMeasurement, ShotSample,
};
use super::swap::{embed_two_qubit, singlet_projector};
use crate::error::{Error, Result};
use crate::quantum::matrix::{ensure_same_dim, identity, ComplexMatrix};
use crate::quantum::{evolve_phase, DensityMatrix, Observable};

/// Qubit ordering of a two-copy register.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Layout {
    /// Copy 1 (A₁B₁) followed by copy 2 (A₂B₂).
    A1B1A2B2,
}

/// ρ ⊗ σ on two copies of a two-qubit system.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoCopyRegister {
    pub state: DensityMatrix,
    pub layout: Layout,
}

impl TwoCopyRegister {
    pub fn new(first: &DensityMatrix, second: &DensityMatrix) -> Result<Self> {
        check_two_qubit(first)?;
        ensure_same_dim(first.matrix(), second.matrix())?;
        Ok(Self {
            state: first.tensor(second)?,
            layout: Layout::A1B1A2B2,
        })
    }

    /// ρ ⊗ U_θ ρ U_θ†.
    pub fn with_rotated_copy(rho: &DensityMatrix, h: &Observable, theta: f64) -> Result<Self> {
        Self::new(rho, &evolve_phase(rho, h, theta)?)
    }
}

fn check_two_qubit(rho: &DensityMatrix) -> Result<()> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch(rho.dim(), 4));
    }
    Ok(())
}

/// The three singlet observables on A₁B₁A₂B₂.
#[derive(Debug, Clone, PartialEq)]
pub struct SingletObservables {
    pub o1: ComplexMatrix,
    pub o2: ComplexMatrix,
    pub o3: ComplexMatrix,
}

impl SingletObservables {
    pub fn new() -> Self {
        let p = singlet_projector();
        let o1 = embed_two_qubit(&p, 0, 2, 4).expect("16-dimensional register");
        let o2 = embed_two_qubit(&p, 1, 3, 4).expect("16-dimensional register");
        let o3 = &o1 * &o2;
        Self { o1, o2, o3 }
    }

    /// (⟨O₁⟩, ⟨O₂⟩, ⟨O₃⟩) on a register.
    pub fn expectations(&self, register: &TwoCopyRegister) -> (f64, f64, f64) {
        let s = &register.state;
        (
            s.expectation(&self.o1).expect("register is 16-dimensional"),
            s.expectation(&self.o2).expect("register is 16-dimensional"),
            s.expectation(&self.o3).expect("register is 16-dimensional"),
        )
    }

    /// Joint singlet/triplet measurement on both copy pairs: outcomes `ss`, `st`, `ts`, `tt`
    /// (first letter for A₁A₂, second for B₁B₂).
    pub fn joint_measurement(&self) -> ProjectiveMeasurement {
        let id = identity(16);
        let sa = &self.o1;
        let ta = &id - sa;
        let sb = &self.o2;
        let tb = &id - sb;
        ProjectiveMeasurement::new(
            vec![sa * sb, sa * &tb, &ta * sb, &ta * &tb],
            ["ss", "st", "ts", "tt"].map(String::from).to_vec(),
        )
        .expect("singlet/triplet products form a projective measurement")
    }
}

impl Default for SingletObservables {
    fn default() -> Self {
        Self::new()
    }
}

/// 1 + 4⟨O₃⟩ − 2⟨O₁⟩ − 2⟨O₂⟩.
pub fn assemble_swap(o1: f64, o2: f64, o3: f64) -> f64 {
    1.0 + 4.0 * o3 - 2.0 * o1 - 2.0 * o2
}

/// Swap expectation and its standard error from joint singlet/triplet counts.
///
/// Each shot yields the ±1 eigenvalue of V = (I − 2O₁)(I − 2O₂), so the estimate is a sample
/// mean of a two-valued variable.
pub fn swap_from_counts(sample: &ShotSample) -> EstimateWithError {
    let n = sample.shots as f64;
    let plus = (sample.count("ss") + sample.count("tt")) as f64;
    let minus = (sample.count("st") + sample.count("ts")) as f64;
    let mean = (plus - minus) / n;
    let dof = if sample.shots > 1 { n - 1.0 } else { n };
    let var = ((1.0 - mean * mean) * n / dof).max(0.0);
    EstimateWithError {
        value: mean,
        std_error: (var / n).sqrt(),
        shots: sample.shots,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "mode")]
pub enum EstimationMode {
    Analytic,
    Shots { shots: u64, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BellProjectionEstimate {
    pub purity: EstimateWithError,
    pub overlap: EstimateWithError,
    pub theta: f64,
    /// Raw counts behind `purity` (shot mode only). Drawn on RNG stream 0.
    pub purity_sample: Option<ShotSample>,
    /// Raw counts behind `overlap` (shot mode only). Drawn on RNG stream 1.
    pub overlap_sample: Option<ShotSample>,
}

impl BellProjectionEstimate {
    /// (purity − overlap)/θ² with the two errors added in quadrature.
    pub fn lower_bound(&self) -> EstimateWithError {
        let t2 = self.theta * self.theta;
        EstimateWithError {
            value: (self.purity.value - self.overlap.value) / t2,
            std_error: self.purity.std_error.hypot(self.overlap.std_error) / t2,
            shots: self.purity.shots + self.overlap.shots,
        }
    }
}

/// Estimates Tr{ρ²} and Tr{ρ U_θ ρ U_θ†} for a two-qubit ρ through the singlet observables.
pub fn bell_projection_estimate(
    rho: &DensityMatrix,
    theta: f64,
    h: &Observable,
    mode: EstimationMode,
) -> Result<BellProjectionEstimate> {
    check_two_qubit(rho)?;
    ensure_same_dim(rho.matrix(), h.matrix())?;
    let obs = SingletObservables::new();
    let same = TwoCopyRegister::new(rho, rho)?;
    let rotated = TwoCopyRegister::with_rotated_copy(rho, h, theta)?;
    match mode {
        EstimationMode::Analytic => {
            let (a1, a2, a3) = obs.expectations(&same);
            let (b1, b2, b3) = obs.expectations(&rotated);
            Ok(BellProjectionEstimate {
                purity: EstimateWithError::exact(assemble_swap(a1, a2, a3)),
                overlap: EstimateWithError::exact(assemble_swap(b1, b2, b3)),
                theta,
                purity_sample: None,
                overlap_sample: None,
            })
        }
        EstimationMode::Shots { shots, seed } => {
            if shots == 0 {
                return Err(Error::InvalidShots(shots));
            }
            let joint = obs.joint_measurement();
            let ps = sample_shots_on_stream(&same.state, &joint, shots, seed, 0)?;
            let os = sample_shots_on_stream(&rotated.state, &joint, shots, seed, 1)?;
            Ok(BellProjectionEstimate {
                purity: swap_from_counts(&ps),
                overlap: swap_from_counts(&os),
                theta,
                purity_sample: Some(ps),
                overlap_sample: Some(os),
            })
        }
    }
}
