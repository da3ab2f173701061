//! Three-qubit X-states from magnetization correlators.
//!
//! An X-state is supported on the diagonal and anti-diagonal of the computational basis. It is
//! fixed by the expectation values of fifteen Pauli strings: the seven Z-type strings for the
//! diagonal and the eight all-X/Y strings for the anti-diagonal. Its Pauli expansion is
//! ρ = (I + Σᵢ tᵢ Pᵢ)/8 with tᵢ = Tr{ρ Pᵢ}.

use super::sampling::{
    sample_shots_on_stream, EstimateWithError, ProjectiveMeasurement, ShotSample,
};
use crate::error::{Error, Result};
use crate::quantum::matrix::{identity, tensor, trace_product, ComplexMatrix};
use crate::quantum::{DensityMatrix, PauliString};

/// The correlator strings, in measurement order m₁ … m₁₅.
pub const XSTATE_STRINGS: [&str; 15] = [
    "ZII", "IZI", "IIZ", "ZZI", "IZZ", "ZIZ", "ZZZ", "XXX", "XXY", "XYX", "YXX", "YYX", "YXY",
    "XYY", "YYY",
];

/// Off-pattern entries larger than this disqualify a matrix as an X-state.
pub const XSTATE_TOL: f64 = 1e-10;

pub fn xstate_strings() -> Vec<PauliString> {
    XSTATE_STRINGS
        .iter()
        .map(|s| s.parse().expect("static Pauli strings"))
        .collect()
}

fn string_matrices() -> Vec<ComplexMatrix> {
    xstate_strings()
        .iter()
        .map(|p| p.matrix().expect("three-qubit string"))
        .collect()
}

fn check_three_qubit(rho: &DensityMatrix) -> Result<()> {
    if rho.dim() != 8 {
        return Err(Error::DimensionMismatch(rho.dim(), 8));
    }
    Ok(())
}

/// Returns an error naming the largest entry off the diagonal and anti-diagonal.
pub fn check_x_state(rho: &DensityMatrix) -> Result<()> {
    check_three_qubit(rho)?;
    let m = rho.matrix();
    let mut worst = (0.0, 0, 0);
    for r in 0..8 {
        for col in 0..8 {
            if col == r || col == 7 - r {
                continue;
            }
            let mag = m[(r, col)].norm();
            if mag > worst.0 {
                worst = (mag, r, col);
            }
        }
    }
    if worst.0 > XSTATE_TOL {
        return Err(Error::NotXState {
            magnitude: worst.0,
            row: worst.1,
            col: worst.2,
        });
    }
    Ok(())
}

/// tᵢ = Tr{ρ Pᵢ} for the fifteen strings.
pub fn xstate_correlators(rho: &DensityMatrix) -> Result<[f64; 15]> {
    check_three_qubit(rho)?;
    let mut t = [0.0; 15];
    for (slot, p) in t.iter_mut().zip(string_matrices()) {
        *slot = trace_product(rho.matrix(), &p).re;
    }
    Ok(t)
}

/// ρ = (I₈ + Σᵢ tᵢ Pᵢ)/8, rejected as [`Error::Unphysical`] if it is not a valid state.
pub fn xstate_reconstruct(correlators: &[f64; 15]) -> Result<DensityMatrix> {
    if let Some(bad) = correlators.iter().find(|t| !t.is_finite()) {
        return Err(Error::Unphysical(*bad));
    }
    let mut m = identity(8);
    for (t, p) in correlators.iter().zip(string_matrices()) {
        m += p.scale(*t);
    }
    match DensityMatrix::new(m.unscale(8.0)) {
        Ok(rho) => Ok(rho),
        Err(Error::NotPositive(min)) => Err(Error::Unphysical(min)),
        Err(e) => Err(e),
    }
}

/// Tr{ρσ} from the pair correlators Tr{(ρ ⊗ σ)(Pᵢ ⊗ Pᵢ)}.
///
/// ρ must be an X-state. σ may be any three-qubit state: ρ has no weight on the other
/// 48 Pauli strings, so those terms drop out of the expansion of Tr{ρσ}.
pub fn overlap_via_correlators(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64> {
    check_x_state(rho)?;
    check_three_qubit(sigma)?;
    let pair = tensor(rho.matrix(), sigma.matrix())?;
    let mut total = 1.0;
    for p in string_matrices() {
        let m = tensor(&p, &p)?;
        total += trace_product(&pair, &m).re;
    }
    Ok(total / 8.0)
}

/// Shot estimate of [`overlap_via_correlators`]: each pair correlator Pᵢ ⊗ Pᵢ is measured
/// `shots_per_string` times on its own RNG stream (`stream_base + i`).
///
/// Returns the estimate and the fifteen ±1 count records.
pub fn overlap_via_correlator_shots(
    rho: &DensityMatrix,
    sigma: &DensityMatrix,
    shots_per_string: u64,
    seed: u64,
    stream_base: u64,
) -> Result<(EstimateWithError, Vec<ShotSample>)> {
    check_x_state(rho)?;
    check_three_qubit(sigma)?;
    if shots_per_string == 0 {
        return Err(Error::InvalidShots(0));
    }
    let pair = rho.tensor(sigma)?;
    let id = identity(64);
    let n = shots_per_string as f64;
    let dof = if shots_per_string > 1 { n - 1.0 } else { n };
    let (mut total, mut var) = (1.0, 0.0);
    let mut samples = Vec::with_capacity(15);
    for (i, p) in string_matrices().iter().enumerate() {
        let m = tensor(p, p)?;
        let measurement = ProjectiveMeasurement::new(
            vec![(&id + &m).scale(0.5), (&id - &m).scale(0.5)],
            vec!["+1".into(), "-1".into()],
        )?;
        let sample = sample_shots_on_stream(
            &pair,
            &measurement,
            shots_per_string,
            seed,
            stream_base + i as u64,
        )?;
        let mean = (sample.count("+1") as f64 - sample.count("-1") as f64) / n;
        total += mean;
        var += ((1.0 - mean * mean) / dof).max(0.0);
        samples.push(sample);
    }
    let estimate = EstimateWithError {
        value: total / 8.0,
        std_error: var.sqrt() / 8.0,
        shots: 15 * shots_per_string,
    };
    Ok((estimate, samples))
}

/// Orthogonal projection of an 8×8 matrix onto span{I, P₁, …, P₁₅}.
pub fn project_onto_x_span(m: &ComplexMatrix) -> ComplexMatrix {
    let id = identity(8);
    let mut out = id.scale(trace_product(m, &id).re / 8.0);
    for p in string_matrices() {
        let coeff = trace_product(m, &p) / 8.0;
        out += p * coeff;
    }
    out
}
