//! The observable lower bound to asymmetry and the spin-squeezing style entanglement witnesses.
//!
//! S_θ(ρ, H) = (Tr{ρ²} − Tr{ρ U_θ ρ U_θ†}) / θ² needs only a purity and an overlap, both of
//! which are swap-operator expectation values on two copies of the state.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metrics::asymmetry_sld;
use crate::quantum::matrix::{ensure_same_dim, qubit_count, trace_product};
use crate::quantum::{collective_spin, evolve_phase, Axis, DensityMatrix, Observable, StateFamily};

/// Purity, overlap with the rotated copy, and the resulting bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundValue {
    pub s_theta: f64,
    pub theta: f64,
    pub purity: f64,
    pub overlap: f64,
}

fn check_theta(theta: f64) -> Result<()> {
    if theta == 0.0 || !theta.is_finite() {
        return Err(Error::ZeroTheta);
    }
    Ok(())
}

pub fn lower_bound(rho: &DensityMatrix, h: &Observable, theta: f64) -> Result<BoundValue> {
    check_theta(theta)?;
    ensure_same_dim(rho.matrix(), h.matrix())?;
    let rotated = evolve_phase(rho, h, theta)?;
    let purity = rho.purity();
    let overlap = rho.overlap(&rotated)?;
    Ok(BoundValue {
        s_theta: (purity - overlap) / (theta * theta),
        theta,
        purity,
        overlap,
    })
}

/// The same bound written as ‖U_θρU_θ† − ρ‖²₂ / (2θ²).
pub fn lower_bound_hilbert_schmidt(rho: &DensityMatrix, h: &Observable, theta: f64) -> Result<f64> {
    check_theta(theta)?;
    let rotated = evolve_phase(rho, h, theta)?;
    let diff = rotated.matrix() - rho.matrix();
    let norm2 = trace_product(&diff, &diff.adjoint()).re;
    Ok(norm2 / (2.0 * theta * theta))
}

fn check_register(rho: &DensityMatrix, n_qubits: usize) -> Result<()> {
    match qubit_count(rho.dim()) {
        Some(n) if n == n_qubits => Ok(()),
        _ => Err(Error::DimensionMismatch(
            rho.dim(),
            1usize << n_qubits.min(63),
        )),
    }
}

/// Per-axis values of a spin quantity with their mean and plain sum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AxisAverage {
    pub per_axis: [f64; 3],
    pub mean: f64,
    pub sum: f64,
}

impl AxisAverage {
    fn from_axes(per_axis: [f64; 3]) -> Self {
        let sum = per_axis.iter().sum();
        Self {
            per_axis,
            mean: sum / 3.0,
            sum,
        }
    }

    pub fn get(&self, reading: AveragedReading) -> f64 {
        match reading {
            AveragedReading::Mean => self.mean,
            AveragedReading::Sum => self.sum,
        }
    }
}

fn over_axes(
    n_qubits: usize,
    mut g: impl FnMut(&Observable) -> Result<f64>,
) -> Result<AxisAverage> {
    let mut per_axis = [0.0; 3];
    for (slot, axis) in per_axis.iter_mut().zip(Axis::ALL) {
        *slot = g(&collective_spin(n_qubits, axis)?)?;
    }
    Ok(AxisAverage::from_axes(per_axis))
}

/// S_θ against J_x, J_y, J_z on an `n_qubits` register.
pub fn averaged_bound(rho: &DensityMatrix, n_qubits: usize, theta: f64) -> Result<AxisAverage> {
    check_theta(theta)?;
    check_register(rho, n_qubits)?;
    over_axes(n_qubits, |j| Ok(lower_bound(rho, j, theta)?.s_theta))
}

/// Asymmetry against J_x, J_y, J_z on an `n_qubits` register.
pub fn averaged_asymmetry(rho: &DensityMatrix, n_qubits: usize) -> Result<AxisAverage> {
    check_register(rho, n_qubits)?;
    over_axes(n_qubits, |j| Ok(asymmetry_sld(rho, j)?.value))
}

/// (n k² + (N − n k)²) / 4 with n = ⌊N/k⌋: no k-separable state of N qubits exceeds it.
pub fn k_separability_bound(n_qubits: usize, k: usize) -> Result<f64> {
    if k == 0 || k > n_qubits {
        return Err(Error::ParameterOutOfRange {
            name: "k",
            value: k as f64,
        });
    }
    let n = n_qubits / k;
    let rest = n_qubits - n * k;
    Ok((n * k * k + rest * rest) as f64 / 4.0)
}

/// Which quantity a witness is evaluated with.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum WitnessMode {
    ExactMetric,
    LowerBound { theta: f64 },
}

/// How the three-axis average is formed. The mean carries the 1/3 prefactor; the sum does not.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AveragedReading {
    Mean,
    Sum,
}

impl AveragedReading {
    pub fn label(self) -> &'static str {
        match self {
            AveragedReading::Mean => "mean",
            AveragedReading::Sum => "sum",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AxisWitness {
    pub metric: f64,
    pub bound: f64,
    pub violated: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AveragedWitness {
    /// Mean over the three axes.
    pub value: f64,
    pub sum: f64,
    /// N/6.
    pub threshold: f64,
    /// `value > threshold`.
    pub violated: bool,
    /// `sum > threshold`.
    pub sum_violated: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub mode: WitnessMode,
    pub per_axis: BTreeMap<Axis, AxisWitness>,
    pub averaged: AveragedWitness,
    pub n_qubits: usize,
    pub k: usize,
    pub n_floor: usize,
}

impl WitnessReport {
    /// True when a per-axis value beats the k-separable bound or the mean beats N/6.
    pub fn entanglement_detected(&self) -> bool {
        self.averaged.violated || self.per_axis.values().any(|w| w.violated)
    }
}

pub fn witness_evaluate(
    rho: &DensityMatrix,
    n_qubits: usize,
    k: usize,
    mode: WitnessMode,
) -> Result<WitnessReport> {
    let bound = k_separability_bound(n_qubits, k)?;
    let values = match mode {
        WitnessMode::ExactMetric => averaged_asymmetry(rho, n_qubits)?,
        WitnessMode::LowerBound { theta } => averaged_bound(rho, n_qubits, theta)?,
    };
    let per_axis = Axis::ALL
        .iter()
        .zip(values.per_axis)
        .map(|(&axis, metric)| {
            (
                axis,
                AxisWitness {
                    metric,
                    bound,
                    violated: metric > bound,
                },
            )
        })
        .collect();
    let threshold = n_qubits as f64 / 6.0;
    Ok(WitnessReport {
        mode,
        per_axis,
        averaged: AveragedWitness {
            value: values.mean,
            sum: values.sum,
            threshold,
            violated: values.mean > threshold,
            sum_violated: values.sum > threshold,
        },
        n_qubits,
        k,
        n_floor: n_qubits / k,
    })
}

/// A scalar evaluated on a state of a family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum WitnessQuantity {
    Asymmetry {
        axis: Axis,
    },
    LowerBound {
        axis: Axis,
        theta: f64,
    },
    AveragedAsymmetry {
        reading: AveragedReading,
    },
    AveragedLowerBound {
        theta: f64,
        reading: AveragedReading,
    },
}

impl WitnessQuantity {
    pub fn evaluate(&self, rho: &DensityMatrix, n_qubits: usize) -> Result<f64> {
        match *self {
            WitnessQuantity::Asymmetry { axis } => {
                check_register(rho, n_qubits)?;
                Ok(asymmetry_sld(rho, &collective_spin(n_qubits, axis)?)?.value)
            }
            WitnessQuantity::LowerBound { axis, theta } => {
                check_register(rho, n_qubits)?;
                Ok(lower_bound(rho, &collective_spin(n_qubits, axis)?, theta)?.s_theta)
            }
            WitnessQuantity::AveragedAsymmetry { reading } => {
                Ok(averaged_asymmetry(rho, n_qubits)?.get(reading))
            }
            WitnessQuantity::AveragedLowerBound { theta, reading } => {
                Ok(averaged_bound(rho, n_qubits, theta)?.get(reading))
            }
        }
    }

    pub fn label(&self) -> String {
        match *self {
            WitnessQuantity::Asymmetry { axis } => format!("asymmetry_{}", axis.spin_label()),
            WitnessQuantity::LowerBound { axis, .. } => format!("bound_{}", axis.spin_label()),
            WitnessQuantity::AveragedAsymmetry { reading } => {
                format!("averaged_asymmetry_{}", reading.label())
            }
            WitnessQuantity::AveragedLowerBound { reading, .. } => {
                format!("averaged_bound_{}", reading.label())
            }
        }
    }
}

/// Fires when the quantity strictly exceeds `threshold`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Criterion {
    pub quantity: WitnessQuantity,
    pub threshold: f64,
}

pub const MONOTONE_SAMPLES: usize = 101;
pub const BISECTION_TOL: f64 = 1e-10;

/// Smallest family parameter p in [0, 1] at which `criterion` fires.
///
/// The criterion value must be nondecreasing in p; this is checked on a uniform grid first.
pub fn threshold_solve(family: StateFamily, criterion: &Criterion) -> Result<f64> {
    threshold_solve_with(family.n_qubits(), |p| family.state(p), criterion)
}

/// [`threshold_solve`] over an arbitrary parametric family of `n_qubits` states.
pub fn threshold_solve_with(
    n_qubits: usize,
    family: impl Fn(f64) -> Result<DensityMatrix>,
    criterion: &Criterion,
) -> Result<f64> {
    let value = |p: f64| -> Result<f64> { criterion.quantity.evaluate(&family(p)?, n_qubits) };
    let grid: Vec<f64> = (0..MONOTONE_SAMPLES)
        .map(|i| i as f64 / (MONOTONE_SAMPLES - 1) as f64)
        .collect();
    let values = grid.iter().map(|&p| value(p)).collect::<Result<Vec<_>>>()?;
    if let Some(i) = values.windows(2).position(|w| w[1] < w[0] - 1e-12) {
        return Err(Error::NonMonotone(grid[i + 1]));
    }
    let Some(first) = values.iter().position(|&v| v > criterion.threshold) else {
        return Err(Error::NotCrossed);
    };
    if first == 0 {
        return Ok(0.0);
    }
    let (mut lo, mut hi) = (grid[first - 1], grid[first]);
    while hi - lo > BISECTION_TOL {
        let mid = 0.5 * (lo + hi);
        if value(mid)? > criterion.threshold {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// One grid point of the Bell-diagonal table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Table1Row {
    pub p: f64,
    pub purity: f64,
    pub asymmetry: AxisAverage,
    pub bound: AxisAverage,
    pub asymmetry_witness: [bool; 3],
    pub bound_witness: [bool; 3],
}

/// Threshold p* for one criterion; `None` when it never fires on [0, 1].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThresholdEntry {
    pub criterion: Criterion,
    pub label: String,
    pub p_star: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Table1 {
    pub theta: f64,
    pub rows: Vec<Table1Row>,
    pub thresholds: Vec<ThresholdEntry>,
}

impl Table1 {
    pub fn threshold(&self, label: &str) -> Option<f64> {
        self.thresholds
            .iter()
            .find(|t| t.label == label)
            .and_then(|t| t.p_star)
    }
}

/// The criteria tabulated for the two-qubit Bell-diagonal probe at angle `theta`.
pub fn table1_criteria(theta: f64) -> Vec<Criterion> {
    let per_axis = k_separability_bound(2, 1).expect("N = 2, k = 1 is valid");
    let averaged = 2.0 / 6.0;
    let mut out = Vec::new();
    for axis in Axis::ALL {
        out.push(Criterion {
            quantity: WitnessQuantity::Asymmetry { axis },
            threshold: per_axis,
        });
        out.push(Criterion {
            quantity: WitnessQuantity::LowerBound { axis, theta },
            threshold: per_axis,
        });
    }
    for reading in [AveragedReading::Sum, AveragedReading::Mean] {
        out.push(Criterion {
            quantity: WitnessQuantity::AveragedAsymmetry { reading },
            threshold: averaged,
        });
        out.push(Criterion {
            quantity: WitnessQuantity::AveragedLowerBound { theta, reading },
            threshold: averaged,
        });
    }
    out
}

/// Sweeps the Bell-diagonal probe over `p_grid` and solves every tabulated threshold.
pub fn table1_reproduce(theta: f64, p_grid: &[f64]) -> Result<Table1> {
    check_theta(theta)?;
    let per_axis_bound = k_separability_bound(2, 1)?;
    let rows = p_grid
        .iter()
        .map(|&p| {
            let rho = StateFamily::BellDiagonal.state(p)?;
            let asymmetry = averaged_asymmetry(&rho, 2)?;
            let bound = averaged_bound(&rho, 2, theta)?;
            Ok(Table1Row {
                p,
                purity: rho.purity(),
                asymmetry,
                bound,
                asymmetry_witness: asymmetry.per_axis.map(|v| v > per_axis_bound),
                bound_witness: bound.per_axis.map(|v| v > per_axis_bound),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let thresholds = table1_criteria(theta)
        .into_iter()
        .map(|criterion| {
            let p_star = match threshold_solve(StateFamily::BellDiagonal, &criterion) {
                Ok(p) => Some(p),
                Err(Error::NotCrossed) => None,
                Err(e) => return Err(e),
            };
            Ok(ThresholdEntry {
                label: criterion.quantity.label(),
                criterion,
                p_star,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Table1 {
        theta,
        rows,
        thresholds,
    })
}
