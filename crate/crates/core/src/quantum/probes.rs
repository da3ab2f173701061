//! The probe-state families used throughout the crate.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use super::matrix::{c, ZERO};
use super::state::DensityMatrix;
use crate::error::{Error, Result};

/// (|00⟩ + |11⟩)/√2.
pub fn phi_plus() -> Vec<Complex64> {
    vec![c(FRAC_1_SQRT_2, 0.0), ZERO, ZERO, c(FRAC_1_SQRT_2, 0.0)]
}

/// (|01⟩ − |10⟩)/√2.
pub fn singlet() -> Vec<Complex64> {
    vec![ZERO, c(FRAC_1_SQRT_2, 0.0), c(-FRAC_1_SQRT_2, 0.0), ZERO]
}

/// (|0⟩ + |1⟩)/√2.
pub fn plus() -> Vec<Complex64> {
    vec![c(FRAC_1_SQRT_2, 0.0), c(FRAC_1_SQRT_2, 0.0)]
}

/// (|0…0⟩ + |1…1⟩)/√2 on `n` qubits.
pub fn ghz_vector(n: usize) -> Vec<Complex64> {
    let dim = 1 << n;
    let mut v = vec![ZERO; dim];
    v[0] = c(FRAC_1_SQRT_2, 0.0);
    v[dim - 1] = c(FRAC_1_SQRT_2, 0.0);
    v
}

fn check_p(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::ParameterOutOfRange {
            name: "p",
            value: p,
        });
    }
    Ok(())
}

/// p|Φ⁺⟩⟨Φ⁺| + (1 − p) I₄/4.
pub fn bell_diagonal_probe(p: f64) -> Result<DensityMatrix> {
    check_p(p)?;
    let bell = DensityMatrix::pure(&phi_plus())?;
    DensityMatrix::mix(p, &bell, &DensityMatrix::maximally_mixed(4))
}

/// (1 − p) I₂/2 + p|+⟩⟨+|.
pub fn plus_noise_probe(p: f64) -> Result<DensityMatrix> {
    check_p(p)?;
    let plus = DensityMatrix::pure(&plus())?;
    DensityMatrix::mix(p, &plus, &DensityMatrix::maximally_mixed(2))
}

/// p|ψ⁻⟩⟨ψ⁻| + (1 − p) I₄/4 with the singlet ψ⁻.
pub fn werner_state(p: f64) -> Result<DensityMatrix> {
    check_p(p)?;
    let s = DensityMatrix::pure(&singlet())?;
    DensityMatrix::mix(p, &s, &DensityMatrix::maximally_mixed(4))
}

pub fn ghz_state(n: usize) -> Result<DensityMatrix> {
    if n == 0 || n > 8 {
        return Err(Error::ParameterOutOfRange {
            name: "qubit count",
            value: n as f64,
        });
    }
    DensityMatrix::pure(&ghz_vector(n))
}

/// One-parameter state families that threshold searches and sweeps run over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StateFamily {
    BellDiagonal,
    PlusNoise,
    Werner,
}

impl StateFamily {
    pub fn state(self, p: f64) -> Result<DensityMatrix> {
        match self {
            StateFamily::BellDiagonal => bell_diagonal_probe(p),
            StateFamily::PlusNoise => plus_noise_probe(p),
            StateFamily::Werner => werner_state(p),
        }
    }

    pub fn n_qubits(self) -> usize {
        match self {
            StateFamily::PlusNoise => 1,
            StateFamily::BellDiagonal | StateFamily::Werner => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            StateFamily::BellDiagonal => "bell-diagonal",
            StateFamily::PlusNoise => "plus-noise",
            StateFamily::Werner => "werner",
        }
    }
}

impl fmt::Display for StateFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StateFamily {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "bell-diagonal" => Ok(StateFamily::BellDiagonal),
            "plus-noise" => Ok(StateFamily::PlusNoise),
            "werner" => Ok(StateFamily::Werner),
            _ => Err(format!("unknown state family `{s}`")),
        }
    }
}
