//! Pauli strings and collective spin operators.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::matrix::{
    identity, pauli_x, pauli_y, pauli_z, tensor_all, ComplexMatrix, DEFAULT_DIM_CAP,
};
use super::state::Observable;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub fn matrix(self) -> ComplexMatrix {
        match self {
            Pauli::I => identity(2),
            Pauli::X => pauli_x(),
            Pauli::Y => pauli_y(),
            Pauli::Z => pauli_z(),
        }
    }

    fn letter(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }
}

/// Spatial axis of a spin operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn pauli(self) -> Pauli {
        match self {
            Axis::X => Pauli::X,
            Axis::Y => Pauli::Y,
            Axis::Z => Pauli::Z,
        }
    }

    /// `Jx`, `Jy`, `Jz`.
    pub fn spin_label(self) -> &'static str {
        match self {
            Axis::X => "Jx",
            Axis::Y => "Jy",
            Axis::Z => "Jz",
        }
    }
}

impl FromStr for Axis {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "x" => Ok(Axis::X),
            "y" => Ok(Axis::Y),
            "z" => Ok(Axis::Z),
            _ => Err(format!("unknown axis `{s}`")),
        }
    }
}

/// Tensor product of single-qubit Paulis; qubit 0 is the leftmost factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliString {
    pub letters: Vec<Pauli>,
}

impl PauliString {
    pub fn new(letters: Vec<Pauli>) -> Self {
        Self { letters }
    }

    /// A single Pauli at `site` of an `n`-qubit register, identities elsewhere.
    pub fn single(n: usize, site: usize, p: Pauli) -> Self {
        let mut letters = vec![Pauli::I; n];
        letters[site] = p;
        Self { letters }
    }

    pub fn n_qubits(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.iter().all(|&p| p == Pauli::I)
    }

    pub fn matrix(&self) -> Result<ComplexMatrix> {
        let n = self.letters.len();
        check_register(n)?;
        let factors: Vec<ComplexMatrix> = self.letters.iter().map(|p| p.matrix()).collect();
        tensor_all(&factors)
    }

    pub fn observable(&self) -> Result<Observable> {
        Observable::new(self.matrix()?)
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.letters {
            write!(f, "{}", p.letter())?;
        }
        Ok(())
    }
}

impl FromStr for PauliString {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        if s.is_empty() {
            return Err("empty Pauli string".into());
        }
        let letters = s
            .chars()
            .map(|ch| match ch.to_ascii_uppercase() {
                'I' => Ok(Pauli::I),
                'X' => Ok(Pauli::X),
                'Y' => Ok(Pauli::Y),
                'Z' => Ok(Pauli::Z),
                other => Err(format!("`{other}` is not a Pauli letter")),
            })
            .collect::<std::result::Result<_, _>>()?;
        Ok(Self { letters })
    }
}

fn check_register(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::ParameterOutOfRange {
            name: "qubit count",
            value: 0.0,
        });
    }
    let dim = 1usize.checked_shl(n as u32).unwrap_or(usize::MAX);
    if n >= usize::BITS as usize || dim > DEFAULT_DIM_CAP {
        return Err(Error::DimensionOverflow {
            dim,
            cap: DEFAULT_DIM_CAP,
        });
    }
    Ok(())
}

/// J_axis = Σᵢ σ_axis⁽ⁱ⁾ / 2 on `n` qubits.
pub fn collective_spin(n: usize, axis: Axis) -> Result<Observable> {
    check_register(n)?;
    let dim = 1 << n;
    let mut j = ComplexMatrix::zeros(dim, dim);
    for site in 0..n {
        j += PauliString::single(n, site, axis.pauli()).matrix()?;
    }
    Observable::new(j.scale(0.5))
}
