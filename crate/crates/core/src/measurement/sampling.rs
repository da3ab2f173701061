//! Born-rule sampling of projective measurements.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Binomial, Distribution};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quantum::matrix::{
    hermiticity_defect, identity, max_abs_diff, trace_product, ComplexMatrix,
};
use crate::quantum::DensityMatrix;

pub const BASIS_TOL: f64 = 1e-9;

/// Outcome counts of a seeded finite-shot run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShotSample {
    #[serde(rename = "outcomes")]
    pub outcome_counts: BTreeMap<String, u64>,
    pub shots: u64,
    pub seed: u64,
}

impl ShotSample {
    pub fn count(&self, label: &str) -> u64 {
        self.outcome_counts.get(label).copied().unwrap_or(0)
    }

    pub fn frequency(&self, label: &str) -> f64 {
        self.count(label) as f64 / self.shots as f64
    }
}

/// A value with its one-sigma statistical error; `shots == 0` marks an exact evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EstimateWithError {
    pub value: f64,
    pub std_error: f64,
    pub shots: u64,
}

impl EstimateWithError {
    pub fn exact(value: f64) -> Self {
        Self {
            value,
            std_error: 0.0,
            shots: 0,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.shots == 0
    }
}

/// Orthogonal projectors summing to the identity, each with an outcome label.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectiveMeasurement {
    projectors: Vec<ComplexMatrix>,
    labels: Vec<String>,
}

impl ProjectiveMeasurement {
    pub fn new(projectors: Vec<ComplexMatrix>, labels: Vec<String>) -> Result<Self> {
        let Some(first) = projectors.first() else {
            return Err(Error::InvalidBasis("no projectors".into()));
        };
        if labels.len() != projectors.len() {
            return Err(Error::InvalidBasis(format!(
                "{} labels for {} projectors",
                labels.len(),
                projectors.len()
            )));
        }
        let dim = first.nrows();
        let mut sum = ComplexMatrix::zeros(dim, dim);
        for (x, p) in projectors.iter().enumerate() {
            if p.nrows() != dim || p.ncols() != dim {
                return Err(Error::InvalidBasis(format!(
                    "projector {x} has the wrong shape"
                )));
            }
            let (defect, ..) = hermiticity_defect(p);
            if defect > BASIS_TOL || max_abs_diff(&(p * p), p) > BASIS_TOL {
                return Err(Error::InvalidBasis(format!(
                    "element {x} is not a projector"
                )));
            }
            for (y, q) in projectors.iter().enumerate().skip(x + 1) {
                if (p * q).iter().any(|z| z.norm() > BASIS_TOL) {
                    return Err(Error::InvalidBasis(format!(
                        "projectors {x} and {y} are not orthogonal"
                    )));
                }
            }
            sum += p;
        }
        if max_abs_diff(&sum, &identity(dim)) > BASIS_TOL {
            return Err(Error::InvalidBasis(
                "projectors do not sum to the identity".into(),
            ));
        }
        Ok(Self { projectors, labels })
    }

    /// Outcome labels are the projector indices.
    pub fn indexed(projectors: Vec<ComplexMatrix>) -> Result<Self> {
        let labels = (0..projectors.len()).map(|i| i.to_string()).collect();
        Self::new(projectors, labels)
    }

    /// Rank-one projectors onto the columns of a unitary.
    pub fn from_basis(basis: &ComplexMatrix) -> Result<Self> {
        let projectors = basis.column_iter().map(|col| col * col.adjoint()).collect();
        Self::indexed(projectors)
    }

    pub fn dim(&self) -> usize {
        self.projectors[0].nrows()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn projectors(&self) -> &[ComplexMatrix] {
        &self.projectors
    }

    /// Tr{ρΠ_x}, with round-off negatives clipped and the vector renormalized.
    pub fn probabilities(&self, rho: &DensityMatrix) -> Result<Vec<f64>> {
        if rho.dim() != self.dim() {
            return Err(Error::DimensionMismatch(rho.dim(), self.dim()));
        }
        let raw: Vec<f64> = self
            .projectors
            .iter()
            .map(|p| trace_product(rho.matrix(), p).re.max(0.0))
            .collect();
        let total: f64 = raw.iter().sum();
        Ok(raw.into_iter().map(|p| p / total).collect())
    }
}

/// The generator behind every shot run: ChaCha8 keyed by `seed`, on an explicit `stream`.
pub fn shot_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Multinomial draw of `shots` outcomes with Born probabilities.
pub fn sample_shots(
    rho: &DensityMatrix,
    measurement: &ProjectiveMeasurement,
    shots: u64,
    seed: u64,
) -> Result<ShotSample> {
    sample_shots_on_stream(rho, measurement, shots, seed, 0)
}

/// [`sample_shots`] on an independent RNG stream, for runs that need several draws per seed.
pub fn sample_shots_on_stream(
    rho: &DensityMatrix,
    measurement: &ProjectiveMeasurement,
    shots: u64,
    seed: u64,
    stream: u64,
) -> Result<ShotSample> {
    if shots == 0 {
        return Err(Error::InvalidShots(shots));
    }
    let probs = measurement.probabilities(rho)?;
    let mut rng = shot_rng(seed, stream);
    let mut remaining = shots;
    let mut mass = 1.0;
    let mut outcome_counts = BTreeMap::new();
    let last = probs.len() - 1;
    for (x, (&p, label)) in probs.iter().zip(measurement.labels()).enumerate() {
        let k = if x == last || remaining == 0 {
            remaining
        } else {
            let q = if mass > 0.0 {
                (p / mass).clamp(0.0, 1.0)
            } else {
                0.0
            };
            Binomial::new(remaining, q)
                .expect("probability clamped to [0, 1]")
                .sample(&mut rng)
        };
        remaining -= k;
        mass -= p;
        outcome_counts.insert(label.clone(), k);
    }
    Ok(ShotSample {
        outcome_counts,
        shots,
        seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::matrix::{c, projector};

    fn computational() -> ProjectiveMeasurement {
        ProjectiveMeasurement::from_basis(&identity(2)).unwrap()
    }

    #[test]
    fn eigenstate_lands_on_one_outcome() {
        let rho = DensityMatrix::pure(&[c(0.0, 0.0), c(1.0, 0.0)]).unwrap();
        let s = sample_shots(&rho, &computational(), 1000, 3).unwrap();
        assert_eq!(s.count("0"), 0);
        assert_eq!(s.count("1"), 1000);
    }

    #[test]
    fn maximally_mixed_frequencies_concentrate() {
        let s = sample_shots(
            &DensityMatrix::maximally_mixed(2),
            &computational(),
            1_000_000,
            42,
        )
        .unwrap();
        assert!((s.frequency("0") - 0.5).abs() < 5e-3);
        assert!((s.frequency("1") - 0.5).abs() < 5e-3);
        assert_eq!(s.count("0") + s.count("1"), 1_000_000);
    }

    #[test]
    fn fixed_seed_is_reproducible() {
        let rho = DensityMatrix::pure(&[c(0.6, 0.0), c(0.0, 0.8)]).unwrap();
        let a = sample_shots(&rho, &computational(), 12345, 9).unwrap();
        let b = sample_shots(&rho, &computational(), 12345, 9).unwrap();
        assert_eq!(a, b);
        let other = sample_shots_on_stream(&rho, &computational(), 12345, 9, 1).unwrap();
        assert_ne!(a, other);
    }

    #[test]
    fn shot_sample_json_shape() {
        let s = sample_shots(&DensityMatrix::maximally_mixed(2), &computational(), 10, 1).unwrap();
        let v: serde_json::Value = serde_json::to_value(&s).unwrap();
        assert_eq!(v["shots"], 10);
        assert_eq!(v["seed"], 1);
        assert!(v["outcomes"].is_object());
        let back: ShotSample = serde_json::from_value(v).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn invalid_inputs() {
        let rho = DensityMatrix::maximally_mixed(2);
        assert_eq!(
            sample_shots(&rho, &computational(), 0, 1),
            Err(Error::InvalidShots(0))
        );
        let half = identity(2).scale(0.5);
        assert!(matches!(
            ProjectiveMeasurement::indexed(vec![half.clone(), half]),
            Err(Error::InvalidBasis(_))
        ));
        let p0 = projector(&[c(1.0, 0.0), c(0.0, 0.0)]);
        let plus = projector(&[c(1.0, 0.0), c(1.0, 0.0)]);
        assert!(matches!(
            ProjectiveMeasurement::indexed(vec![p0.clone(), plus]),
            Err(Error::InvalidBasis(_))
        ));
        assert!(matches!(
            ProjectiveMeasurement::indexed(vec![p0]),
            Err(Error::InvalidBasis(_))
        ));
        let four = ProjectiveMeasurement::from_basis(&identity(4)).unwrap();
        assert_eq!(
            sample_shots(&rho, &four, 10, 1),
            Err(Error::DimensionMismatch(2, 4))
        );
    }
}
