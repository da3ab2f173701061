use nalgebra::SymmetricEigen;
use num_complex::Complex64;

use super::matrix::{ensure_square, hermitian_part, ComplexMatrix};
use crate::error::{Error, Result};

/// Eigenvalues (ascending) and the unitary whose columns are the matching eigenvectors.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

impl SpectralDecomposition {
    /// Diagonalizes a Hermitian matrix. Only the Hermitian part of `m` is used.
    pub fn of(m: &ComplexMatrix) -> Result<Self> {
        let dim = ensure_square(m)?;
        let max_iter = 1000 * dim.max(8);
        let eig = SymmetricEigen::try_new(hermitian_part(m), f64::EPSILON, max_iter)
            .ok_or(Error::ConvergenceFailure(dim))?;

        let mut order: Vec<usize> = (0..dim).collect();
        order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));

        let eigenvalues = order.iter().map(|&k| eig.eigenvalues[k]).collect();
        let eigenvectors =
            ComplexMatrix::from_fn(dim, dim, |r, col| eig.eigenvectors[(r, order[col])]);
        Ok(Self {
            eigenvalues,
            eigenvectors,
        })
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    /// Column `k` as a vector.
    pub fn eigenvector(&self, k: usize) -> Vec<Complex64> {
        self.eigenvectors.column(k).iter().copied().collect()
    }

    /// Σ g(λ_k) |k⟩⟨k|.
    pub fn apply(&self, g: impl Fn(f64) -> f64) -> ComplexMatrix {
        let v = &self.eigenvectors;
        let mut scaled = v.clone();
        for (k, &lambda) in self.eigenvalues.iter().enumerate() {
            let w = g(lambda);
            scaled.column_mut(k).iter_mut().for_each(|z| *z *= w);
        }
        scaled * v.adjoint()
    }

    /// Σ g(λ_k) |k⟩⟨k| for complex-valued g.
    pub fn apply_complex(&self, g: impl Fn(f64) -> Complex64) -> ComplexMatrix {
        let v = &self.eigenvectors;
        let mut scaled = v.clone();
        for (k, &lambda) in self.eigenvalues.iter().enumerate() {
            let w = g(lambda);
            scaled.column_mut(k).iter_mut().for_each(|z| *z *= w);
        }
        scaled * v.adjoint()
    }

    pub fn reconstruct(&self) -> ComplexMatrix {
        self.apply(|x| x)
    }

    /// Matrix elements ⟨k|op|l⟩ in this eigenbasis.
    pub fn in_eigenbasis(&self, op: &ComplexMatrix) -> ComplexMatrix {
        self.eigenvectors.adjoint() * op * &self.eigenvectors
    }
}
