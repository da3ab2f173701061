//! Random states, observables and unitaries for sweeps, property tests and examples.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::quantum::matrix::{c, ComplexMatrix};
use crate::quantum::{DensityMatrix, Observable};

fn gaussian(rng: &mut impl Rng) -> Complex64 {
    c(StandardNormal.sample(rng), StandardNormal.sample(rng))
}

fn ginibre(rng: &mut impl Rng, rows: usize, cols: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |_, _| gaussian(rng))
}

/// Haar-random unit vector.
pub fn random_vector(rng: &mut impl Rng, dim: usize) -> Vec<Complex64> {
    let v: Vec<Complex64> = (0..dim).map(|_| gaussian(rng)).collect();
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.into_iter().map(|z| z / norm).collect()
}

pub fn random_pure_state(rng: &mut impl Rng, dim: usize) -> DensityMatrix {
    DensityMatrix::pure(&random_vector(rng, dim)).expect("nonzero vector")
}

/// G G† / Tr(G G†) for a `dim × rank` Ginibre matrix G.
pub fn random_mixed_state(rng: &mut impl Rng, dim: usize, rank: usize) -> DensityMatrix {
    let g = ginibre(rng, dim, rank.max(1));
    let m = &g * g.adjoint();
    let tr = m.trace().re;
    DensityMatrix::from_trusted(m.unscale(tr))
}

/// Full-rank mixed state, or of random rank in `1..=dim` when `random_rank` is set.
pub fn random_state(rng: &mut impl Rng, dim: usize, random_rank: bool) -> DensityMatrix {
    let rank = if random_rank {
        rng.random_range(1..=dim)
    } else {
        dim
    };
    random_mixed_state(rng, dim, rank)
}

/// Hermitian matrix with Gaussian entries (GUE, unnormalized).
pub fn random_observable(rng: &mut impl Rng, dim: usize) -> Observable {
    let g = ginibre(rng, dim, dim);
    Observable::new((&g + g.adjoint()).scale(0.5)).expect("hermitian by construction")
}

/// Haar-random unitary from the QR decomposition of a Ginibre matrix.
pub fn random_unitary(rng: &mut impl Rng, dim: usize) -> ComplexMatrix {
    let qr = ginibre(rng, dim, dim).qr();
    let (mut q, r) = qr.unpack();
    for k in 0..dim {
        let d = r[(k, k)];
        let phase = if d.norm() > 0.0 {
            d / d.norm()
        } else {
            c(1.0, 0.0)
        };
        q.column_mut(k).iter_mut().for_each(|z| *z *= phase);
    }
    q
}

/// Random three-qubit X-state: arbitrary diagonal, anti-diagonal pairs bounded by the 2×2 PSD condition.
pub fn random_x_state(rng: &mut impl Rng) -> DensityMatrix {
    let weights: Vec<f64> = (0..8).map(|_| rng.random::<f64>() + 1e-3).collect();
    let total: f64 = weights.iter().sum();
    let a: Vec<f64> = weights.iter().map(|w| w / total).collect();
    let mut m = ComplexMatrix::zeros(8, 8);
    for i in 0..8 {
        m[(i, i)] = c(a[i], 0.0);
    }
    for i in 0..4 {
        let j = 7 - i;
        let radius = rng.random::<f64>() * (a[i] * a[j]).sqrt();
        let z = Complex64::from_polar(radius, rng.random_range(0.0..std::f64::consts::TAU));
        m[(i, j)] = z;
        m[(j, i)] = z.conj();
    }
    DensityMatrix::new(m).expect("X-state blocks are PSD by construction")
}
