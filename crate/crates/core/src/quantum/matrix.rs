//! Dense complex matrices and the small set of operations every other module leans on.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Square dense complex matrix. All operators in the crate are stored this way.
pub type ComplexMatrix = DMatrix<Complex64>;

/// Largest Hilbert-space dimension any constructor will build.
pub const DEFAULT_DIM_CAP: usize = 256;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const I: Complex64 = Complex64::new(0.0, 1.0);

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn identity(dim: usize) -> ComplexMatrix {
    ComplexMatrix::identity(dim, dim)
}

/// Builds a matrix from row-major real and imaginary parts.
pub fn from_parts(re: &[Vec<f64>], im: &[Vec<f64>]) -> Result<ComplexMatrix> {
    let rows = re.len();
    if im.len() != rows {
        return Err(Error::DimensionMismatch(rows, im.len()));
    }
    for (r, i) in re.iter().zip(im) {
        if r.len() != rows {
            return Err(Error::NotSquare {
                rows,
                cols: r.len(),
            });
        }
        if i.len() != rows {
            return Err(Error::NotSquare {
                rows,
                cols: i.len(),
            });
        }
    }
    Ok(ComplexMatrix::from_fn(rows, rows, |r, col| {
        c(re[r][col], im[r][col])
    }))
}

pub fn ensure_square(m: &ComplexMatrix) -> Result<usize> {
    if m.nrows() != m.ncols() || m.nrows() == 0 {
        return Err(Error::NotSquare {
            rows: m.nrows(),
            cols: m.ncols(),
        });
    }
    Ok(m.nrows())
}

pub fn ensure_same_dim(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<()> {
    if a.nrows() != b.nrows() {
        return Err(Error::DimensionMismatch(a.nrows(), b.nrows()));
    }
    Ok(())
}

pub fn trace(m: &ComplexMatrix) -> Complex64 {
    m.diagonal().iter().sum()
}

/// Tr(A B) without forming the product.
pub fn trace_product(a: &ComplexMatrix, b: &ComplexMatrix) -> Complex64 {
    let n = a.nrows();
    let mut acc = ZERO;
    for i in 0..n {
        for k in 0..n {
            acc += a[(i, k)] * b[(k, i)];
        }
    }
    acc
}

pub fn commutator(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    a * b - b * a
}

/// Largest entrywise modulus of `a - b`.
pub fn max_abs_diff(a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Largest deviation from Hermiticity and the entry where it occurs.
pub fn hermiticity_defect(m: &ComplexMatrix) -> (f64, usize, usize) {
    let n = m.nrows();
    let mut worst = (0.0, 0, 0);
    for r in 0..n {
        for col in r..n {
            let d = (m[(r, col)] - m[(col, r)].conj()).norm();
            if d > worst.0 {
                worst = (d, r, col);
            }
        }
    }
    worst
}

pub fn ensure_hermitian(m: &ComplexMatrix, tol: f64) -> Result<()> {
    let (deviation, row, col) = hermiticity_defect(m);
    if deviation > tol {
        return Err(Error::NotHermitian {
            deviation,
            row,
            col,
        });
    }
    Ok(())
}

/// (M + M†)/2.
pub fn hermitian_part(m: &ComplexMatrix) -> ComplexMatrix {
    (m + m.adjoint()).scale(0.5)
}

/// Kronecker product `a ⊗ b`, refusing to build anything larger than [`DEFAULT_DIM_CAP`].
pub fn tensor(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    tensor_with_cap(a, b, DEFAULT_DIM_CAP)
}

pub fn tensor_with_cap(a: &ComplexMatrix, b: &ComplexMatrix, cap: usize) -> Result<ComplexMatrix> {
    let dim = a.nrows() * b.nrows();
    if dim > cap {
        return Err(Error::DimensionOverflow { dim, cap });
    }
    Ok(a.kronecker(b))
}

/// Tensor product of a list of factors, left to right.
pub fn tensor_all<'a>(
    factors: impl IntoIterator<Item = &'a ComplexMatrix>,
) -> Result<ComplexMatrix> {
    let mut acc = identity(1);
    for f in factors {
        acc = tensor(&acc, f)?;
    }
    Ok(acc)
}

/// Outer product |u⟩⟨v|.
pub fn outer(u: &[Complex64], v: &[Complex64]) -> ComplexMatrix {
    ComplexMatrix::from_fn(u.len(), v.len(), |r, col| u[r] * v[col].conj())
}

/// Projector onto the (not necessarily normalized) vector `v`.
pub fn projector(v: &[Complex64]) -> ComplexMatrix {
    let norm2: f64 = v.iter().map(|z| z.norm_sqr()).sum();
    outer(v, v).unscale(norm2)
}

/// Number of qubits if `dim` is a power of two.
pub fn qubit_count(dim: usize) -> Option<usize> {
    if dim.is_power_of_two() {
        Some(dim.trailing_zeros() as usize)
    } else {
        None
    }
}

/// Reorders the qubits of an operator on `n` qubits.
///
/// Qubit 0 is the most significant bit of the computational-basis index. Output qubit `q`
/// carries input qubit `order[q]`.
pub fn permute_qubits(m: &ComplexMatrix, order: &[usize]) -> ComplexMatrix {
    let n = order.len();
    let dim = 1usize << n;
    assert_eq!(m.nrows(), dim, "operator does not act on {n} qubits");
    let map = |idx: usize| -> usize {
        let mut out = 0;
        for (q, &src) in order.iter().enumerate() {
            let bit = (idx >> (n - 1 - src)) & 1;
            out |= bit << (n - 1 - q);
        }
        out
    };
    let targets: Vec<usize> = (0..dim).map(map).collect();
    let mut res = ComplexMatrix::zeros(dim, dim);
    for r in 0..dim {
        for col in 0..dim {
            res[(targets[r], targets[col])] = m[(r, col)];
        }
    }
    res
}

pub fn pauli_x() -> ComplexMatrix {
    ComplexMatrix::from_row_slice(2, 2, &[ZERO, ONE, ONE, ZERO])
}

pub fn pauli_y() -> ComplexMatrix {
    ComplexMatrix::from_row_slice(2, 2, &[ZERO, -I, I, ZERO])
}

pub fn pauli_z() -> ComplexMatrix {
    ComplexMatrix::from_row_slice(2, 2, &[ONE, ZERO, ZERO, -ONE])
}
