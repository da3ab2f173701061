//! The swap operator on two copies of a register, and the controlled-swap interferometer that reads it out.

use crate::error::{Error, Result};
use crate::quantum::matrix::{
    c, ensure_same_dim, identity, pauli_z, permute_qubits, projector, tensor, tensor_all,
    trace_product, ComplexMatrix, DEFAULT_DIM_CAP, ONE,
};
use crate::quantum::probes::singlet;
use crate::quantum::{DensityMatrix, Observable};

fn check_dim(dim: usize) -> Result<()> {
    if dim > DEFAULT_DIM_CAP {
        return Err(Error::DimensionOverflow {
            dim,
            cap: DEFAULT_DIM_CAP,
        });
    }
    Ok(())
}

/// V|a⟩|b⟩ = |b⟩|a⟩ on two copies of a `copy_dim`-dimensional space.
pub fn swap_for_dim(copy_dim: usize) -> Result<ComplexMatrix> {
    let total = copy_dim.saturating_mul(copy_dim);
    check_dim(total)?;
    let mut v = ComplexMatrix::zeros(total, total);
    for a in 0..copy_dim {
        for b in 0..copy_dim {
            v[(b * copy_dim + a, a * copy_dim + b)] = ONE;
        }
    }
    Ok(v)
}

/// Swap of two `n`-qubit copies laid out as copy 1 then copy 2.
pub fn swap_operator(n_qubits_per_copy: usize) -> Result<Observable> {
    if n_qubits_per_copy == 0 {
        return Err(Error::ParameterOutOfRange {
            name: "qubits per copy",
            value: 0.0,
        });
    }
    let copy_dim = 1usize
        .checked_shl(n_qubits_per_copy as u32)
        .unwrap_or(usize::MAX);
    Observable::new(swap_for_dim(copy_dim)?)
}

/// Projector onto the singlet (|01⟩ − |10⟩)/√2.
pub fn singlet_projector() -> ComplexMatrix {
    projector(&singlet())
}

/// Embeds a two-qubit operator acting on qubits `a` and `b` of an `n`-qubit register.
pub fn embed_two_qubit(op: &ComplexMatrix, a: usize, b: usize, n: usize) -> Result<ComplexMatrix> {
    assert!(
        a != b && a < n && b < n,
        "invalid qubit pair ({a}, {b}) for {n} qubits"
    );
    check_dim(1 << n)?;
    let full = tensor(op, &identity(1 << (n - 2)))?;
    // Input order: a, b, then the remaining qubits ascending.
    let mut input: Vec<usize> = vec![a, b];
    input.extend((0..n).filter(|&q| q != a && q != b));
    let mut order = vec![0; n];
    for (pos, &q) in input.iter().enumerate() {
        order[q] = pos;
    }
    Ok(permute_qubits(&full, &order))
}

/// ⊗ᵢ V_{AᵢAᵢ'}, built pair by pair and reordered into the copy-1/copy-2 layout.
pub fn factorized_swap(n_qubits_per_copy: usize) -> Result<ComplexMatrix> {
    let n = n_qubits_per_copy;
    check_dim(1 << (2 * n))?;
    let pair = identity(4) - singlet_projector().scale(2.0);
    let pairs: Vec<ComplexMatrix> = (0..n).map(|_| pair.clone()).collect();
    let interleaved = tensor_all(&pairs)?;
    // Interleaved position 2i is qubit i of copy 1, 2i + 1 is qubit i of copy 2.
    let order: Vec<usize> = (0..2 * n)
        .map(|q| if q < n { 2 * q } else { 2 * (q - n) + 1 })
        .collect();
    Ok(permute_qubits(&interleaved, &order))
}

/// Output polarization ⟨σ_z⟩ of an ancilla run through H · controlled-V · H.
///
/// The ancilla starts in (I + r σ_z)/2 with r = `ancilla_polarization_in`; the result is
/// r · Tr{V(ρ ⊗ σ)} = r · Tr{ρσ}.
pub fn controlled_swap_interferometry(
    rho: &DensityMatrix,
    sigma: &DensityMatrix,
    ancilla_polarization_in: f64,
) -> Result<f64> {
    if !(-1.0..=1.0).contains(&ancilla_polarization_in) {
        return Err(Error::ParameterOutOfRange {
            name: "ancilla polarization",
            value: ancilla_polarization_in,
        });
    }
    ensure_same_dim(rho.matrix(), sigma.matrix())?;
    let d = rho.dim();
    let register = d * d;
    check_dim(2 * register)?;

    let v = swap_for_dim(d)?;
    let p0 = ComplexMatrix::from_row_slice(2, 2, &[ONE, c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
    let p1 = identity(2) - &p0;
    let cswap = tensor(&p0, &identity(register))? + tensor(&p1, &v)?;
    let h = ComplexMatrix::from_row_slice(2, 2, &[ONE, ONE, ONE, -ONE]).unscale(2f64.sqrt());
    let h_full = tensor(&h, &identity(register))?;
    let circuit = &h_full * cswap * &h_full;

    let ancilla = (identity(2) + pauli_z().scale(ancilla_polarization_in)).scale(0.5);
    let input = tensor(&ancilla, &tensor(rho.matrix(), sigma.matrix())?)?;
    let output = &circuit * input * circuit.adjoint();
    let z = tensor(&pauli_z(), &identity(register))?;
    Ok(trace_product(&output, &z).re)
}
