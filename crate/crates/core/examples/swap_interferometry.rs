//! The swap operator and the controlled-swap circuit that reads out Tr{ρσ}.

use qrg::measurement::swap::swap_for_dim;
use qrg::measurement::{controlled_swap_interferometry, factorized_swap, swap_operator};
use qrg::quantum::{bell_diagonal_probe, collective_spin, evolve_phase, werner_state, Axis};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let v = swap_operator(2)?;
    let same = v.matrix() == &factorized_swap(2)?;
    println!("two-qubit swap equals the product of pair swaps: {same}");
    println!(
        "swap on two qutrits is {}x{}",
        swap_for_dim(3)?.nrows(),
        swap_for_dim(3)?.ncols()
    );

    let rho = bell_diagonal_probe(0.7)?;
    let sigma = werner_state(0.4)?;
    for r in [1.0, 0.5] {
        let out = controlled_swap_interferometry(&rho, &sigma, r)?;
        println!(
            "ancilla polarization {r}: output {out:.6} (r·Tr ρσ = {:.6})",
            r * rho.overlap(&sigma)?
        );
    }

    let jz = collective_spin(2, Axis::Z)?;
    let rotated = evolve_phase(&rho, &jz, 0.5)?;
    let via_swap = rho.tensor(&rotated)?.expectation(v.matrix())?;
    println!(
        "Tr V(ρ ⊗ UρU†) = {via_swap:.6}, direct overlap {:.6}",
        rho.overlap(&rotated)?
    );
    Ok(())
}
