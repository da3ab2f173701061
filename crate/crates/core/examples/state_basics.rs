//! Build, validate and evolve density matrices.

use qrg::quantum::matrix::{c, identity};
use qrg::quantum::{
    bell_diagonal_probe, collective_spin, evolve_phase, ghz_state, validate_state, Axis,
    DensityMatrix,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let bell = bell_diagonal_probe(0.8)?;
    println!("Bell-diagonal p = 0.8: purity {:.6}", bell.purity());
    println!("  spectrum {:?}", bell.spectrum()?.eigenvalues);

    let ghz = ghz_state(3)?;
    let jz = collective_spin(3, Axis::Z)?;
    let rotated = evolve_phase(&ghz, &jz, std::f64::consts::FRAC_PI_6)?;
    println!(
        "GHZ(3) overlap with e^(-i Jz π/6) copy: {:.6}",
        ghz.overlap(&rotated)?
    );

    let plus = DensityMatrix::pure(&[c(1.0, 0.0), c(1.0, 0.0)])?;
    println!(
        "|+><+| expectation of X: {:.3}",
        plus.expectation(&qrg::quantum::matrix::pauli_x())?
    );

    // Validation reports what is wrong with a candidate matrix.
    let not_normalized = identity(2);
    match validate_state(not_normalized) {
        Ok(_) => println!("unexpectedly valid"),
        Err(e) => println!("rejected 2x2 identity: {e}"),
    }

    let json = serde_json::to_string(&bell.to_json())?;
    println!("JSON form: {json}");
    Ok(())
}
