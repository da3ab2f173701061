//! Classical Fisher information of concrete measurements against the quantum limit.

use qrg::metrics::{asymmetry_sld, classical_fisher_povm, cramer_rao, Povm};
use qrg::quantum::matrix::{pauli_x, pauli_z};
use qrg::quantum::{plus_noise_probe, Observable};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = 0.9;
    let rho = plus_noise_probe(p)?;
    let h = Observable::new(pauli_z().scale(0.5))?;
    let qfi = asymmetry_sld(&rho, &h)?.qfi_standard();
    println!("quantum Fisher information: {qfi:.6}");

    let povms = [
        (
            "sigma_z basis",
            Povm::eigenbasis(&Observable::new(pauli_z())?)?,
        ),
        (
            "sigma_x basis",
            Povm::eigenbasis(&Observable::new(pauli_x())?)?,
        ),
    ];
    for theta in [0.0, 0.4, 0.8, std::f64::consts::FRAC_PI_2] {
        for (name, povm) in &povms {
            let f = classical_fisher_povm(&rho, &h, theta, povm)?;
            let floor = cramer_rao(f, 1000)
                .map(|v| format!("{v:.3e}"))
                .unwrap_or_else(|e| e.to_string());
            println!("theta {theta:.3} {name}: F = {f:.6}, Var floor (n = 1000) {floor}");
        }
    }
    println!(
        "quantum Cramér–Rao floor (n = 1000): {:.3e}",
        cramer_rao(qfi, 1000)?
    );
    Ok(())
}
