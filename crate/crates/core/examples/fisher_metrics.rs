//! Variance, SLD Fisher information and the monotone-metric family on a noisy qubit.

use qrg::metrics::{asymmetry_sld, monotone_metric_norm, skew_information, variance, CmFunction};
use qrg::quantum::matrix::pauli_y;
use qrg::quantum::{plus_noise_probe, Observable};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sy = Observable::new(pauli_y())?;
    println!(
        "{:>5} {:>9} {:>9} {:>9} {:>9} {:>9}",
        "p", "var", "A", "QFI", "skew", "WY"
    );
    for k in 0..=10 {
        let p = f64::from(k) / 10.0;
        let rho = plus_noise_probe(p)?;
        let a = asymmetry_sld(&rho, &sy)?;
        println!(
            "{p:5.2} {:9.5} {:9.5} {:9.5} {:9.5} {:9.5}",
            variance(&rho, &sy)?,
            a.asymmetry(),
            a.qfi_standard(),
            skew_information(&rho, &sy)?,
            monotone_metric_norm(&CmFunction::wigner_yanase(), &rho, &sy)?,
        );
    }

    // Every catalogued metric sits between its extremes on the same state.
    let rho = plus_noise_probe(0.6)?;
    for f in CmFunction::catalog() {
        println!(
            "{:>16}: {:.6}",
            f.name(),
            monotone_metric_norm(&f, &rho, &sy)?
        );
    }
    Ok(())
}
