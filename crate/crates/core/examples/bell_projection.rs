//! Purity and rotated overlap from singlet projections on two copies, exact and with shots.

use qrg::measurement::{bell_projection_estimate, EstimationMode};
use qrg::quantum::{bell_diagonal_probe, collective_spin, Axis};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let theta = std::f64::consts::FRAC_PI_6;
    let jx = collective_spin(2, Axis::X)?;
    let rho = bell_diagonal_probe(0.8)?;

    let exact = bell_projection_estimate(&rho, theta, &jx, EstimationMode::Analytic)?;
    println!(
        "exact:  purity {:.6}, overlap {:.6}, bound {:.6}",
        exact.purity.value,
        exact.overlap.value,
        exact.lower_bound().value
    );

    for shots in [1_000, 10_000, 100_000] {
        let est =
            bell_projection_estimate(&rho, theta, &jx, EstimationMode::Shots { shots, seed: 42 })?;
        let b = est.lower_bound();
        println!(
            "{shots:>7} shots: purity {:.4} ± {:.4}, overlap {:.4} ± {:.4}, bound {:.4} ± {:.4}",
            est.purity.value,
            est.purity.std_error,
            est.overlap.value,
            est.overlap.std_error,
            b.value,
            b.std_error
        );
    }
    let est = bell_projection_estimate(
        &rho,
        theta,
        &jx,
        EstimationMode::Shots {
            shots: 1000,
            seed: 42,
        },
    )?;
    println!(
        "raw purity counts: {}",
        serde_json::to_string(&est.purity_sample)?
    );
    Ok(())
}
