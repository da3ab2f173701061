//! The purity/overlap lower bound and spin-squeezing-type witnesses.

use qrg::bound::{k_separability_bound, lower_bound, witness_evaluate, WitnessMode};
use qrg::metrics::asymmetry_sld;
use qrg::quantum::{bell_diagonal_probe, collective_spin, ghz_state, werner_state, Axis};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let theta = std::f64::consts::FRAC_PI_6;
    let jz = collective_spin(2, Axis::Z)?;
    for p in [0.2, 0.5, 0.9] {
        let rho = bell_diagonal_probe(p)?;
        let b = lower_bound(&rho, &jz, theta)?;
        let a = asymmetry_sld(&rho, &jz)?.value;
        println!(
            "Bell-diagonal p = {p}: bound {:.6} <= asymmetry {a:.6}",
            b.s_theta
        );
    }
    // The singlet is invariant under collective rotations, so Werner states carry no asymmetry.
    let w = werner_state(0.9)?;
    println!(
        "Werner p = 0.9: asymmetry {:.2e}",
        asymmetry_sld(&w, &jz)?.value
    );

    for n in 2..=5 {
        let bounds: Vec<String> = (1..=n)
            .map(|k| format!("k={k}: {:.3}", k_separability_bound(n, k).unwrap()))
            .collect();
        println!("N = {n}: {}", bounds.join(", "));
    }

    let ghz = ghz_state(4)?;
    for mode in [WitnessMode::ExactMetric, WitnessMode::LowerBound { theta }] {
        let report = witness_evaluate(&ghz, 4, 1, mode)?;
        for (axis, w) in &report.per_axis {
            println!(
                "{mode:?} {}: {:.4} vs {:.4} -> {}",
                axis.spin_label(),
                w.metric,
                w.bound,
                w.violated
            );
        }
        println!(
            "  entanglement detected: {}",
            report.entanglement_detected()
        );
    }
    Ok(())
}
