//! Reconstructing a three-qubit X-state and its overlaps from fifteen correlators.

use qrg::measurement::xstate::{overlap_via_correlator_shots, XSTATE_STRINGS};
use qrg::measurement::{overlap_via_correlators, xstate_correlators, xstate_reconstruct};
use qrg::quantum::matrix::max_abs_diff;
use qrg::quantum::{collective_spin, evolve_phase, ghz_state, Axis, DensityMatrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Noisy GHZ state: an X-state.
    let rho = DensityMatrix::mix(0.8, &ghz_state(3)?, &DensityMatrix::maximally_mixed(8))?;
    let t = xstate_correlators(&rho)?;
    for (s, v) in XSTATE_STRINGS.iter().zip(t) {
        if v.abs() > 1e-12 {
            println!("<{s}> = {v:+.3}");
        }
    }
    let back = xstate_reconstruct(&t)?;
    println!(
        "reconstruction error: {:.2e}",
        max_abs_diff(back.matrix(), rho.matrix())
    );

    let jx = collective_spin(3, Axis::X)?;
    let rotated = evolve_phase(&rho, &jx, std::f64::consts::FRAC_PI_6)?;
    println!(
        "purity  via correlators {:.6}",
        overlap_via_correlators(&rho, &rho)?
    );
    println!(
        "overlap via correlators {:.6}",
        overlap_via_correlators(&rho, &rotated)?
    );
    let (est, _) = overlap_via_correlator_shots(&rho, &rotated, 20_000, 7, 0)?;
    println!(
        "overlap from 15 x 20000 shots: {:.4} ± {:.4}",
        est.value, est.std_error
    );

    let mut bad = t;
    bad[6] = 3.0;
    if let Err(e) = xstate_reconstruct(&bad) {
        println!("inconsistent correlators rejected: {e}");
    }
    Ok(())
}
