//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits non-zero on any failure.
//!
//! Reference values come from closed forms and direct entrywise traces, never from the code paths
//! under test.

use std::process::Command;
use std::time::{Duration, Instant};

use qrg::bound::{k_separability_bound, lower_bound, table1_reproduce};
use qrg::measurement::{
    bell_projection_estimate, controlled_swap_interferometry, overlap_via_correlators,
    EstimationMode,
};
use qrg::metrics::{asymmetry_sld, classical_fisher_povm, skew_information, variance, Povm};
use qrg::quantum::matrix::{pauli_y, ComplexMatrix};
use qrg::quantum::{
    bell_diagonal_probe, collective_spin, evolve_phase, plus_noise_probe, Axis, DensityMatrix,
    Observable,
};
use qrg::random::{
    random_observable, random_pure_state, random_state, random_unitary, random_x_state,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Check = fn() -> Outcome;

const THETA: f64 = std::f64::consts::FRAC_PI_6;

/// Σ_ij a_ij b_ji, written out entry by entry.
fn direct_trace_product(a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
    let n = a.nrows();
    let mut total = 0.0;
    for i in 0..n {
        for j in 0..n {
            total += (a[(i, j)] * b[(j, i)]).re;
        }
    }
    total
}

fn grid21() -> Vec<f64> {
    (0..=20).map(|k| f64::from(k) * 0.05).collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let table = table1_reproduce(THETA, &grid21()).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let s2 = (THETA.sin() / THETA).powi(2);
    let mut worst: f64 = 0.0;
    for r in &table.rows {
        let p = r.p;
        let a = 2.0 * p * p / (p + 1.0);
        let s = p * p * s2;
        let checks = [
            (r.asymmetry.per_axis[0], a),
            (r.asymmetry.per_axis[1], 0.0),
            (r.asymmetry.per_axis[2], a),
            (r.bound.per_axis[0], s),
            (r.bound.per_axis[2], s),
        ];
        for (got, want) in checks {
            worst = worst.max((got - want).abs());
        }
    }
    if table.rows.len() != 21 {
        return Err(format!("{} rows", table.rows.len()));
    }
    if worst > 1e-9 {
        return Err(format!("max deviation {worst:.3e} > 1e-9"));
    }
    if elapsed >= Duration::from_secs(1) {
        return Err(format!("runtime {elapsed:?} >= 1 s"));
    }
    Ok(format!("21 points, max deviation {worst:.1e}, {elapsed:?}"))
}

fn criterion_2() -> Outcome {
    let table = table1_reproduce(THETA, &[0.0, 1.0]).map_err(|e| e.to_string())?;
    let s2 = (THETA.sin() / THETA).powi(2);
    // Closed-form roots: 2p²/(p+1) = 1/2, p²s² = 1/2, 4p²/(p+1) = 1/3, 2p²s² = 1/3.
    let expected = [
        ("asymmetry_Jx", (1.0 + 17f64.sqrt()) / 8.0, 0.640388),
        ("asymmetry_Jz", (1.0 + 17f64.sqrt()) / 8.0, 0.640388),
        ("bound_Jx", (0.5 / s2).sqrt(), 0.74048),
        ("bound_Jz", (0.5 / s2).sqrt(), 0.74048),
        ("averaged_asymmetry_sum", 1.0 / 3.0, 1.0 / 3.0),
        ("averaged_bound_sum", (1.0 / (6.0 * s2)).sqrt(), 0.427517),
    ];
    let mut notes = Vec::new();
    for (label, closed, printed) in expected {
        let got = table
            .threshold(label)
            .ok_or(format!("{label}: no crossing"))?;
        if (got - closed).abs() > 1e-4 || (got - printed).abs() > 1e-4 {
            return Err(format!("{label}: {got:.6} vs {closed:.6} / {printed}"));
        }
        notes.push(format!("{label}={got:.6}"));
    }
    // The mean reading is reported alongside; it crosses where the per-axis criteria do.
    let mean = table
        .threshold("averaged_asymmetry_mean")
        .ok_or("mean reading missing")?;
    if (mean - (1.0 + 17f64.sqrt()) / 8.0).abs() > 1e-4 {
        return Err(format!(
            "mean reading {mean:.6} not at the per-axis crossing"
        ));
    }
    let rows = qrg::report::table1_rows(&table);
    for q in [
        "p_star_averaged_asymmetry_mean",
        "p_star_averaged_asymmetry_sum",
    ] {
        if !rows.iter().any(|r| r.quantity == q) {
            return Err(format!("report lacks {q}"));
        }
    }
    Ok(format!(
        "{}; mean reading {mean:.6} reported",
        notes.join(" ")
    ))
}

fn criterion_3() -> Outcome {
    for (n, k, want) in [(3, 1, 0.75), (3, 2, 1.25), (2, 1, 0.5)] {
        let got = k_separability_bound(n, k).map_err(|e| e.to_string())?;
        if got != want {
            return Err(format!("N={n}, k={k}: {got} != {want}"));
        }
    }
    Ok("(3,1)=0.75 (3,2)=1.25 (2,1)=0.5".into())
}

fn criterion_4() -> Outcome {
    let sy = Observable::new(pauli_y()).map_err(|e| e.to_string())?;
    let mut prev: Option<(f64, f64)> = None;
    let mut a_at_1 = f64::NAN;
    for k in 0..=100 {
        let p = f64::from(k) / 100.0;
        let rho = plus_noise_probe(p).map_err(|e| e.to_string())?;
        let v = variance(&rho, &sy).map_err(|e| e.to_string())?;
        let a = asymmetry_sld(&rho, &sy).map_err(|e| e.to_string())?.value;
        if (v - 1.0).abs() > 1e-10 {
            return Err(format!("V({p}) = {v}"));
        }
        if let Some((pa, pc)) = prev {
            if a <= pa {
                return Err(format!("asymmetry not increasing at p = {p}"));
            }
            if v - a >= pc {
                return Err(format!("V - A not decreasing at p = {p}"));
            }
        }
        prev = Some((a, v - a));
        a_at_1 = a;
    }
    if (a_at_1 - 1.0).abs() > 1e-10 {
        return Err(format!("A(1) = {a_at_1}"));
    }
    Ok("V = 1, A increasing to 1, V - A decreasing on 101 points".into())
}

const CASES: usize = 500;
const TOL: f64 = 1e-9;

fn dims(rng: &mut ChaCha8Rng) -> usize {
    rng.random_range(2..=8)
}

fn suite(
    name: &str,
    seed: u64,
    mut case: impl FnMut(&mut ChaCha8Rng) -> Result<(), String>,
) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..CASES {
        case(&mut rng).map_err(|e| format!("{name}, case {i}: {e}"))?;
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let e = |e: qrg::Error| e.to_string();
    suite("A <= V", 1, |rng| {
        let d = dims(rng);
        let h = random_observable(rng, d);
        let mixed = random_state(rng, d, true);
        let (a, v) = (
            asymmetry_sld(&mixed, &h).map_err(e)?.value,
            variance(&mixed, &h).map_err(e)?,
        );
        if a > v + TOL {
            return Err(format!("A = {a} > V = {v}"));
        }
        let pure = random_pure_state(rng, d);
        let (a, v) = (
            asymmetry_sld(&pure, &h).map_err(e)?.value,
            variance(&pure, &h).map_err(e)?,
        );
        if (a - v).abs() > TOL * v.max(1.0) {
            return Err(format!("pure state A = {a} != V = {v}"));
        }
        Ok(())
    })?;
    suite("convexity", 2, |rng| {
        let d = dims(rng);
        let h = random_observable(rng, d);
        let (r1, r2) = (random_state(rng, d, true), random_state(rng, d, true));
        let p: f64 = rng.random();
        let mix = DensityMatrix::mix(p, &r1, &r2).map_err(e)?;
        let lhs = asymmetry_sld(&mix, &h).map_err(e)?.value;
        let rhs = p * asymmetry_sld(&r1, &h).map_err(e)?.value
            + (1.0 - p) * asymmetry_sld(&r2, &h).map_err(e)?.value;
        if lhs > rhs + TOL {
            return Err(format!("{lhs} > {rhs}"));
        }
        Ok(())
    })?;
    suite("unitary covariance", 3, |rng| {
        let d = dims(rng);
        let h = random_observable(rng, d);
        let rho = random_state(rng, d, true);
        let u = random_unitary(rng, d);
        let lhs = asymmetry_sld(&rho.unitary_conjugate(&u).map_err(e)?, &h)
            .map_err(e)?
            .value;
        let rhs = asymmetry_sld(&rho, &h.unitary_conjugate(&u).map_err(e)?)
            .map_err(e)?
            .value;
        if (lhs - rhs).abs() > TOL * lhs.abs().max(1.0) {
            return Err(format!("{lhs} != {rhs}"));
        }
        Ok(())
    })?;
    suite("dephasing monotonicity", 4, |rng| {
        let d = dims(rng);
        let h = random_observable(rng, d);
        let rho = random_state(rng, d, true);
        // Partial dephasing (1 − q) ρ + q Σ_k P_k ρ P_k in the eigenbasis of H.
        let q: f64 = rng.random();
        let spec = h.spectrum().map_err(e)?;
        let mut dephased = ComplexMatrix::zeros(d, d);
        for k in 0..d {
            let v = spec.eigenvectors.column(k);
            let p = v * v.adjoint();
            dephased += &p * rho.matrix() * &p;
        }
        let out = DensityMatrix::new(rho.matrix().scale(1.0 - q) + dephased.scale(q)).map_err(e)?;
        let before = asymmetry_sld(&rho, &h).map_err(e)?.value;
        let after = asymmetry_sld(&out, &h).map_err(e)?.value;
        if after > before + TOL {
            return Err(format!("{after} > {before}"));
        }
        Ok(())
    })?;
    suite("S_theta <= A", 5, |rng| {
        let d = dims(rng);
        let h = random_observable(rng, d);
        let rho = random_state(rng, d, true);
        let theta = rng.random_range(1e-3..=std::f64::consts::PI);
        let s = lower_bound(&rho, &h, theta).map_err(e)?.s_theta;
        let a = asymmetry_sld(&rho, &h).map_err(e)?.value;
        if s > a + TOL || s < -1e-10 {
            return Err(format!("S = {s}, A = {a}"));
        }
        Ok(())
    })?;
    suite("F_cl <= 4A", 6, |rng| {
        let d = dims(rng);
        let h = random_observable(rng, d);
        let rho = random_state(rng, d, true);
        let povm = Povm::from_basis(&random_unitary(rng, d)).map_err(e)?;
        let theta = rng.random_range(0.0..std::f64::consts::TAU);
        let f = classical_fisher_povm(&rho, &h, theta, &povm).map_err(e)?;
        let qfi = asymmetry_sld(&rho, &h).map_err(e)?.qfi_standard();
        if f > qfi + 1e-8 * qfi.max(1.0) {
            return Err(format!("F = {f} > 4A = {qfi}"));
        }
        Ok(())
    })?;
    suite("0 <= skew <= V", 7, |rng| {
        let d = dims(rng);
        let h = random_observable(rng, d);
        let rho = random_state(rng, d, true);
        let s = skew_information(&rho, &h).map_err(e)?;
        let v = variance(&rho, &h).map_err(e)?;
        if s < -1e-10 || s > v + TOL {
            return Err(format!("skew = {s}, V = {v}"));
        }
        Ok(())
    })?;
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(60) {
        return Err(format!("runtime {elapsed:?} >= 60 s"));
    }
    Ok(format!("7 suites x {CASES} cases, dims 2-8, {elapsed:?}"))
}

fn criterion_6() -> Outcome {
    let e = |e: qrg::Error| e.to_string();
    let mut rng = ChaCha8Rng::seed_from_u64(60);
    let mut worst: f64 = 0.0;
    for _ in 0..200 {
        let rho = random_state(&mut rng, 4, true);
        let h = random_observable(&mut rng, 4);
        let theta = rng.random_range(0.05..3.0);
        let est = bell_projection_estimate(&rho, theta, &h, EstimationMode::Analytic).map_err(e)?;
        let rotated = evolve_phase(&rho, &h, theta).map_err(e)?;
        worst = worst
            .max((est.purity.value - direct_trace_product(rho.matrix(), rho.matrix())).abs())
            .max((est.overlap.value - direct_trace_product(rho.matrix(), rotated.matrix())).abs());
    }
    let bell = worst;
    worst = 0.0;
    for _ in 0..200 {
        let (rho, sigma) = (random_x_state(&mut rng), random_x_state(&mut rng));
        let got = overlap_via_correlators(&rho, &sigma).map_err(e)?;
        worst = worst.max((got - direct_trace_product(rho.matrix(), sigma.matrix())).abs());
    }
    let corr = worst;
    worst = 0.0;
    for _ in 0..50 {
        let d = rng.random_range(2..=4);
        let (rho, sigma) = (
            random_state(&mut rng, d, true),
            random_state(&mut rng, d, true),
        );
        let r = rng.random_range(-1.0..=1.0);
        let got = controlled_swap_interferometry(&rho, &sigma, r).map_err(e)?;
        worst = worst.max((got - r * direct_trace_product(rho.matrix(), sigma.matrix())).abs());
    }
    let swap = worst;
    if bell.max(corr).max(swap) > 1e-10 {
        return Err(format!(
            "deviations: bell {bell:.1e}, correlators {corr:.1e}, interferometer {swap:.1e}"
        ));
    }
    Ok(format!(
        "bell {bell:.1e}, correlators {corr:.1e}, interferometer {swap:.1e}"
    ))
}

fn criterion_7() -> Outcome {
    let e = |e: qrg::Error| e.to_string();
    let rho = bell_diagonal_probe(0.6).map_err(e)?;
    let jx = collective_spin(2, Axis::X).map_err(e)?;
    let exact = direct_trace_product(rho.matrix(), rho.matrix());
    let mut within = 0;
    for seed in 0..100 {
        let mode = EstimationMode::Shots {
            shots: 100_000,
            seed,
        };
        let est = bell_projection_estimate(&rho, THETA, &jx, mode).map_err(e)?;
        if (est.purity.value - exact).abs() <= 5.0 * est.purity.std_error {
            within += 1;
        }
    }
    if within < 99 {
        return Err(format!("{within}/100 trials within 5 standard errors"));
    }
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_qrg"))
            .args([
                "simulate",
                "--state",
                "bell-diagonal:0.6",
                "--hamiltonian",
                "Jx",
                "--shots",
                "100000",
                "--seed",
                "7",
            ])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    if !a.status.success() || a.stdout.is_empty() || a.stdout != b.stdout {
        return Err("simulate output not byte-identical across runs".into());
    }
    Ok(format!(
        "{within}/100 trials within 5 SE; CLI output byte-identical"
    ))
}

fn main() {
    let criteria: [(&str, Check); 7] = [
        ("Table 1 closed forms", criterion_1),
        ("threshold parameters", criterion_2),
        ("k-separability bounds", criterion_3),
        ("Fig. 1 variance decomposition", criterion_4),
        ("property suites", criterion_5),
        ("oracle equivalences", criterion_6),
        ("finite-shot convergence and reproducibility", criterion_7),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({why})", i + 1);
            }
        }
    }
    println!("N/A  criterion 8: optical hardware experiment is not reproducible in software; covered by criteria 6 and 7");
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
