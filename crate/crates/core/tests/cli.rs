//! End-to-end runs of the `qrg` binary.

use std::path::Path;
use std::process::{Command, Output};

use qrg::report::{format_float, parse_json};

fn qrg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qrg"))
        .args(args)
        .env_remove("QRG_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write_state(dir: &Path, name: &str, re: &str, im: &str, dim: usize) -> String {
    let path = dir.join(name);
    std::fs::write(
        &path,
        format!(r#"{{"dim": {dim}, "re": {re}, "im": {im}}}"#),
    )
    .unwrap();
    path.display().to_string()
}

fn value_of(csv: &str, quantity: &str) -> f64 {
    csv.lines()
        .find(|l| l.split(',').nth(1) == Some(quantity))
        .unwrap_or_else(|| panic!("{quantity} missing from\n{csv}"))
        .split(',')
        .nth(2)
        .unwrap()
        .parse()
        .unwrap()
}

#[test]
fn table1_footer_lists_thresholds() {
    let out = qrg(&["table1", "--theta", "0.5235987756", "--grid", "0:1:0.05"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("parameter,quantity,value,std_error,threshold,verdict\n"));
    assert!(text.contains(",p_star_asymmetry_Jx,0.640388203,,,"));
    assert!(text.contains(",p_star_bound_Jx,0.74048049,,,"));
    assert!(text.contains(",p_star_averaged_asymmetry_sum,0.333333333,,,"));
    assert!(text.contains(",p_star_averaged_bound_sum,0.42751661,,,"));
    assert!(text.contains("0.5,asymmetry_Jx,0.333333333,,0.5,false"));
    assert!(text.contains("0.8,asymmetry_Jx,0.711111111,,0.5,true"));
}

#[test]
fn fig1_series() {
    let out = qrg(&["fig1", "--grid", "0:1:0.01"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 1 + 3 * 101);
    assert!(text.contains("\n0.3,asymmetry,0.09,,,\n"));
    assert!(text.contains("\n0.3,variance,1,,,\n"));
    assert!(text.contains("\n0.3,classical,0.91,,,\n"));
}

#[test]
fn fisher_on_maximally_mixed_file_is_zero() {
    let dir = tempfile::tempdir().unwrap();
    let re = "[[0.25,0,0,0],[0,0.25,0,0],[0,0,0.25,0],[0,0,0,0.25]]";
    let im = "[[0,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]";
    let file = write_state(dir.path(), "mixed.json", re, im, 4);
    let out = qrg(&["fisher", "--state", &file, "--hamiltonian", "Jz"]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = stdout(&out);
    assert_eq!(value_of(&text, "asymmetry"), 0.0);
    assert_eq!(value_of(&text, "qfi"), 0.0);
    assert!(!text.contains("cramer_rao"));
}

#[test]
fn invalid_state_files_name_the_violation() {
    let dir = tempfile::tempdir().unwrap();
    let non_hermitian = write_state(
        dir.path(),
        "nh.json",
        "[[0.5,0.3],[0,0.5]]",
        "[[0,0],[0,0]]",
        2,
    );
    let out = qrg(&["fisher", "--state", &non_hermitian]);
    assert_eq!(out.status.code(), Some(3));
    let err: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "invalid_state");
    let msg = err["message"].as_str().unwrap();
    assert!(msg.contains("Hermitian") && msg.contains("(0, 1)"), "{msg}");

    let trace = write_state(
        dir.path(),
        "tr.json",
        "[[0.45,0],[0,0.45]]",
        "[[0,0],[0,0]]",
        2,
    );
    let out = qrg(&["fisher", "--state", &trace]);
    assert_eq!(out.status.code(), Some(3));
    let err: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert!(err["message"].as_str().unwrap().contains("0.9"));

    let garbage = dir.path().join("bad.json");
    std::fs::write(&garbage, "not json").unwrap();
    let out = qrg(&["fisher", "--state", garbage.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn well_formed_qubit_file_is_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_state(
        dir.path(),
        "half.json",
        "[[0.5,0],[0,0.5]]",
        "[[0,0],[0,0]]",
        2,
    );
    let out = qrg(&["bound", "--state", &file, "--hamiltonian", "Z"]);
    assert!(out.status.success());
    assert_eq!(value_of(&stdout(&out), "purity"), 0.5);
}

#[test]
fn config_errors_exit_2() {
    for args in [
        &["table1", "--grid", "0:1.5:0.5"][..],
        &["bound", "--state", "werner:0.5", "--theta", "0"],
        &["fisher", "--state", "werner:1.2"],
        &["fisher", "--state", "werner:0.5", "--hamiltonian", "XYZ"],
        &["witness", "--state", "ghz", "--k", "0"],
        &["simulate", "--state", "ghz", "--scheme", "bell"],
        &["unknown-command"],
    ] {
        let out = qrg(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
        assert_eq!(err["exit_code"], 2);
    }
}

#[test]
fn computation_errors_exit_4() {
    // The correlator scheme needs an X-state; |+++⟩⟨+++| is not one.
    let dir = tempfile::tempdir().unwrap();
    let re = vec![vec![0.125; 8]; 8];
    let re = serde_json::to_string(&re).unwrap();
    let im = serde_json::to_string(&vec![vec![0.0; 8]; 8]).unwrap();
    let file = write_state(dir.path(), "plus3.json", &re, &im, 8);
    let out = qrg(&["simulate", "--state", &file, "--scheme", "correlators"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn json_report_round_trips_exactly() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t1.json");
    let out = qrg(&[
        "table1",
        "--grid",
        "0,0.37,0.9",
        "--format",
        "json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let rows = parse_json(&std::fs::read(&path).unwrap()).unwrap();
    let table =
        qrg::bound::table1_reproduce(std::f64::consts::FRAC_PI_6, &[0.0, 0.37, 0.9]).unwrap();
    assert_eq!(rows, qrg::report::table1_rows(&table));
    assert!(rows
        .iter()
        .all(|r| r.verdict.is_some() == r.threshold.is_some()));
}

#[test]
fn shot_runs_are_reproducible_and_seeded_from_env() {
    let args = [
        "simulate",
        "--state",
        "bell-diagonal:0.7",
        "--hamiltonian",
        "Jz",
        "--shots",
        "20000",
    ];
    let with_flag: Vec<&str> = args.iter().copied().chain(["--seed", "11"]).collect();
    let a = qrg(&with_flag);
    let b = qrg(&with_flag);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let env = Command::new(env!("CARGO_BIN_EXE_qrg"))
        .args(args)
        .env("QRG_SEED", "11")
        .output()
        .unwrap();
    assert_eq!(env.stdout, a.stdout);
    let other = qrg(&args
        .iter()
        .copied()
        .chain(["--seed", "12"])
        .collect::<Vec<_>>());
    assert_ne!(other.stdout, a.stdout);
    let text = stdout(&a);
    let purity_row = text.lines().find(|l| l.contains(",purity,")).unwrap();
    assert!(
        !purity_row.split(',').nth(3).unwrap().is_empty(),
        "std_error present in shot mode"
    );
}

#[test]
fn raw_samples_are_written() {
    let dir = tempfile::tempdir().unwrap();
    let samples = dir.path().join("counts.json");
    let out = qrg(&[
        "simulate",
        "--state",
        "werner:0.9",
        "--shots",
        "500",
        "--seed",
        "3",
        "--samples",
        samples.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(&samples).unwrap()).unwrap();
    assert_eq!(v["purity"]["shots"], 500);
    assert_eq!(v["purity"]["seed"], 3);
    let total: u64 = v["overlap"]["outcomes"]
        .as_object()
        .unwrap()
        .values()
        .map(|c| c.as_u64().unwrap())
        .sum();
    assert_eq!(total, 500);
}

#[test]
fn correlator_scheme_on_ghz() {
    let out = qrg(&[
        "simulate",
        "--state",
        "ghz",
        "--scheme",
        "correlators",
        "--hamiltonian",
        "Jz",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(value_of(&text, "purity"), 1.0);
    // GHZ(3) under e^{-iJzθ}: overlap cos²(3θ/2) at θ = π/6 is 1/2.
    assert!((value_of(&text, "overlap") - 0.5).abs() < 1e-8);
}

#[test]
fn witness_bound_mode_on_ghz() {
    let out = qrg(&["witness", "--state", "ghz:3", "--use", "bound", "--k", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let jz = text.lines().find(|l| l.contains(",bound_Jz,")).unwrap();
    assert!(
        jz.ends_with(&format!(",{},true", format_float(1.25))),
        "{jz}"
    );
}
