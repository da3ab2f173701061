//! The `qrg` command line.
//!
//! Every command prints a report (CSV by default) to stdout or `--output`. Failures go to stderr
//! as one JSON object, and the exit code says which kind of failure occurred: 2 for bad arguments,
//! 3 for unreadable or invalid input files, 4 for computation or output errors.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bound::{lower_bound, table1_reproduce, witness_evaluate, WitnessMode};
use crate::error::Error;
use crate::measurement::bell::{bell_projection_estimate, EstimationMode};
use crate::measurement::sampling::{EstimateWithError, ShotSample};
use crate::measurement::xstate::{overlap_via_correlator_shots, overlap_via_correlators};
use crate::metrics::{
    asymmetry_sld, cramer_rao, monotone_metric_norm, skew_information, variance, CmFunction,
};
use crate::quantum::matrix::qubit_count;
use crate::quantum::{
    collective_spin, evolve_phase, ghz_state, Axis, DensityMatrix, MatrixJson, Observable,
    PauliString, StateFamily,
};
use crate::report::{
    emit_report, fig1_rows, table1_rows, witness_rows, Format, ReportError, ReportRow,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_COMPUTATION: i32 = 4;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error("{0}")]
    InputParse(String),
    #[error("invalid state: {0}")]
    InvalidState(Error),
    #[error(transparent)]
    Computation(#[from] Error),
    #[error(transparent)]
    Report(#[from] ReportError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => EXIT_CONFIG,
            CliError::InputParse(_) | CliError::InvalidState(_) => EXIT_INPUT,
            CliError::Computation(_) | CliError::Report(_) => EXIT_COMPUTATION,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Config(_) => "config",
            CliError::InputParse(_) => "input_parse",
            CliError::InvalidState(_) => "invalid_state",
            CliError::Computation(_) => "computation",
            CliError::Report(_) => "report",
        }
    }

    /// `{"error": kind, "message": ..., "exit_code": n}` on one line.
    pub fn to_json(&self) -> String {
        serde_json::json!({
            "error": self.kind(),
            "message": self.to_string(),
            "exit_code": self.exit_code(),
        })
        .to_string()
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Where a state comes from: a named family at parameter `p`, a GHZ state, or a JSON file.
#[derive(Debug, Clone, PartialEq)]
pub enum StateSource {
    Family { family: StateFamily, p: f64 },
    Ghz { n_qubits: usize },
    File(PathBuf),
}

impl FromStr for StateSource {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        if let Some(rest) = s.strip_prefix("ghz") {
            let n = match rest.strip_prefix(':') {
                Some(n) => n.parse().map_err(|_| format!("bad GHZ size in `{s}`"))?,
                None if rest.is_empty() => 3,
                None => return Ok(StateSource::File(PathBuf::from(s))),
            };
            return Ok(StateSource::Ghz { n_qubits: n });
        }
        if let Some((name, p)) = s.split_once(':') {
            if let Ok(family) = name.parse::<StateFamily>() {
                let p: f64 = p.parse().map_err(|_| format!("bad parameter in `{s}`"))?;
                return Ok(StateSource::Family { family, p });
            }
        }
        Ok(StateSource::File(PathBuf::from(s)))
    }
}

/// A state with its register size and the sweep parameter reported alongside it.
#[derive(Debug, Clone)]
pub struct ResolvedState {
    pub rho: DensityMatrix,
    pub n_qubits: usize,
    pub parameter: f64,
}

impl StateSource {
    pub fn resolve(&self) -> CliResult<ResolvedState> {
        let (rho, parameter) = match self {
            StateSource::Family { family, p } => (
                family
                    .state(*p)
                    .map_err(|e| CliError::Config(format!("{family}:{p}: {e}")))?,
                *p,
            ),
            StateSource::Ghz { n_qubits } => (
                ghz_state(*n_qubits)
                    .map_err(|e| CliError::Config(format!("ghz:{n_qubits}: {e}")))?,
                0.0,
            ),
            StateSource::File(path) => (parse_state_file(path)?, 0.0),
        };
        let n_qubits = qubit_count(rho.dim()).ok_or_else(|| {
            CliError::InputParse(format!(
                "state dimension {} is not a qubit register",
                rho.dim()
            ))
        })?;
        Ok(ResolvedState {
            rho,
            n_qubits,
            parameter,
        })
    }
}

/// Reads `{"dim": d, "re": [[...]], "im": [[...]]}` and validates it as a density matrix.
pub fn parse_state_file(path: &Path) -> CliResult<DensityMatrix> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::InputParse(format!("{}: {e}", path.display())))?;
    let json: MatrixJson = serde_json::from_str(&text)
        .map_err(|e| CliError::InputParse(format!("{}: {e}", path.display())))?;
    let m = json
        .to_matrix()
        .map_err(|e| CliError::InputParse(format!("{}: {e}", path.display())))?;
    DensityMatrix::new(m).map_err(CliError::InvalidState)
}

/// `Jx`/`Jy`/`Jz` (collective spin) or a Pauli string such as `XZI`.
pub fn parse_hamiltonian(spec: &str, n_qubits: usize) -> CliResult<Observable> {
    let lower = spec.to_ascii_lowercase();
    if let Some(axis) = lower.strip_prefix('j') {
        let axis: Axis = axis.parse().map_err(CliError::Config)?;
        return collective_spin(n_qubits, axis).map_err(|e| CliError::Config(e.to_string()));
    }
    let string: PauliString = spec
        .parse()
        .map_err(|e| CliError::Config(format!("hamiltonian `{spec}`: {e}")))?;
    if string.n_qubits() != n_qubits {
        return Err(CliError::Config(format!(
            "hamiltonian `{spec}` acts on {} qubits but the state has {n_qubits}",
            string.n_qubits()
        )));
    }
    string
        .observable()
        .map_err(|e| CliError::Config(e.to_string()))
}

/// `start:stop:step` (inclusive) or a comma-separated list; every value must lie in [0, 1].
pub fn parse_grid(spec: &str) -> CliResult<Vec<f64>> {
    let bad = |what: &str| CliError::Config(format!("grid `{spec}`: {what}"));
    let num = |s: &str| s.trim().parse::<f64>().map_err(|_| bad("not a number"));
    let values: Vec<f64> = if spec.contains(':') {
        let parts: Vec<&str> = spec.split(':').collect();
        if parts.len() != 3 {
            return Err(bad("expected start:stop:step"));
        }
        let (start, stop, step) = (num(parts[0])?, num(parts[1])?, num(parts[2])?);
        if step.is_nan() || step <= 0.0 || stop < start {
            return Err(bad("need step > 0 and stop >= start"));
        }
        let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
        // Rounding keeps 0.15 from printing as 0.15000000000000002.
        (0..count)
            .map(|i| ((start + i as f64 * step) * 1e12).round() / 1e12)
            .collect()
    } else {
        spec.split(',').map(num).collect::<CliResult<_>>()?
    };
    if values.is_empty() {
        return Err(bad("empty"));
    }
    if let Some(v) = values.iter().find(|v| !(0.0..=1.0).contains(*v)) {
        return Err(bad(&format!("{v} is outside [0, 1]")));
    }
    Ok(values)
}

fn parse_state_arg(s: &str) -> std::result::Result<StateSource, String> {
    s.parse()
}

fn parse_theta(s: &str) -> std::result::Result<f64, String> {
    let t: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if t == 0.0 || !t.is_finite() {
        return Err("theta must be finite and non-zero".into());
    }
    Ok(t)
}

#[derive(Debug, Parser)]
#[command(
    name = "qrg",
    version,
    about = "Quantum resource and metrology toolkit"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum UseArg {
    Exact,
    Bound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scheme {
    Bell,
    Correlators,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Variance, asymmetry, quantum Fisher information and related metrics.
    Fisher {
        /// `bell-diagonal:p`, `plus-noise:p`, `werner:p`, `ghz[:n]` or a state JSON file.
        #[arg(long, value_parser = parse_state_arg)]
        state: StateSource,
        #[arg(long, default_value = "Jz")]
        hamiltonian: String,
        /// Independent repetitions for the Cramér–Rao floor.
        #[arg(long, default_value_t = 1)]
        repetitions: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Purity, rotated overlap and the resulting lower bound on the asymmetry.
    Bound {
        #[arg(long, value_parser = parse_state_arg)]
        state: StateSource,
        #[arg(long, default_value = "Jz")]
        hamiltonian: String,
        #[arg(long, value_parser = parse_theta, default_value_t = std::f64::consts::FRAC_PI_6)]
        theta: f64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Multipartite entanglement witness against the k-separable bound.
    Witness {
        #[arg(long, value_parser = parse_state_arg)]
        state: StateSource,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long = "use", value_enum, default_value_t = UseArg::Exact)]
        use_: UseArg,
        /// Axes reported individually, e.g. `x,z`; the averaged rows always use all three.
        #[arg(long, value_delimiter = ',', default_value = "x,y,z")]
        axes: Vec<Axis>,
        #[arg(long, value_parser = parse_theta, default_value_t = std::f64::consts::FRAC_PI_6)]
        theta: f64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Purity and overlap from simulated two-copy measurements.
    Simulate {
        #[arg(long, value_parser = parse_state_arg)]
        state: StateSource,
        #[arg(long, default_value = "Jz")]
        hamiltonian: String,
        #[arg(long, value_parser = parse_theta, default_value_t = std::f64::consts::FRAC_PI_6)]
        theta: f64,
        /// Shots per measured setting; omit for exact expectation values.
        #[arg(long)]
        shots: Option<u64>,
        #[arg(long, env = "QRG_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Scheme::Bell)]
        scheme: Scheme,
        /// Write the raw outcome counts here as JSON.
        #[arg(long)]
        samples: Option<PathBuf>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// The two-qubit Bell-diagonal sweep with witness verdicts and threshold parameters.
    Table1 {
        #[arg(long, value_parser = parse_theta, default_value_t = std::f64::consts::FRAC_PI_6)]
        theta: f64,
        #[arg(long, default_value = "0:1:0.05")]
        grid: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Variance, asymmetry and classical part for the noisy |+⟩ qubit under σ_y.
    Fig1 {
        #[arg(long, default_value = "0:1:0.05")]
        grid: String,
        #[command(flatten)]
        out: OutputArgs,
    },
}

impl Command {
    pub fn output(&self) -> &OutputArgs {
        match self {
            Command::Fisher { out, .. }
            | Command::Bound { out, .. }
            | Command::Witness { out, .. }
            | Command::Simulate { out, .. }
            | Command::Table1 { out, .. }
            | Command::Fig1 { out, .. } => out,
        }
    }
}

/// Computes the report rows for a command without writing anything.
pub fn rows_for(command: &Command) -> CliResult<Vec<ReportRow>> {
    match command {
        Command::Fisher {
            state,
            hamiltonian,
            repetitions,
            ..
        } => {
            let s = state.resolve()?;
            let h = parse_hamiltonian(hamiltonian, s.n_qubits)?;
            fisher_rows(&s, &h, *repetitions)
        }
        Command::Bound {
            state,
            hamiltonian,
            theta,
            ..
        } => {
            let s = state.resolve()?;
            let h = parse_hamiltonian(hamiltonian, s.n_qubits)?;
            let b = lower_bound(&s.rho, &h, *theta)?;
            let a = asymmetry_sld(&s.rho, &h)?.value;
            let x = s.parameter;
            Ok(vec![
                ReportRow::new(x, "purity", b.purity),
                ReportRow::new(x, "overlap", b.overlap),
                ReportRow::new(x, "bound", b.s_theta),
                ReportRow::new(x, "asymmetry", a),
            ])
        }
        Command::Witness {
            state,
            k,
            use_,
            axes,
            theta,
            ..
        } => {
            let s = state.resolve()?;
            if *k == 0 || *k > s.n_qubits {
                return Err(CliError::Config(format!(
                    "k = {k} must lie in 1..={}",
                    s.n_qubits
                )));
            }
            let mode = match use_ {
                UseArg::Exact => WitnessMode::ExactMetric,
                UseArg::Bound => WitnessMode::LowerBound { theta: *theta },
            };
            let mut report = witness_evaluate(&s.rho, s.n_qubits, *k, mode)?;
            report.per_axis.retain(|axis, _| axes.contains(axis));
            Ok(witness_rows(s.parameter, &report))
        }
        Command::Simulate {
            state,
            hamiltonian,
            theta,
            shots,
            seed,
            scheme,
            samples,
            ..
        } => {
            let s = state.resolve()?;
            let h = parse_hamiltonian(hamiltonian, s.n_qubits)?;
            if *shots == Some(0) {
                return Err(CliError::Config("--shots must be positive".into()));
            }
            let (purity, overlap, raw) = match scheme {
                Scheme::Bell => simulate_bell(&s, &h, *theta, *shots, *seed)?,
                Scheme::Correlators => simulate_correlators(&s, &h, *theta, *shots, *seed)?,
            };
            if let (Some(path), Some(raw)) = (samples, raw) {
                let text = serde_json::to_string_pretty(&raw).expect("counts serialize");
                fs::write(path, text + "\n").map_err(ReportError::from)?;
            }
            let t2 = theta * theta;
            let bound = EstimateWithError {
                value: (purity.value - overlap.value) / t2,
                std_error: purity.std_error.hypot(overlap.std_error) / t2,
                shots: purity.shots + overlap.shots,
            };
            let x = s.parameter;
            let row = |name: &str, e: &EstimateWithError| {
                let r = ReportRow::new(x, name, e.value);
                if e.is_exact() {
                    r
                } else {
                    r.with_error(e.std_error)
                }
            };
            let exact_overlap = s.rho.overlap(&evolve_phase(&s.rho, &h, *theta)?)?;
            Ok(vec![
                row("purity", &purity),
                row("overlap", &overlap),
                row("bound", &bound),
                ReportRow::new(x, "purity_exact", s.rho.purity()),
                ReportRow::new(x, "overlap_exact", exact_overlap),
            ])
        }
        Command::Table1 { theta, grid, .. } => {
            let grid = parse_grid(grid)?;
            Ok(table1_rows(&table1_reproduce(*theta, &grid)?))
        }
        Command::Fig1 { grid, .. } => Ok(fig1_rows(&parse_grid(grid)?)?),
    }
}

fn fisher_rows(s: &ResolvedState, h: &Observable, repetitions: u64) -> CliResult<Vec<ReportRow>> {
    if repetitions == 0 {
        return Err(CliError::Config("--repetitions must be positive".into()));
    }
    let x = s.parameter;
    let a = asymmetry_sld(&s.rho, h)?;
    let mut rows = vec![
        ReportRow::new(x, "variance", variance(&s.rho, h)?),
        ReportRow::new(x, "asymmetry", a.asymmetry()),
        ReportRow::new(x, "qfi", a.qfi_standard()),
        ReportRow::new(x, "skew_information", skew_information(&s.rho, h)?),
        ReportRow::new(
            x,
            "wigner_yanase_metric",
            monotone_metric_norm(&CmFunction::wigner_yanase(), &s.rho, h)?,
        ),
    ];
    match cramer_rao(a.qfi_standard(), repetitions) {
        Ok(v) => rows.push(ReportRow::new(x, "cramer_rao_variance", v)),
        Err(Error::ZeroInformation(_)) => {}
        Err(e) => return Err(e.into()),
    }
    Ok(rows)
}

type Simulated = (
    EstimateWithError,
    EstimateWithError,
    Option<serde_json::Value>,
);

fn simulate_bell(
    s: &ResolvedState,
    h: &Observable,
    theta: f64,
    shots: Option<u64>,
    seed: u64,
) -> CliResult<Simulated> {
    if s.n_qubits != 2 {
        return Err(CliError::Config(format!(
            "the bell scheme needs a two-qubit state, got {} qubits",
            s.n_qubits
        )));
    }
    let mode = match shots {
        Some(shots) => EstimationMode::Shots { shots, seed },
        None => EstimationMode::Analytic,
    };
    let est = bell_projection_estimate(&s.rho, theta, h, mode)?;
    let raw = match (&est.purity_sample, &est.overlap_sample) {
        (Some(p), Some(o)) => Some(serde_json::json!({ "purity": p, "overlap": o })),
        _ => None,
    };
    Ok((est.purity, est.overlap, raw))
}

fn simulate_correlators(
    s: &ResolvedState,
    h: &Observable,
    theta: f64,
    shots: Option<u64>,
    seed: u64,
) -> CliResult<Simulated> {
    if s.n_qubits != 3 {
        return Err(CliError::Config(format!(
            "the correlator scheme needs a three-qubit X-state, got {} qubits",
            s.n_qubits
        )));
    }
    let rotated = evolve_phase(&s.rho, h, theta)?;
    match shots {
        None => Ok((
            EstimateWithError::exact(overlap_via_correlators(&s.rho, &s.rho)?),
            EstimateWithError::exact(overlap_via_correlators(&s.rho, &rotated)?),
            None,
        )),
        Some(n) => {
            // Streams 0–14 for the purity strings, 15–29 for the overlap strings.
            let (purity, ps) = overlap_via_correlator_shots(&s.rho, &s.rho, n, seed, 0)?;
            let (overlap, os) = overlap_via_correlator_shots(&s.rho, &rotated, n, seed, 15)?;
            let raw: Vec<(&str, &ShotSample)> = crate::measurement::XSTATE_STRINGS
                .iter()
                .copied()
                .zip(&ps)
                .collect();
            let raw_o: Vec<(&str, &ShotSample)> = crate::measurement::XSTATE_STRINGS
                .iter()
                .copied()
                .zip(&os)
                .collect();
            let to_map = |v: Vec<(&str, &ShotSample)>| {
                v.into_iter()
                    .map(|(k, s)| {
                        (
                            k.to_string(),
                            serde_json::to_value(s).expect("counts serialize"),
                        )
                    })
                    .collect::<serde_json::Map<_, _>>()
            };
            let raw = serde_json::json!({ "purity": to_map(raw), "overlap": to_map(raw_o) });
            Ok((purity, overlap, Some(raw)))
        }
    }
}

/// Parses, runs and reports; returns the process exit code.
pub fn run_from_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return EXIT_OK;
            }
            let err = CliError::Config(
                e.kind().to_string() + ": " + e.to_string().lines().next().unwrap_or(""),
            );
            eprintln!("{}", err.to_json());
            return err.exit_code();
        }
    };
    match run(&cli.command) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("{}", e.to_json());
            e.exit_code()
        }
    }
}

pub fn run(command: &Command) -> CliResult<()> {
    let rows = rows_for(command)?;
    let out = command.output();
    emit_report(&rows, out.format.into(), out.output.as_deref())?;
    Ok(())
}
