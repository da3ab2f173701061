//! Report rows and their CSV/JSON encodings.
//!
//! Both encodings carry the columns `parameter,quantity,value,std_error,threshold,verdict`.
//! CSV prints floats with nine significant digits and leaves absent optionals empty; JSON
//! uses shortest round-trip floats and `null`.

use std::fs;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bound::{Table1, WitnessMode, WitnessReport};
use crate::error::Result;
use crate::metrics::{asymmetry_sld, variance};
use crate::quantum::matrix::pauli_y;
use crate::quantum::{plus_noise_probe, Observable};

pub const CSV_HEADER: [&str; 6] = [
    "parameter",
    "quantity",
    "value",
    "std_error",
    "threshold",
    "verdict",
];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub parameter: f64,
    pub quantity: String,
    pub value: f64,
    pub std_error: Option<f64>,
    pub threshold: Option<f64>,
    pub verdict: Option<bool>,
}

impl ReportRow {
    pub fn new(parameter: f64, quantity: impl Into<String>, value: f64) -> Self {
        Self {
            parameter,
            quantity: quantity.into(),
            value,
            std_error: None,
            threshold: None,
            verdict: None,
        }
    }

    pub fn with_error(mut self, std_error: f64) -> Self {
        self.std_error = Some(std_error);
        self
    }

    /// Attaches a threshold; the verdict is `value > threshold`.
    pub fn with_threshold(self, threshold: f64) -> Self {
        let violated = self.value > threshold;
        self.with_verdict(threshold, violated)
    }

    pub fn with_verdict(mut self, threshold: f64, verdict: bool) -> Self {
        self.threshold = Some(threshold);
        self.verdict = Some(verdict);
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(format!("unknown format `{s}` (expected csv or json)")),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ReportError {
    #[error("report has no rows")]
    Empty,
    #[error("cannot write report: {0}")]
    Io(#[from] std::io::Error),
    #[error("cannot encode report: {0}")]
    Encode(String),
    #[error("row {index} ({quantity}): verdict and threshold must be present together")]
    VerdictWithoutThreshold { index: usize, quantity: String },
}

fn check_rows(rows: &[ReportRow]) -> std::result::Result<(), ReportError> {
    if rows.is_empty() {
        return Err(ReportError::Empty);
    }
    match rows
        .iter()
        .position(|r| r.verdict.is_some() != r.threshold.is_some())
    {
        Some(index) => Err(ReportError::VerdictWithoutThreshold {
            index,
            quantity: rows[index].quantity.clone(),
        }),
        None => Ok(()),
    }
}

/// Nine significant digits, trailing zeros trimmed, like C's `%.9g`.
pub fn format_float(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{x:.8e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..9).contains(&exp) {
        let decimals = (8 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}"))
    } else {
        format!(
            "{}e{}{:02}",
            trim_zeros(mantissa),
            if exp < 0 { '-' } else { '+' },
            exp.abs()
        )
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

fn opt_float(x: Option<f64>) -> String {
    x.map(format_float).unwrap_or_default()
}

pub fn to_csv(rows: &[ReportRow]) -> std::result::Result<Vec<u8>, ReportError> {
    check_rows(rows)?;
    let mut w = csv::Writer::from_writer(Vec::new());
    let encode = |e: csv::Error| ReportError::Encode(e.to_string());
    w.write_record(CSV_HEADER).map_err(encode)?;
    for r in rows {
        w.write_record([
            format_float(r.parameter),
            r.quantity.clone(),
            format_float(r.value),
            opt_float(r.std_error),
            opt_float(r.threshold),
            r.verdict.map(|v| v.to_string()).unwrap_or_default(),
        ])
        .map_err(encode)?;
    }
    w.into_inner()
        .map_err(|e| ReportError::Encode(e.to_string()))
}

pub fn to_json(rows: &[ReportRow]) -> std::result::Result<Vec<u8>, ReportError> {
    check_rows(rows)?;
    let mut out =
        serde_json::to_vec_pretty(rows).map_err(|e| ReportError::Encode(e.to_string()))?;
    out.push(b'\n');
    Ok(out)
}

pub fn encode(rows: &[ReportRow], format: Format) -> std::result::Result<Vec<u8>, ReportError> {
    match format {
        Format::Csv => to_csv(rows),
        Format::Json => to_json(rows),
    }
}

pub fn parse_json(bytes: &[u8]) -> serde_json::Result<Vec<ReportRow>> {
    serde_json::from_slice(bytes)
}

/// Writes the report to `path`, or to stdout when `path` is `None`.
pub fn emit_report(
    rows: &[ReportRow],
    format: Format,
    path: Option<&Path>,
) -> std::result::Result<(), ReportError> {
    let bytes = encode(rows, format)?;
    match path {
        Some(p) => fs::write(p, bytes)?,
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(&bytes)?;
            out.flush()?;
        }
    }
    Ok(())
}

/// Sweep rows with witness verdicts, then a footer of threshold parameters p* (parameter = θ).
///
/// The averaged criteria appear in both readings: `_sum` reproduces the tabulated 1/3 and
/// 0.427517, while `_mean` (with the 1/3 prefactor) crosses where the per-axis criteria do.
pub fn table1_rows(table: &Table1) -> Vec<ReportRow> {
    let mut rows = Vec::new();
    for r in &table.rows {
        rows.push(ReportRow::new(r.p, "purity", r.purity));
        for (i, axis) in crate::quantum::Axis::ALL.iter().enumerate() {
            let label = axis.spin_label();
            rows.push(
                ReportRow::new(r.p, format!("asymmetry_{label}"), r.asymmetry.per_axis[i])
                    .with_verdict(0.5, r.asymmetry_witness[i]),
            );
        }
        for (i, axis) in crate::quantum::Axis::ALL.iter().enumerate() {
            let label = axis.spin_label();
            rows.push(
                ReportRow::new(r.p, format!("bound_{label}"), r.bound.per_axis[i])
                    .with_verdict(0.5, r.bound_witness[i]),
            );
        }
        let third = 1.0 / 3.0;
        rows.push(
            ReportRow::new(r.p, "averaged_asymmetry_sum", r.asymmetry.sum).with_threshold(third),
        );
        rows.push(
            ReportRow::new(r.p, "averaged_asymmetry_mean", r.asymmetry.mean).with_threshold(third),
        );
        rows.push(ReportRow::new(r.p, "averaged_bound_sum", r.bound.sum).with_threshold(third));
        rows.push(ReportRow::new(r.p, "averaged_bound_mean", r.bound.mean).with_threshold(third));
    }
    for t in &table.thresholds {
        if let Some(p) = t.p_star {
            rows.push(ReportRow::new(
                table.theta,
                format!("p_star_{}", t.label),
                p,
            ));
        }
    }
    rows
}

/// Variance, asymmetry and their difference for the plus-noise qubit against σ_y.
pub fn fig1_rows(p_grid: &[f64]) -> Result<Vec<ReportRow>> {
    let sy = Observable::new(pauli_y())?;
    let mut rows = Vec::with_capacity(3 * p_grid.len());
    for &p in p_grid {
        let rho = plus_noise_probe(p)?;
        let v = variance(&rho, &sy)?;
        let a = asymmetry_sld(&rho, &sy)?.value;
        rows.push(ReportRow::new(p, "variance", v));
        rows.push(ReportRow::new(p, "asymmetry", a));
        rows.push(ReportRow::new(p, "classical", v - a));
    }
    Ok(rows)
}

pub fn witness_rows(parameter: f64, report: &WitnessReport) -> Vec<ReportRow> {
    let prefix = match report.mode {
        WitnessMode::ExactMetric => "asymmetry",
        WitnessMode::LowerBound { .. } => "bound",
    };
    let mut rows: Vec<ReportRow> = report
        .per_axis
        .iter()
        .map(|(axis, w)| {
            ReportRow::new(
                parameter,
                format!("{prefix}_{}", axis.spin_label()),
                w.metric,
            )
            .with_verdict(w.bound, w.violated)
        })
        .collect();
    let avg = &report.averaged;
    rows.push(
        ReportRow::new(parameter, format!("averaged_{prefix}_mean"), avg.value)
            .with_verdict(avg.threshold, avg.violated),
    );
    rows.push(
        ReportRow::new(parameter, format!("averaged_{prefix}_sum"), avg.sum)
            .with_verdict(avg.threshold, avg.sum_violated),
    );
    rows
}
