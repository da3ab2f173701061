//! Writing report rows as CSV and JSON, and driving the command line in-process.

use qrg::report::{encode, fig1_rows, parse_json, Format};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let rows = fig1_rows(&[0.0, 0.5, 1.0])?;
    print!("{}", String::from_utf8(encode(&rows, Format::Csv)?)?);

    let json = encode(&rows, Format::Json)?;
    assert_eq!(parse_json(&json)?, rows);
    println!("JSON round trip preserved {} rows", rows.len());

    let dir = std::env::temp_dir().join("qrg-report-example");
    std::fs::create_dir_all(&dir)?;
    let out = dir.join("witness.json");
    let args = [
        "qrg", "witness", "--state", "ghz:3", "--format", "json", "--output",
    ];
    let code = qrg::cli::run_from_args(
        args.iter()
            .map(|s| s.to_string())
            .chain([out.display().to_string()]),
    );
    println!("qrg witness exited {code}; wrote {}", out.display());
    Ok(())
}
