//! Witness values and threshold parameters for the Bell-diagonal probe.

use qrg::bound::table1_reproduce;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let theta = std::f64::consts::FRAC_PI_6;
    let grid: Vec<f64> = (0..=10).map(|k| f64::from(k) / 10.0).collect();
    let table = table1_reproduce(theta, &grid)?;
    println!(
        "{:>4} {:>7} {:>8} {:>8} {:>8} {:>8}",
        "p", "purity", "A_Jx", "S_Jx", "A_Jz", "S_Jz"
    );
    for r in &table.rows {
        println!(
            "{:4.1} {:7.4} {:8.5} {:8.5} {:8.5} {:8.5}",
            r.p,
            r.purity,
            r.asymmetry.per_axis[0],
            r.bound.per_axis[0],
            r.asymmetry.per_axis[2],
            r.bound.per_axis[2]
        );
    }
    println!();
    for t in &table.thresholds {
        match t.p_star {
            Some(p) => println!("{:<28} p* = {p:.6}", t.label),
            None => println!("{:<28} never crosses", t.label),
        }
    }
    Ok(())
}
