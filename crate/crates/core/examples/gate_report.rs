//! Gate counts against M·s³ with the MCX cost table.

use qjpm::experiments::gate_report;

fn main() -> qjpm::Result<()> {
    let report = gate_report(&[1, 2, 3, 4], &[1, 2, 3])?;
    report.write_csv(std::io::stdout())?;
    println!("C = {:.4}, max ratio {:.3}", report.fitted_c, report.max_ratio);
    Ok(())
}
