//! Every cross-module consistency check, honest and sabotaged.

use qjpm::experiments::{run_verification, VerifyOptions};

fn main() -> qjpm::Result<()> {
    for sabotage in [false, true] {
        let report = run_verification(VerifyOptions { sabotage })?;
        println!("sabotage={sabotage}");
        for c in &report.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            println!(
                "  {status} {:<20} {:.3e} <= {:.0e}  {}",
                c.name, c.measured, c.bound, c.detail
            );
        }
    }
    Ok(())
}
