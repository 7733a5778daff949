//! Median oracle calls over planted instances and the fitted exponent.

use qjpm::experiments::{run_sweep, MatchCount, SweepConfig};

fn main() -> qjpm::Result<()> {
    for matches in [MatchCount::Unique, MatchCount::Density(1.0 / 32.0)] {
        let report = run_sweep(&SweepConfig {
            matches,
            seed: 11,
            ..SweepConfig::default()
        })?;
        println!("{matches:?}");
        for p in &report.points {
            println!(
                "  N={:<5} t={:<4} median calls={:<5} success={:.2}",
                p.text_len, p.t, p.median_oracle_calls, p.success_rate
            );
        }
        println!("  slope {:.3} (residual {:.3})", report.fit.slope, report.fit.residual);
    }
    Ok(())
}
