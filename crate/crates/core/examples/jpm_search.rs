//! End-to-end jumbled pattern matching with each iteration schedule.
//! Full mode needs a power-of-two text length and uses the literal
//! first-register diffusion, which leaks amplitude off the window tuples.

use qjpm::grover::{run_jpm_search, BbhtConfig, Mode, Schedule, SearchOptions};
use qjpm::text::ingest_text;

fn main() -> qjpm::Result<()> {
    let (text, alphabet) = ingest_text(b"aabbcaca", None)?;
    let pattern = alphabet.encode(b"ab")?;
    let schedules = [
        Schedule::FixedOptimal,
        Schedule::MateusRandom,
        Schedule::Bbht(BbhtConfig::default()),
    ];

    let first = run_jpm_search(
        &text,
        &pattern,
        Schedule::FixedOptimal,
        Mode::Compressed,
        1,
        SearchOptions::default(),
    )?;
    println!("{first:?}");

    let trials = 500;
    for mode in [Mode::Compressed, Mode::Full] {
        for schedule in schedules {
            let (mut hits, mut calls) = (0, 0);
            for seed in 0..trials {
                let o = run_jpm_search(&text, &pattern, schedule, mode, seed, SearchOptions::default())?;
                hits += o.is_match as usize;
                calls += o.oracle_calls;
            }
            println!(
                "{:<10} {:<6} success={:.3} mean oracle calls={:.2}",
                mode.name(),
                schedule.name(),
                hits as f64 / trials as f64,
                calls as f64 / trials as f64
            );
        }
    }
    Ok(())
}
