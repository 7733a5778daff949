//! A seeded trial batch with its closed-form reference.

use qjpm::experiments::run_search_batch;
use qjpm::grover::{Mode, Schedule, SearchOptions};
use qjpm::text::ingest_text;

fn main() -> qjpm::Result<()> {
    let (text, alphabet) = ingest_text(b"cabbacbcacbcabcbbcaccbabcabccaab", None)?;
    let pattern = alphabet.encode(b"aabc")?;
    let config = ("search_batch example", 500);
    let batch = run_search_batch(
        &text,
        &pattern,
        Schedule::MateusRandom,
        Mode::Compressed,
        500,
        7,
        SearchOptions::default(),
        &config,
    )?;
    let mut csv = Vec::new();
    batch.write_csv(&mut csv)?;
    for line in String::from_utf8_lossy(&csv).lines().take(6) {
        println!("{line}");
    }
    println!("{}", batch.summary_json()?);
    assert!(batch.summary.consistent());
    Ok(())
}
