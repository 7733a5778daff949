//! Closest-match baseline: per-symbol oracles instead of a verified one.

use std::collections::BTreeMap;

use qjpm::grover::{run_closest_match, Mode, SearchOptions};
use qjpm::text::ingest_text;

fn main() -> qjpm::Result<()> {
    let (w, alphabet) = ingest_text(b"aaab", None)?;
    let p = alphabet.encode(b"ab")?;

    for (label, rounds) in [("amplified", None), ("no amplification", Some(0))] {
        let mut histogram = BTreeMap::new();
        for seed in 0..2000 {
            let o = run_closest_match(&w, &p, Mode::Compressed, seed, rounds, SearchOptions::default())?;
            *histogram.entry(o.measured_position).or_insert(0) += 1;
        }
        println!("{label}: {histogram:?}");
    }
    Ok(())
}
