//! Sliding-window scan and jumbled index on the same query.

use qjpm::text::{build_jumbled_index, ingest_text, sliding_window_matches, ParikhVector};

fn main() -> qjpm::Result<()> {
    let (text, alphabet) = ingest_text(b"abcabbacbaccab", None)?;
    let pattern = alphabet.encode(b"abb")?;

    let scan = sliding_window_matches(&text, &pattern)?;
    println!("sliding window: {scan:?}");

    let index = build_jumbled_index(&text, pattern.len())?;
    let hits = index.query(&ParikhVector::of(&pattern))?;
    println!("index ({} distinct windows): {hits:?}", index.len());

    for (counts, positions) in index.iter() {
        println!("  {:?} -> {positions:?}", counts.counts());
    }
    assert_eq!(scan, hits);
    Ok(())
}
