//! Window tables, marked sets and the AND/SUM counting network.

use qjpm::text::{ingest_text, PrimeCodec};
use qjpm::translation::{and_sum_network, Query, WindowTable};

fn main() -> qjpm::Result<()> {
    let (text, alphabet) = ingest_text(b"aabbcabca", None)?;
    let pattern = alphabet.encode(b"abc")?;
    let table = WindowTable::build(&text, pattern.len(), &PrimeCodec::first_primes(alphabet.len()))?;

    table.write_csv(std::io::stdout())?;
    println!(
        "{} windows, {} distinct Parikh vectors, {} distinct products",
        table.len(),
        table.distinct_parikh_count(),
        table.distinct_fingerprint_count()
    );
    println!("marked: {:?}", table.marked_set_for_pattern(&pattern)?);

    let (counts, trace) = and_sum_network(&pattern)?;
    println!("network on the pattern: {:?} via {trace:?}", counts.counts());
    println!("by Parikh query: {:?}", table.marked_set(&Query::Parikh(counts))?);
    Ok(())
}
