//! Prime-product fingerprints identify windows up to permutation.

use qjpm::text::{fingerprint, ingest_text, FingerprintIndex, PrimeCodec};
use qjpm::translation::{partitions_agree, window_fingerprint_table, window_parikh_table};

fn main() -> qjpm::Result<()> {
    let (text, alphabet) = ingest_text(b"abcabcbbca", None)?;
    let codec = PrimeCodec::first_primes(alphabet.len());
    println!("codec: {}", codec.to_json(&alphabet)?);

    for word in [&b"abc"[..], b"cba", b"bbc"] {
        let s = alphabet.encode(word)?;
        println!("{} -> {}", String::from_utf8_lossy(word), fingerprint(&s, &codec)?);
    }

    let index = FingerprintIndex::build(&text, 3, &codec)?;
    let query = fingerprint(&alphabet.encode(b"cab")?, &codec)?;
    println!("windows with product {query}: {:?}", index.query(&query));

    let parikh = window_parikh_table(&text, 3)?;
    let honest = window_fingerprint_table(&text, 3, &codec)?;
    println!("prime codes: {:?}", partitions_agree(&parikh, &honest)?);

    // 2 * 8 = 4 * 4, so "ab" and "cc" collide under composite codes
    let composite = PrimeCodec::with_codes_unchecked(vec![2, 8, 4]);
    let (w, _) = ingest_text(b"abcc", None)?;
    let broken = window_fingerprint_table(&w, 2, &composite)?;
    println!(
        "composite codes: {:?}",
        partitions_agree(&window_parikh_table(&w, 2)?, &broken)?
    );
    Ok(())
}
