//! Strings over ordered alphabets, Parikh vectors, prime-product fingerprints
//! and the two exact classical jumbled-matching baselines.
//!
//! Positions exposed by this module are 1-based (window `k` covers
//! `T[k..=k+m-1]`); storage is 0-based. The pattern length is written `m`
//! everywhere; it is the same quantity as the `M` used by the quantum modules.

mod alphabet;
mod fingerprint;
mod index;
mod parikh;

pub use alphabet::{ingest_text, Alphabet, SymbolString};
pub use fingerprint::{fingerprint, nth_prime, Fingerprint, PrimeCodec};
pub use index::{
    build_all_jumbled_indexes, build_jumbled_index, index_query, FingerprintIndex, IndexDump, IndexDumpEntry,
    JumbledIndex,
};
pub use parikh::{parikh, sliding_window_matches, ParikhVector};
