use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::Result;
use crate::text::{build_all_jumbled_indexes, build_jumbled_index, sliding_window_matches, ParikhVector, SymbolString};

#[derive(Clone, Debug, Serialize)]
pub struct ClassicReport {
    pub text_len: usize,
    pub pattern_len: usize,
    pub sliding_window: Vec<usize>,
    pub index: Vec<usize>,
    pub agree: bool,
    /// Distinct Parikh vectors over all indexed window sizes (quadratic
    /// build only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub full_index_keys: Option<usize>,
    #[serde(skip)]
    pub sliding_time: Duration,
    #[serde(skip)]
    pub index_time: Duration,
}

/// Runs both classical baselines on one instance. With `full_index` every
/// window size is indexed first, as a preprocessing-heavy variant.
pub fn run_classic(text: &SymbolString, pattern: &SymbolString, full_index: bool) -> Result<ClassicReport> {
    let start = Instant::now();
    let sliding_window = sliding_window_matches(text, pattern)?;
    let sliding_time = start.elapsed();

    let start = Instant::now();
    let query = ParikhVector::of(pattern);
    let (index, full_index_keys) = if full_index {
        let all = build_all_jumbled_indexes(text)?;
        let keys = all.iter().map(|i| i.len()).sum();
        (all[pattern.len() - 1].query(&query)?, Some(keys))
    } else {
        (build_jumbled_index(text, pattern.len())?.query(&query)?, None)
    };
    let index_time = start.elapsed();

    Ok(ClassicReport {
        text_len: text.len(),
        pattern_len: pattern.len(),
        agree: sliding_window == index,
        sliding_window,
        index,
        full_index_keys,
        sliding_time,
        index_time,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{ingest_text, Alphabet};

    #[test]
    fn examples() {
        let a = Alphabet::new(*b"abc").unwrap();
        let r = run_classic(&a.encode(b"aabbc").unwrap(), &a.encode(b"ab").unwrap(), false).unwrap();
        assert_eq!(r.sliding_window, vec![2]);
        assert!(r.agree);
        let r = run_classic(&a.encode(b"aabbc").unwrap(), &a.encode(b"aabbc").unwrap(), true).unwrap();
        assert_eq!(r.index, vec![1]);
        assert!(r.full_index_keys.is_some());
        let (t, a) = ingest_text(b"ab", None).unwrap();
        assert!(run_classic(&t, &a.encode(b"abb").unwrap(), false).is_err());
    }
}
