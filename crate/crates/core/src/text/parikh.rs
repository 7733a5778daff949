use std::ops::Add;

use serde::{Deserialize, Serialize};

use super::alphabet::{window_range, SymbolString};
use crate::error::{Error, Result};

/// Per-symbol occurrence counts, indexed like the alphabet.
///
/// Ordering and hashing use the raw count vector, which is the canonical
/// key for jumbled indexes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ParikhVector(Vec<u32>);

impl ParikhVector {
    pub fn zeros(alphabet_size: usize) -> Self {
        Self(vec![0; alphabet_size])
    }

    pub fn from_counts(counts: Vec<u32>) -> Self {
        Self(counts)
    }

    pub fn counts(&self) -> &[u32] {
        &self.0
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }

    /// Length of the string this vector describes.
    pub fn total(&self) -> usize {
        self.0.iter().map(|&c| c as usize).sum()
    }

    pub fn of(s: &SymbolString) -> Self {
        let mut counts = vec![0u32; s.alphabet_size()];
        for &sym in s.symbols() {
            counts[sym as usize] += 1;
        }
        Self(counts)
    }
}

impl Add for &ParikhVector {
    type Output = ParikhVector;

    fn add(self, rhs: &ParikhVector) -> ParikhVector {
        assert_eq!(
            self.dimension(),
            rhs.dimension(),
            "Parikh vectors of different alphabets"
        );
        ParikhVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl From<Vec<u32>> for ParikhVector {
    fn from(counts: Vec<u32>) -> Self {
        Self(counts)
    }
}

/// Parikh vector of the 1-based window `[start, start + length - 1]` of `s`.
pub fn parikh(s: &SymbolString, start: usize, length: usize) -> Result<ParikhVector> {
    let range = window_range(s.len(), start, length)?;
    let mut counts = vec![0u32; s.alphabet_size()];
    for &sym in &s.symbols()[range] {
        counts[sym as usize] += 1;
    }
    Ok(ParikhVector(counts))
}

/// All 1-based start positions `k` with `parikh(text, k, m) == parikh(pattern)`.
///
/// Keeps the signed difference between the window counts and the pattern
/// counts plus the number of symbols where it is nonzero, so each shift is
/// O(1).
pub fn sliding_window_matches(text: &SymbolString, pattern: &SymbolString) -> Result<Vec<usize>> {
    text.check_same_alphabet(pattern)?;
    let n = text.len();
    let m = pattern.len();
    if m == 0 {
        return Err(Error::EmptyInput);
    }
    if m > n {
        return Err(Error::PatternTooLong { pattern: m, text: n });
    }
    let t = text.symbols();
    let mut diff = vec![0i64; text.alphabet_size()];
    for &sym in pattern.symbols() {
        diff[sym as usize] -= 1;
    }
    for &sym in &t[..m] {
        diff[sym as usize] += 1;
    }
    let mut nonzero = diff.iter().filter(|&&d| d != 0).count();
    let mut out = Vec::new();
    if nonzero == 0 {
        out.push(1);
    }
    for k in 1..=n - m {
        let leaving = t[k - 1] as usize;
        let entering = t[k + m - 1] as usize;
        if leaving != entering {
            for (sym, delta) in [(leaving, -1), (entering, 1)] {
                let before = diff[sym];
                diff[sym] += delta;
                match (before == 0, diff[sym] == 0) {
                    (true, false) => nonzero += 1,
                    (false, true) => nonzero -= 1,
                    _ => {}
                }
            }
        }
        if nonzero == 0 {
            out.push(k + 1);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::ingest_text;
    use crate::text::Alphabet;
    use proptest::prelude::*;

    fn abc(s: &[u8]) -> SymbolString {
        Alphabet::new(*b"abc").unwrap().encode(s).unwrap()
    }

    #[test]
    fn whole_string_counts() {
        assert_eq!(parikh(&abc(b"abca"), 1, 4).unwrap().counts(), &[2, 1, 1]);
        assert_eq!(parikh(&abc(b"cccc"), 1, 4).unwrap().counts(), &[0, 0, 4]);
    }

    #[test]
    fn empty_window_is_zero() {
        assert_eq!(parikh(&abc(b"abca"), 2, 0).unwrap().counts(), &[0, 0, 0]);
    }

    #[test]
    fn out_of_range_window_rejected() {
        assert!(matches!(
            parikh(&abc(b"abca"), 3, 3),
            Err(Error::WindowOutOfRange { .. })
        ));
    }

    #[test]
    fn sliding_window_examples() {
        let a = Alphabet::new(*b"abc").unwrap();
        let m = |t: &[u8], q: &[u8]| sliding_window_matches(&a.encode(t).unwrap(), &a.encode(q).unwrap()).unwrap();
        assert_eq!(m(b"aabbc", b"ab"), vec![2]);
        assert_eq!(m(b"abab", b"ba"), vec![1, 2, 3]);
        assert_eq!(m(b"ab", b"ba"), vec![1]);
    }

    #[test]
    fn pattern_longer_than_text_rejected() {
        let (t, a) = ingest_text(b"ab", None).unwrap();
        let q = a.encode(b"aba").unwrap();
        assert!(matches!(
            sliding_window_matches(&t, &q),
            Err(Error::PatternTooLong { pattern: 3, text: 2 })
        ));
    }

    proptest! {
        #[test]
        fn parikh_is_additive(u in proptest::collection::vec(0u8..3, 0..12), v in proptest::collection::vec(0u8..3, 0..12)) {
            let su = SymbolString::new(u.clone(), 3).unwrap();
            let sv = SymbolString::new(v.clone(), 3).unwrap();
            let uv = SymbolString::new([u, v].concat(), 3).unwrap();
            prop_assert_eq!(&ParikhVector::of(&su) + &ParikhVector::of(&sv), ParikhVector::of(&uv));
        }

        #[test]
        fn parikh_total_is_window_length(s in proptest::collection::vec(0u8..4, 1..20), a in 0usize..20, b in 0usize..20) {
            let s = SymbolString::new(s, 4).unwrap();
            let start = 1 + a % s.len();
            let len = b % (s.len() - start + 2);
            prop_assert_eq!(parikh(&s, start, len).unwrap().total(), len);
        }
    }
}
