use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An ordered set of distinct byte symbols.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Alphabet {
    symbols: Vec<u8>,
    #[serde(skip)]
    lookup: Option<Box<[Option<u8>; 256]>>,
}

impl Alphabet {
    /// Builds an alphabet keeping the given order. Labels must be distinct.
    pub fn new(symbols: impl Into<Vec<u8>>) -> Result<Self> {
        let symbols = symbols.into();
        if symbols.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut lookup = Box::new([None; 256]);
        for (i, &b) in symbols.iter().enumerate() {
            if lookup[b as usize].is_some() {
                return Err(Error::DuplicateSymbol(b));
            }
            lookup[b as usize] = Some(i as u8);
        }
        Ok(Self {
            symbols,
            lookup: Some(lookup),
        })
    }

    /// The sorted set of distinct bytes occurring in `bytes`.
    pub fn from_distinct_bytes(bytes: &[u8]) -> Result<Self> {
        let mut seen = [false; 256];
        for &b in bytes {
            seen[b as usize] = true;
        }
        let symbols: Vec<u8> = (0..=255u8).filter(|&b| seen[b as usize]).collect();
        Self::new(symbols)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn symbol(&self, index: usize) -> Option<u8> {
        self.symbols.get(index).copied()
    }

    pub fn index_of(&self, byte: u8) -> Option<usize> {
        match &self.lookup {
            Some(table) => table[byte as usize].map(usize::from),
            None => self.symbols.iter().position(|&b| b == byte),
        }
    }

    /// Maps raw bytes to symbol indices, rejecting the first byte that is
    /// not part of the alphabet.
    pub fn encode(&self, bytes: &[u8]) -> Result<SymbolString> {
        let symbols = bytes
            .iter()
            .enumerate()
            .map(|(offset, &byte)| {
                self.index_of(byte)
                    .map(|i| i as u8)
                    .ok_or(Error::SymbolNotInAlphabet { byte, offset })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SymbolString {
            symbols,
            alphabet_size: self.len(),
        })
    }

    pub fn decode(&self, s: &SymbolString) -> Vec<u8> {
        s.symbols.iter().map(|&i| self.symbols[i as usize]).collect()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, &b) in self.symbols.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", char::from(b).escape_default())?;
        }
        write!(f, "}}")
    }
}

/// A string stored as 0-based indices into an [`Alphabet`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymbolString {
    symbols: Vec<u8>,
    alphabet_size: usize,
}

impl SymbolString {
    pub fn new(symbols: Vec<u8>, alphabet_size: usize) -> Result<Self> {
        if alphabet_size == 0 {
            return Err(Error::EmptyInput);
        }
        if alphabet_size > 256 {
            return Err(Error::AlphabetTooLarge(alphabet_size));
        }
        if let Some(&bad) = symbols.iter().find(|&&s| s as usize >= alphabet_size) {
            return Err(Error::SymbolIndexOutOfRange {
                index: bad as usize,
                size: alphabet_size,
            });
        }
        Ok(Self { symbols, alphabet_size })
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    /// Symbol index at 1-based position `position`.
    pub fn at(&self, position: usize) -> Option<u8> {
        position.checked_sub(1).and_then(|i| self.symbols.get(i).copied())
    }

    /// The 1-based window `[start, start + length - 1]` as a new string.
    pub fn window(&self, start: usize, length: usize) -> Result<SymbolString> {
        let range = window_range(self.len(), start, length)?;
        Ok(SymbolString {
            symbols: self.symbols[range].to_vec(),
            alphabet_size: self.alphabet_size,
        })
    }

    pub(crate) fn check_same_alphabet(&self, other: &SymbolString) -> Result<()> {
        if self.alphabet_size != other.alphabet_size {
            return Err(Error::DimensionMismatch {
                expected: self.alphabet_size,
                found: other.alphabet_size,
            });
        }
        Ok(())
    }
}

/// Converts a 1-based window to a 0-based range. A zero-length window is
/// accepted anywhere in `1..=len + 1`.
pub(crate) fn window_range(len: usize, start: usize, length: usize) -> Result<std::ops::Range<usize>> {
    let err = Error::WindowOutOfRange { start, length, len };
    if start == 0 {
        return Err(err);
    }
    let begin = start - 1;
    let end = begin
        .checked_add(length)
        .ok_or(Error::WindowOutOfRange { start, length, len })?;
    if end > len {
        return Err(err);
    }
    Ok(begin..end)
}

/// Reads raw bytes into a symbol string. Without an explicit alphabet the
/// alphabet is the sorted set of distinct bytes in `raw`.
pub fn ingest_text(raw: &[u8], explicit: Option<&Alphabet>) -> Result<(SymbolString, Alphabet)> {
    if raw.is_empty() {
        return Err(Error::EmptyInput);
    }
    let alphabet = match explicit {
        Some(a) => a.clone(),
        None => Alphabet::from_distinct_bytes(raw)?,
    };
    let s = alphabet.encode(raw)?;
    Ok((s, alphabet))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ingest_infers_sorted_alphabet() {
        let (s, a) = ingest_text(b"aabbc", None).unwrap();
        assert_eq!(a.symbols(), b"abc");
        assert_eq!(s.symbols(), &[0, 0, 1, 1, 2]);
    }

    #[test]
    fn ingest_with_explicit_alphabet_keeps_its_size() {
        let ab = Alphabet::new(*b"ab").unwrap();
        let (s, a) = ingest_text(b"a", Some(&ab)).unwrap();
        assert_eq!(s.symbols(), &[0]);
        assert_eq!(a.len(), 2);
    }

    #[test]
    fn ingest_rejects_foreign_byte_with_offset() {
        let ab = Alphabet::new(*b"ab").unwrap();
        match ingest_text(b"abz", Some(&ab)) {
            Err(Error::SymbolNotInAlphabet { byte, offset }) => {
                assert_eq!(byte, b'z');
                assert_eq!(offset, 2);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn ingest_rejects_empty() {
        assert!(matches!(ingest_text(b"", None), Err(Error::EmptyInput)));
    }

    #[test]
    fn explicit_order_is_respected() {
        let a = Alphabet::new(*b"cba").unwrap();
        let s = a.encode(b"abc").unwrap();
        assert_eq!(s.symbols(), &[2, 1, 0]);
        assert_eq!(a.decode(&s), b"abc");
    }

    #[test]
    fn duplicate_labels_rejected() {
        assert!(matches!(Alphabet::new(*b"aba"), Err(Error::DuplicateSymbol(b'a'))));
    }

    #[test]
    fn window_bounds() {
        let (s, _) = ingest_text(b"abca", None).unwrap();
        assert_eq!(s.window(2, 2).unwrap().symbols(), &[1, 2]);
        assert!(s.window(0, 1).is_err());
        assert!(s.window(4, 2).is_err());
        assert!(s.window(5, 0).unwrap().is_empty());
    }
}
