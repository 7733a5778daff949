use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::alphabet::SymbolString;
use super::fingerprint::{Fingerprint, PrimeCodec};
use super::parikh::ParikhVector;
use crate::error::{Error, Result};

/// Map from window Parikh vector to the sorted 1-based start positions of
/// every length-`window_size` window with that vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JumbledIndex {
    window_size: usize,
    alphabet_size: usize,
    table: BTreeMap<ParikhVector, Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexDump {
    pub window_size: usize,
    pub entries: Vec<IndexDumpEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexDumpEntry {
    pub counts: Vec<u32>,
    pub positions: Vec<usize>,
}

fn check_window_size(text: &SymbolString, m: usize) -> Result<()> {
    if m == 0 || m > text.len() {
        return Err(Error::WindowSizeOutOfRange {
            window: m,
            text: text.len(),
        });
    }
    Ok(())
}

/// Visits every length-`m` window once, updating the count vector by one
/// leaving and one entering symbol per shift.
fn for_each_window_parikh(text: &SymbolString, m: usize, mut f: impl FnMut(usize, &ParikhVector)) {
    let t = text.symbols();
    let mut counts = vec![0u32; text.alphabet_size()];
    for &sym in &t[..m] {
        counts[sym as usize] += 1;
    }
    let mut pv = ParikhVector::from_counts(counts);
    f(1, &pv);
    for k in 1..=t.len() - m {
        let (leaving, entering) = (t[k - 1] as usize, t[k + m - 1] as usize);
        if leaving != entering {
            let mut c = pv.counts().to_vec();
            c[leaving] -= 1;
            c[entering] += 1;
            pv = ParikhVector::from_counts(c);
        }
        f(k + 1, &pv);
    }
}

pub fn build_jumbled_index(text: &SymbolString, m: usize) -> Result<JumbledIndex> {
    check_window_size(text, m)?;
    let mut table: BTreeMap<ParikhVector, Vec<usize>> = BTreeMap::new();
    for_each_window_parikh(text, m, |k, pv| {
        table.entry(pv.clone()).or_default().push(k);
    });
    Ok(JumbledIndex {
        window_size: m,
        alphabet_size: text.alphabet_size(),
        table,
    })
}

/// One index per window size `1..=N`: the quadratic-space preprocessing
/// that answers any later query length.
pub fn build_all_jumbled_indexes(text: &SymbolString) -> Result<Vec<JumbledIndex>> {
    if text.is_empty() {
        return Err(Error::EmptyInput);
    }
    (1..=text.len()).map(|m| build_jumbled_index(text, m)).collect()
}

pub fn index_query(index: &JumbledIndex, query: &ParikhVector) -> Result<Vec<usize>> {
    index.query(query)
}

impl JumbledIndex {
    pub fn window_size(&self) -> usize {
        self.window_size
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    /// Number of distinct window Parikh vectors.
    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ParikhVector, &[usize])> {
        self.table.iter().map(|(k, v)| (k, v.as_slice()))
    }

    pub fn query(&self, query: &ParikhVector) -> Result<Vec<usize>> {
        if query.dimension() != self.alphabet_size {
            return Err(Error::DimensionMismatch {
                expected: self.alphabet_size,
                found: query.dimension(),
            });
        }
        if query.total() != self.window_size {
            return Err(Error::ParikhSumMismatch {
                expected: self.window_size,
                found: query.total(),
            });
        }
        Ok(self.table.get(query).cloned().unwrap_or_default())
    }

    pub fn dump(&self) -> IndexDump {
        IndexDump {
            window_size: self.window_size,
            entries: self
                .table
                .iter()
                .map(|(pv, positions)| IndexDumpEntry {
                    counts: pv.counts().to_vec(),
                    positions: positions.clone(),
                })
                .collect(),
        }
    }
}

/// Jumbled index keyed by prime-product fingerprint instead of the count
/// vector. Answers the same queries as [`JumbledIndex`] when the codec is
/// prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FingerprintIndex {
    window_size: usize,
    table: BTreeMap<Fingerprint, Vec<usize>>,
}

impl FingerprintIndex {
    pub fn build(text: &SymbolString, m: usize, codec: &PrimeCodec) -> Result<Self> {
        check_window_size(text, m)?;
        codec.check_aligned(text.alphabet_size())?;
        let t = text.symbols();
        let mut fp = Fingerprint::one();
        for &sym in &t[..m] {
            fp.mul_code(codec.code(sym));
        }
        let mut table: BTreeMap<Fingerprint, Vec<usize>> = BTreeMap::new();
        table.entry(fp.clone()).or_default().push(1);
        for k in 1..=t.len() - m {
            let (leaving, entering) = (t[k - 1], t[k + m - 1]);
            if leaving != entering {
                fp.mul_code(codec.code(entering));
                fp.div_code(codec.code(leaving));
            }
            table.entry(fp.clone()).or_default().push(k + 1);
        }
        Ok(Self { window_size: m, table })
    }

    pub fn window_size(&self) -> usize {
        self.window_size
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn query(&self, fp: &Fingerprint) -> Vec<usize> {
        self.table.get(fp).cloned().unwrap_or_default()
    }
}
