//! Window-to-Parikh translation, both routes.
//!
//! The quantum translation is index preserving, `|k>|0> -> |k>|P_k>`, so the
//! simulator only needs its classical shadow: a table with one Parikh
//! vector and one fingerprint per window start `k`. The marked set for the
//! Grover oracle is read off that table.

use std::collections::HashMap;
use std::hash::Hash;
use std::io::Write;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::text::{fingerprint, Fingerprint, ParikhVector, PrimeCodec, SymbolString};

fn check_window(text: &SymbolString, m: usize) -> Result<()> {
    if m == 0 || m > text.len() {
        return Err(Error::WindowSizeOutOfRange {
            window: m,
            text: text.len(),
        });
    }
    Ok(())
}

/// `P_k` for every window start `k = 1..=N-M+1` (index `k - 1`).
pub fn window_parikh_table(text: &SymbolString, m: usize) -> Result<Vec<ParikhVector>> {
    check_window(text, m)?;
    let t = text.symbols();
    let mut counts = vec![0u32; text.alphabet_size()];
    for &sym in &t[..m] {
        counts[sym as usize] += 1;
    }
    let mut out = Vec::with_capacity(t.len() - m + 1);
    out.push(ParikhVector::from_counts(counts.clone()));
    for k in 1..=t.len() - m {
        counts[t[k - 1] as usize] -= 1;
        counts[t[k + m - 1] as usize] += 1;
        out.push(ParikhVector::from_counts(counts.clone()));
    }
    Ok(out)
}

/// `F_k` for every window, multiplying in the entering code and dividing
/// out the leaving one.
pub fn window_fingerprint_table(text: &SymbolString, m: usize, codec: &PrimeCodec) -> Result<Vec<Fingerprint>> {
    check_window(text, m)?;
    codec.check_aligned(text.alphabet_size())?;
    let t = text.symbols();
    let mut fp = fingerprint(&text.window(1, m)?, codec)?;
    let mut out = Vec::with_capacity(t.len() - m + 1);
    out.push(fp.clone());
    for k in 1..=t.len() - m {
        let (leaving, entering) = (t[k - 1], t[k + m - 1]);
        if leaving != entering {
            fp.mul_code(codec.code(entering));
            fp.div_code(codec.code(leaving));
        }
        out.push(fp.clone());
    }
    Ok(out)
}

/// Bookkeeping for the AND/sum translation network on one window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NetworkTrace {
    pub and_gate_count: usize,
    pub sum_gate_count: usize,
    /// `indicator[i][j]`: symbol `i` sits at window position `j`.
    pub indicator: Vec<Vec<bool>>,
}

/// Evaluates the complete bipartite AND network between the alphabet and
/// the window positions, then sums each symbol's row.
pub fn and_sum_network(window: &SymbolString) -> Result<(ParikhVector, NetworkTrace)> {
    if window.is_empty() {
        return Err(Error::EmptyInput);
    }
    let sigma = window.alphabet_size();
    let indicator: Vec<Vec<bool>> = (0..sigma)
        .map(|i| window.symbols().iter().map(|&s| s as usize == i).collect())
        .collect();
    let counts = indicator
        .iter()
        .map(|row| row.iter().filter(|&&b| b).count() as u32)
        .collect();
    let trace = NetworkTrace {
        and_gate_count: sigma * window.len(),
        sum_gate_count: sigma,
        indicator,
    };
    Ok((ParikhVector::from_counts(counts), trace))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowEntry {
    pub parikh: ParikhVector,
    pub fingerprint: Fingerprint,
}

/// Both translations for every window of a text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowTable {
    window_size: usize,
    alphabet_size: usize,
    codec: PrimeCodec,
    entries: Vec<WindowEntry>,
}

/// What the oracle compares each window against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Query {
    Parikh(ParikhVector),
    Fingerprint(Fingerprint),
}

impl WindowTable {
    pub fn build(text: &SymbolString, m: usize, codec: &PrimeCodec) -> Result<Self> {
        let parikh = window_parikh_table(text, m)?;
        let fps = window_fingerprint_table(text, m, codec)?;
        Ok(Self {
            window_size: m,
            alphabet_size: text.alphabet_size(),
            codec: codec.clone(),
            entries: parikh
                .into_iter()
                .zip(fps)
                .map(|(parikh, fingerprint)| WindowEntry { parikh, fingerprint })
                .collect(),
        })
    }

    pub fn window_size(&self) -> usize {
        self.window_size
    }

    /// Number of windows, `N - M + 1`.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[WindowEntry] {
        &self.entries
    }

    pub fn codec(&self) -> &PrimeCodec {
        &self.codec
    }

    pub fn parikh_vectors(&self) -> Vec<ParikhVector> {
        self.entries.iter().map(|e| e.parikh.clone()).collect()
    }

    pub fn fingerprints(&self) -> Vec<Fingerprint> {
        self.entries.iter().map(|e| e.fingerprint.clone()).collect()
    }

    /// Size of the induced alphabet of window Parikh vectors.
    pub fn distinct_parikh_count(&self) -> usize {
        distinct(self.entries.iter().map(|e| &e.parikh))
    }

    pub fn distinct_fingerprint_count(&self) -> usize {
        distinct(self.entries.iter().map(|e| &e.fingerprint))
    }

    /// Window starts `k` (1-based, ascending) whose translation equals the
    /// query.
    pub fn marked_set(&self, query: &Query) -> Result<Vec<usize>> {
        match query {
            Query::Parikh(pv) => {
                if pv.dimension() != self.alphabet_size {
                    return Err(Error::DimensionMismatch {
                        expected: self.alphabet_size,
                        found: pv.dimension(),
                    });
                }
                if pv.total() != self.window_size {
                    return Err(Error::ParikhSumMismatch {
                        expected: self.window_size,
                        found: pv.total(),
                    });
                }
                Ok(self.positions_where(|e| &e.parikh == pv))
            }
            Query::Fingerprint(fp) => Ok(self.positions_where(|e| &e.fingerprint == fp)),
        }
    }

    /// Marked set for a pattern, via its fingerprint under the table's codec.
    pub fn marked_set_for_pattern(&self, pattern: &SymbolString) -> Result<Vec<usize>> {
        if pattern.len() != self.window_size {
            return Err(Error::DimensionMismatch {
                expected: self.window_size,
                found: pattern.len(),
            });
        }
        self.marked_set(&Query::Fingerprint(fingerprint(pattern, &self.codec)?))
    }

    fn positions_where(&self, pred: impl Fn(&WindowEntry) -> bool) -> Vec<usize> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, e)| pred(e))
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// CSV with columns `k, c_0, ..., c_{|Σ|-1}, fingerprint`.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let mut header = vec!["k".to_string()];
        header.extend((0..self.alphabet_size).map(|i| format!("c{i}")));
        header.push("fingerprint".into());
        w.write_record(&header)?;
        for (i, e) in self.entries.iter().enumerate() {
            let mut row = vec![(i + 1).to_string()];
            row.extend(e.parikh.counts().iter().map(u32::to_string));
            row.push(e.fingerprint.to_string());
            w.write_record(&row)?;
        }
        w.flush()?;
        Ok(())
    }
}

fn distinct<T: Eq + Hash>(items: impl Iterator<Item = T>) -> usize {
    items.collect::<std::collections::HashSet<_>>().len()
}

/// Result of comparing the two window partitions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Agreement {
    Agree,
    /// Windows `first < second` (1-based) are equivalent under one
    /// translation but not the other.
    Disagree {
        first: usize,
        second: usize,
    },
}

impl Agreement {
    pub fn holds(self) -> bool {
        self == Agreement::Agree
    }
}

/// Checks that "same Parikh vector" and "same fingerprint" induce the same
/// equivalence relation on window indices. Returns the lexicographically
/// first witness pair otherwise.
pub fn partitions_agree(parikh: &[ParikhVector], fingerprints: &[Fingerprint]) -> Result<Agreement> {
    if parikh.len() != fingerprints.len() {
        return Err(Error::DimensionMismatch {
            expected: parikh.len(),
            found: fingerprints.len(),
        });
    }
    // canonical labels: index of the first window in each class
    let p_labels = first_occurrence_labels(parikh);
    let f_labels = first_occurrence_labels(fingerprints);
    if p_labels == f_labels {
        return Ok(Agreement::Agree);
    }
    for second in 0..parikh.len() {
        for first in 0..second {
            let same_p = p_labels[first] == p_labels[second];
            let same_f = f_labels[first] == f_labels[second];
            if same_p != same_f {
                return Ok(Agreement::Disagree {
                    first: first + 1,
                    second: second + 1,
                });
            }
        }
    }
    unreachable!("label vectors differ but no witness pair exists")
}

fn first_occurrence_labels<T: Eq + Hash>(items: &[T]) -> Vec<usize> {
    let mut seen: HashMap<&T, usize> = HashMap::new();
    items
        .iter()
        .enumerate()
        .map(|(i, it)| *seen.entry(it).or_insert(i))
        .collect()
}
