use std::collections::BTreeMap;
use std::io::Write;

use serde::Serialize;

use crate::circuit::{build_cyclic_window_prep, gate_counts, mcx_elementary_cost};
use crate::error::{Error, Result};

/// Footer attached to every gate report.
pub const MCX_COST_NOTE: &str = "note: MCX gates are expanded with an ancilla-free recursive \
decomposition whose per-gate cost grows roughly 3x per extra control (see mcx_costs); a cost \
logarithmic in N-M per multi-controlled X is not reproduced here, and growth is only compared \
against M*s^3.";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GateRow {
    pub s: usize,
    #[serde(rename = "M")]
    pub m: usize,
    #[serde(rename = "H")]
    pub h: usize,
    #[serde(rename = "X")]
    pub x: usize,
    #[serde(rename = "CNOT")]
    pub cnot: usize,
    #[serde(rename = "MCX")]
    pub mcx: usize,
    pub decomposed_total: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct GateReport {
    pub rows: Vec<GateRow>,
    /// Least-squares `C` in `decomposed_total ≈ C · M · s³` (through the
    /// origin).
    pub fitted_c: f64,
    /// Largest `decomposed_total / (C · M · s³)` over all rows.
    pub max_ratio: f64,
    /// Control count -> elementary gates per MCX.
    pub mcx_costs: BTreeMap<usize, usize>,
    pub note: &'static str,
}

/// Counts the preparation circuit for every `(s, M)` pair. Counting is not
/// subject to the qubit cap.
pub fn gate_report(s_list: &[usize], m_list: &[usize]) -> Result<GateReport> {
    if s_list.is_empty() || m_list.is_empty() {
        return Err(Error::invalid("need at least one s and one M"));
    }
    let mut rows = Vec::new();
    let mut mcx_costs = BTreeMap::new();
    for &m in m_list {
        for &s in s_list {
            let circuit = build_cyclic_window_prep(s, m, usize::MAX)?;
            let rc = gate_counts(&circuit, true);
            for &c in rc.mcx_costs.keys() {
                mcx_costs.insert(c, mcx_elementary_cost(c));
            }
            rows.push(GateRow {
                s,
                m,
                h: rc.h,
                x: rc.x,
                cnot: rc.cnot,
                mcx: rc.mcx,
                decomposed_total: rc.decomposed_total.expect("decomposition requested"),
            });
        }
    }
    let scale = |r: &GateRow| (r.m * r.s.pow(3)) as f64;
    let sxy: f64 = rows.iter().map(|r| scale(r) * r.decomposed_total as f64).sum();
    let sxx: f64 = rows.iter().map(|r| scale(r).powi(2)).sum();
    let fitted_c = sxy / sxx;
    let max_ratio = rows
        .iter()
        .map(|r| r.decomposed_total as f64 / (fitted_c * scale(r)))
        .fold(0.0, f64::max);
    Ok(GateReport {
        rows,
        fitted_c,
        max_ratio,
        mcx_costs,
        note: MCX_COST_NOTE,
    })
}

impl GateReport {
    /// CSV rows `s,M,H,X,CNOT,MCX,decomposed_total`, then `#` comment lines
    /// with the fit and the MCX cost note.
    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        {
            let mut w = csv::Writer::from_writer(&mut out);
            for r in &self.rows {
                w.serialize(r)?;
            }
            w.flush()?;
        }
        writeln!(
            out,
            "# fit: decomposed_total ~ {:.6} * M * s^3, max ratio {:.4}",
            self.fitted_c, self.max_ratio
        )?;
        for (c, cost) in &self.mcx_costs {
            writeln!(out, "# mcx controls={c} elementary={cost}")?;
        }
        writeln!(out, "# {}", self.note)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_qubit_single_register() {
        let r = gate_report(&[1], &[1]).unwrap();
        assert_eq!(
            r.rows,
            vec![GateRow {
                s: 1,
                m: 1,
                h: 1,
                x: 0,
                cnot: 0,
                mcx: 0,
                decomposed_total: 1
            }]
        );
    }

    #[test]
    fn monotone_in_s_and_decomposed_dominates() {
        let r = gate_report(&[1, 2, 3, 4, 5], &[1, 2, 3]).unwrap();
        for m in 1..=3 {
            let rows: Vec<&GateRow> = r.rows.iter().filter(|row| row.m == m).collect();
            for pair in rows.windows(2) {
                assert!(pair[1].decomposed_total >= pair[0].decomposed_total);
                assert!(
                    pair[1].h + pair[1].x + pair[1].cnot + pair[1].mcx
                        >= pair[0].h + pair[0].x + pair[0].cnot + pair[0].mcx
                );
            }
            for row in rows {
                assert!(row.decomposed_total >= row.h + row.x + row.cnot + row.mcx);
            }
        }
    }

    #[test]
    fn csv_footer_flags_mcx_cost() {
        let mut buf = Vec::new();
        gate_report(&[3], &[2]).unwrap().write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("s,M,H,X,CNOT,MCX,decomposed_total\n3,2,"));
        assert!(text.contains("# mcx controls=2 elementary=19"));
        assert!(text.contains("ancilla-free"));
    }
}
