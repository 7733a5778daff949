use std::collections::BTreeMap;

use serde::Serialize;

use super::decompose::mcx_elementary_cost;
use super::gate::{Circuit, GateKind};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ResourceCount {
    pub h: usize,
    pub x: usize,
    pub cnot: usize,
    pub mcx: usize,
    pub phase: usize,
    /// Gates as listed, each MCX counting once.
    pub raw_total: usize,
    /// Elementary gates after expanding every MCX; set when decomposition
    /// was requested.
    pub decomposed_total: Option<usize>,
    /// Control count -> (number of MCX gates, elementary gates per MCX).
    pub mcx_costs: BTreeMap<usize, (usize, usize)>,
}

pub fn gate_counts(circuit: &Circuit, decompose: bool) -> ResourceCount {
    let mut rc = ResourceCount::default();
    for g in circuit.gates() {
        match g.kind {
            GateKind::H => rc.h += 1,
            GateKind::X => rc.x += 1,
            GateKind::Cnot => rc.cnot += 1,
            GateKind::Phase => rc.phase += 1,
            GateKind::Mcx => {
                rc.mcx += 1;
                rc.mcx_costs
                    .entry(g.controls.len())
                    .or_insert((0, mcx_elementary_cost(g.controls.len())))
                    .0 += 1;
            }
        }
    }
    rc.raw_total = circuit.len();
    if decompose {
        let expanded: usize = rc.mcx_costs.values().map(|(n, cost)| n * cost).sum();
        rc.decomposed_total = Some(rc.raw_total - rc.mcx + expanded);
    } else {
        rc.mcx_costs.clear();
    }
    rc
}
