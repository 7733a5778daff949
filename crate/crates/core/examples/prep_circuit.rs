//! Gate-level preparation of the cyclic window state and its cost.

use qjpm::circuit::{build_cyclic_window_prep, compare_to_eq5, execute, gate_counts};
use qjpm::state::{FullState, QuantumState, DEFAULT_QUBIT_CAP};

fn main() -> qjpm::Result<()> {
    let (s, m) = (3, 3);
    let circuit = build_cyclic_window_prep(s, m, DEFAULT_QUBIT_CAP)?;
    for gate in circuit.gates() {
        println!(
            "{:?} controls={:?} targets={:?}",
            gate.kind, gate.controls, gate.targets
        );
    }

    let out = execute(&circuit, &FullState::zero(s, m, DEFAULT_QUBIT_CAP)?)?;
    let support = out.amplitudes().iter().filter(|a| a.norm() > 1e-12).count();
    println!("prepared basis states: {support}");

    let cmp = compare_to_eq5(s, m, DEFAULT_QUBIT_CAP)?;
    println!(
        "distance to the linear window state: {:.4} ({} wrap-around windows)",
        cmp.l2_distance, cmp.boundary_window_count
    );

    let counts = gate_counts(&circuit, true);
    println!(
        "H={} X={} CNOT={} MCX={} raw={} decomposed={:?}",
        counts.h, counts.x, counts.cnot, counts.mcx, counts.raw_total, counts.decomposed_total
    );
    Ok(())
}
