//! Window superpositions and seeded non-collapsing measurement.

use qjpm::state::{measure_first_register, CompressedState, FullState, QuantumState, DEFAULT_QUBIT_CAP};

fn main() -> qjpm::Result<()> {
    let full = FullState::window_superposition(8, 3, DEFAULT_QUBIT_CAP)?;
    println!("full: {} qubits, {} amplitudes", full.width(), full.dimension());
    for (i, a) in full.amplitudes().iter().enumerate() {
        if a.norm() > 0.0 {
            println!("  {:?} {:.4}", full.tuple_of(i), a.re);
        }
    }

    let compressed = CompressedState::window_superposition(6)?;
    println!(
        "compressed distribution: {:?}",
        compressed.first_register_distribution()
    );

    let shots = measure_first_register(&full, 42, 12)?;
    let outcomes: Vec<usize> = shots.iter().map(|s| s.outcome).collect();
    println!("12 shots of the first register: {outcomes:?}");
    Ok(())
}
