//! Gate-level window preparation: circuit representation, a statevector
//! executor over [`FullState`](crate::state::FullState) and resource counts.

mod decompose;
mod gate;
mod prep;
mod resources;

pub use decompose::{decompose_mcx, mcx_elementary_cost};
pub use gate::{execute, Circuit, Gate, GateKind};
pub use prep::{
    build_cyclic_window_prep, compare_to_eq5, cyclic_window_superposition, IncrementStrategy, PrepComparison,
};
pub use resources::{gate_counts, ResourceCount};
