//! Simulation and verification toolkit for quantum jumbled pattern matching.
//!
//! * [`text`]: alphabets, Parikh vectors, prime-product fingerprints and the
//!   classical sliding-window / jumbled-index baselines.
//! * [`state`]: amplitude vectors over window indices (compressed) or over
//!   `M` registers of `s` qubits (full), plus seeded measurement.
//! * [`circuit`]: the gate-level window preparation circuit, a small
//!   statevector executor and resource counting.
//! * [`translation`]: window-to-Parikh tables for both translation routes
//!   and the marked set they induce.
//! * [`grover`]: oracles, diffusions, iteration schedules and trial runners.
//! * [`experiments`]: instance generation, batch runs, sweeps and the
//!   verification suite behind the `qjpm` binary.
//!
//! Positions in every public interface are 1-based.

pub mod circuit;
pub mod error;
pub mod experiments;
pub mod grover;
pub mod state;
pub mod text;
pub mod translation;

pub use error::{Error, Result};
