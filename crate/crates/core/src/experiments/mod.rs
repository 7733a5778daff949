//! Reproducible experiments on top of the simulator: planted-instance
//! generation, seeded trial batches, scaling sweeps, gate-count reports and
//! the cross-module verification suite. The `qjpm` binary is a thin shell
//! around these functions.

mod batch;
mod classic;
mod gates;
mod instance;
mod meta;
mod sweep;
mod verify;

pub use batch::{run_search_batch, SearchBatch, SearchSummary, TrialRecord};
pub use classic::{run_classic, ClassicReport};
pub use gates::{gate_report, GateReport, GateRow, MCX_COST_NOTE};
pub use instance::{plant_instance, PlantedInstance};
pub use meta::{config_hash, trial_seed, RunMetadata, SCHEMA_VERSION};
pub use sweep::{fit_loglog_slope, run_sweep, LogLogFit, MatchCount, SweepConfig, SweepPoint, SweepReport};
pub use verify::{run_verification, CheckResult, VerifyOptions, VerifyReport};
