//! Grover iteration over the window superposition: phase oracles, the two
//! diffusion operators, iteration schedules and the trial runners.

mod oracle;
mod schedule;
mod search;

pub use oracle::{
    amplify, diffusion_compressed, diffusion_full_first_register, phase_oracle_marked, phase_oracle_symbol,
    phase_oracle_window_symbol, GroverState,
};
pub use schedule::{
    bbht_schedule, bbht_success_probability, optimal_iterations, success_probability_closed_form, BbhtConfig,
    BbhtSchedule, Schedule,
};
pub use search::{run_closest_match, run_jpm_search, Mode, SearchOptions, SearchOutcome};
