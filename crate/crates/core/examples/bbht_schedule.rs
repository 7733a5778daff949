//! The growing-range schedule for an unknown number of matches.

use qjpm::grover::{bbht_schedule, bbht_success_probability, BbhtConfig, BbhtSchedule};

fn main() {
    let n = 64;
    let schedule = BbhtSchedule::new(n, 2024, BbhtConfig::default());
    println!("budget for n={n}: {}", schedule.budget());
    println!("draws without a hit: {:?}", bbht_schedule(n, 2024));

    for t in [1, 2, 4, 16] {
        let p = bbht_success_probability(n, t, BbhtConfig::default());
        println!("t={t:<3} success within budget: {p:.4}");
    }
}
