use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::meta::{trial_seed, RunMetadata};
use crate::error::Result;
use crate::grover::{
    bbht_success_probability, optimal_iterations, run_jpm_search, success_probability_closed_form, Mode, Schedule,
    SearchOptions, SearchOutcome,
};
use crate::text::SymbolString;

/// One CSV row of a trial batch.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub trial: usize,
    pub seed: u64,
    pub schedule: String,
    pub mode: Mode,
    pub n: usize,
    pub t: usize,
    pub iterations: usize,
    pub oracle_calls: usize,
    pub measured_position: usize,
    pub is_match: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchSummary {
    pub metadata: RunMetadata,
    pub mode: Mode,
    pub schedule: String,
    pub n: usize,
    pub t: usize,
    pub trials: usize,
    pub successes: usize,
    pub empirical_success_rate: f64,
    pub mean_oracle_calls: f64,
    /// Exact success probability of one trial in compressed mode.
    pub closed_form_reference: Option<f64>,
    /// `3 sqrt(p(1-p)/trials) + 0.01` around the reference.
    pub tolerance: Option<f64>,
}

impl SearchSummary {
    /// Empirical rate within tolerance of the reference (true when there is
    /// no reference).
    pub fn consistent(&self) -> bool {
        match (self.closed_form_reference, self.tolerance) {
            (Some(p), Some(tol)) => (self.empirical_success_rate - p).abs() <= tol,
            _ => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchBatch {
    pub records: Vec<TrialRecord>,
    pub outcomes: Vec<SearchOutcome>,
    pub summary: SearchSummary,
}

/// Exact one-trial success probability of the compressed simulation.
pub(crate) fn compressed_reference(n: usize, t: usize, schedule: Schedule) -> f64 {
    if t == 0 {
        return 0.0;
    }
    match schedule {
        Schedule::FixedOptimal => {
            let r = optimal_iterations(n, t).expect("t >= 1");
            success_probability_closed_form(n, t, r)
        }
        Schedule::MateusRandom => {
            let upper = ((n as f64).sqrt().floor() as usize).max(1);
            (1..=upper)
                .map(|r| success_probability_closed_form(n, t, r))
                .sum::<f64>()
                / upper as f64
        }
        Schedule::Bbht(config) => bbht_success_probability(n, t, config),
    }
}

/// Runs `trials` seeded searches (trial `i` uses `root_seed ^ i`) in
/// parallel and collects them in trial order.
#[allow(clippy::too_many_arguments)]
pub fn run_search_batch<C: Serialize>(
    text: &SymbolString,
    pattern: &SymbolString,
    schedule: Schedule,
    mode: Mode,
    trials: usize,
    root_seed: u64,
    opts: SearchOptions,
    config: &C,
) -> Result<SearchBatch> {
    if trials == 0 {
        return Err(crate::Error::invalid("trials must be at least 1"));
    }
    let outcomes = (0..trials)
        .into_par_iter()
        .map(|i| run_jpm_search(text, pattern, schedule, mode, trial_seed(root_seed, i), opts))
        .collect::<Result<Vec<_>>>()?;
    let records: Vec<TrialRecord> = outcomes
        .iter()
        .enumerate()
        .map(|(trial, o)| TrialRecord {
            trial,
            seed: o.seed,
            schedule: schedule.name().into(),
            mode: o.mode,
            n: o.n,
            t: o.t,
            iterations: o.iterations_used,
            oracle_calls: o.oracle_calls,
            measured_position: o.measured_position,
            is_match: o.is_match,
        })
        .collect();
    let (n, t) = (outcomes[0].n, outcomes[0].t);
    let successes = outcomes.iter().filter(|o| o.is_match).count();
    let rate = successes as f64 / trials as f64;
    let reference = (mode == Mode::Compressed).then(|| compressed_reference(n, t, schedule));
    let tolerance = reference.map(|p| 3.0 * (p * (1.0 - p) / trials as f64).sqrt() + 0.01);
    let summary = SearchSummary {
        metadata: RunMetadata::new(root_seed, config),
        mode,
        schedule: schedule.name().into(),
        n,
        t,
        trials,
        successes,
        empirical_success_rate: rate,
        mean_oracle_calls: outcomes.iter().map(|o| o.oracle_calls as f64).sum::<f64>() / trials as f64,
        closed_form_reference: reference,
        tolerance,
    };
    Ok(SearchBatch {
        records,
        outcomes,
        summary,
    })
}

impl SearchBatch {
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        for r in &self.records {
            w.serialize(r)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn summary_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&self.summary)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::Alphabet;

    fn pair(t: &[u8], q: &[u8]) -> (SymbolString, SymbolString) {
        let a = Alphabet::new(*b"abc").unwrap();
        (a.encode(t).unwrap(), a.encode(q).unwrap())
    }

    #[test]
    fn aabbc_batch_always_succeeds() {
        let (t, q) = pair(b"aabbc", b"ab");
        let b = run_search_batch(
            &t,
            &q,
            Schedule::FixedOptimal,
            Mode::Compressed,
            1000,
            11,
            SearchOptions::default(),
            &"cfg",
        )
        .unwrap();
        assert_eq!(b.summary.empirical_success_rate, 1.0);
        assert!((b.summary.closed_form_reference.unwrap() - 1.0).abs() < 1e-12);
        assert!(b.summary.consistent());
    }

    #[test]
    fn csv_is_deterministic_and_ordered() {
        let (t, q) = pair(b"abcabcaabbcc", b"cab");
        let run = || {
            let b = run_search_batch(
                &t,
                &q,
                Schedule::MateusRandom,
                Mode::Compressed,
                64,
                5,
                SearchOptions::default(),
                &"x",
            )
            .unwrap();
            let mut buf = Vec::new();
            b.write_csv(&mut buf).unwrap();
            (buf, b.summary_json().unwrap())
        };
        let (a, sa) = run();
        let (b, sb) = run();
        assert_eq!(a, b);
        assert_eq!(sa, sb);
        let text = String::from_utf8(a).unwrap();
        assert!(
            text.starts_with("trial,seed,schedule,mode,n,t,iterations,oracle_calls,measured_position,is_match\n0,5,")
        );
    }

    #[test]
    fn mateus_reference_averages_closed_form() {
        let p = compressed_reference(16, 1, Schedule::MateusRandom);
        let want = (1..=4).map(|r| success_probability_closed_form(16, 1, r)).sum::<f64>() / 4.0;
        assert!((p - want).abs() < 1e-15);
    }
}
