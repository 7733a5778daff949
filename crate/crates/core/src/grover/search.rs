use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::oracle::{amplify, phase_oracle_symbol, phase_oracle_window_symbol, GroverState};
use super::schedule::{optimal_iterations, BbhtSchedule, Schedule};
use crate::error::{Error, Result};
use crate::state::{sample_first_register, CompressedState, FullState, DEFAULT_QUBIT_CAP};
use crate::text::{parikh, ParikhVector, PrimeCodec, SymbolString};
use crate::translation::WindowTable;

/// Which representation a trial simulates.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Window-index subspace with the diffusion restricted to it.
    #[default]
    Compressed,
    /// `M` registers with `D_N ⊗ I` acting on the first register only.
    Full,
}

impl Mode {
    pub fn name(&self) -> &'static str {
        match self {
            Mode::Compressed => "compressed",
            Mode::Full => "full",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Largest `s * M` allowed in full mode.
    pub qubit_cap: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            qubit_cap: DEFAULT_QUBIT_CAP,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchOutcome {
    /// 1-based first-register value of the final measurement. In full mode
    /// this can exceed `n` (a window past the end of the text).
    pub measured_position: usize,
    /// The measured window was classically verified as a match.
    pub is_match: bool,
    pub oracle_calls: usize,
    pub iterations_used: usize,
    /// Measure-and-verify rounds (more than one only for BBHT).
    pub attempts: usize,
    pub seed: u64,
    pub mode: Mode,
    /// Number of windows `N - M + 1`.
    pub n: usize,
    /// Number of matching windows, known to the simulator only.
    pub t: usize,
    /// Hamming distance of the measured window to the pattern (closest
    /// match runs only; `None` for windows past the end).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mismatches: Option<usize>,
}

/// Stream used for measurement draws so schedule draws on stream 0 stay
/// identical to [`BbhtSchedule`] for the same seed.
const MEASUREMENT_STREAM: u64 = 1;

fn validate(text: &SymbolString, pattern: &SymbolString, mode: Mode, opts: SearchOptions) -> Result<()> {
    text.check_same_alphabet(pattern)?;
    if pattern.is_empty() || text.is_empty() {
        return Err(Error::EmptyInput);
    }
    if pattern.len() > text.len() {
        return Err(Error::PatternTooLong {
            pattern: pattern.len(),
            text: text.len(),
        });
    }
    if mode == Mode::Full {
        let s = crate::state::full::exact_log2(text.len())?;
        let required = s * pattern.len();
        if required > opts.qubit_cap {
            return Err(Error::QubitCapExceeded {
                required,
                available: opts.qubit_cap,
            });
        }
    }
    Ok(())
}

/// A prepared instance: the state factory and what the oracle marks.
struct Instance<'a> {
    text: &'a SymbolString,
    m: usize,
    n: usize,
    mode: Mode,
    cap: usize,
    marked: Vec<usize>,
    target: ParikhVector,
}

impl Instance<'_> {
    /// Prepares the window superposition, runs `rounds` iterations and
    /// measures once.
    fn attempt(&self, rounds: usize, rng: &mut ChaCha8Rng) -> Result<usize> {
        match self.mode {
            Mode::Compressed => {
                let mut st = CompressedState::window_superposition(self.n)?;
                amplify(&mut st, &self.marked, rounds);
                sample_first_register(&st, rng)
            }
            Mode::Full => {
                let mut st = FullState::window_superposition(self.text.len(), self.m, self.cap)?;
                amplify(&mut st, &self.marked, rounds);
                sample_first_register(&st, rng)
            }
        }
    }

    /// One Parikh comparison of the measured window against the pattern.
    fn verify(&self, position: usize) -> bool {
        position >= 1 && position <= self.n && parikh(self.text, position, self.m).is_ok_and(|pv| pv == self.target)
    }
}

/// Quantum jumbled pattern matching on one seeded trial.
///
/// The windows are translated to prime-product fingerprints (index
/// preserving), the oracle marks windows whose fingerprint equals the
/// pattern's, and every measured position is checked classically.
pub fn run_jpm_search(
    text: &SymbolString,
    pattern: &SymbolString,
    schedule: Schedule,
    mode: Mode,
    seed: u64,
    opts: SearchOptions,
) -> Result<SearchOutcome> {
    validate(text, pattern, mode, opts)?;
    let m = pattern.len();
    let codec = PrimeCodec::first_primes(text.alphabet_size());
    let table = WindowTable::build(text, m, &codec)?;
    let marked = table.marked_set_for_pattern(pattern)?;
    let inst = Instance {
        text,
        m,
        n: table.len(),
        mode,
        cap: opts.qubit_cap,
        marked,
        target: ParikhVector::of(pattern),
    };
    let t = inst.marked.len();
    let mut schedule_rng = ChaCha8Rng::seed_from_u64(seed);
    let mut measure_rng = ChaCha8Rng::seed_from_u64(seed);
    measure_rng.set_stream(MEASUREMENT_STREAM);

    let mut outcome = SearchOutcome {
        measured_position: 0,
        is_match: false,
        oracle_calls: 0,
        iterations_used: 0,
        attempts: 0,
        seed,
        mode,
        n: inst.n,
        t,
        mismatches: None,
    };
    let mut run = |rounds: usize, outcome: &mut SearchOutcome| -> Result<bool> {
        let pos = inst.attempt(rounds, &mut measure_rng)?;
        outcome.measured_position = pos;
        outcome.is_match = inst.verify(pos);
        outcome.iterations_used += rounds;
        outcome.oracle_calls += rounds;
        outcome.attempts += 1;
        Ok(outcome.is_match)
    };
    match schedule {
        Schedule::FixedOptimal => {
            let rounds = match t {
                0 => 0,
                t => optimal_iterations(inst.n, t)?,
            };
            run(rounds, &mut outcome)?;
        }
        Schedule::MateusRandom => {
            let upper = (inst.n as f64).sqrt().floor().max(1.0) as usize;
            let rounds = schedule_rng.gen_range(1..=upper);
            run(rounds, &mut outcome)?;
        }
        Schedule::Bbht(config) => {
            for rounds in BbhtSchedule::new(inst.n, seed, config) {
                if run(rounds, &mut outcome)? {
                    break;
                }
            }
        }
    }
    Ok(outcome)
}

/// The closest-pattern-matching baseline: `r` uniform in
/// `[1, floor(sqrt(n))]` (or `rounds` when given), and per iteration a
/// uniformly chosen pattern position `j` whose symbol oracle acts on
/// register `j`, followed by diffusion. One measurement, no verification.
///
/// In compressed mode the register-`j` oracle is applied to the window
/// manifold directly; in full mode it acts on the `M`-register state and
/// the diffusion is `D_N ⊗ I`.
pub fn run_closest_match(
    w: &SymbolString,
    p: &SymbolString,
    mode: Mode,
    seed: u64,
    rounds: Option<usize>,
    opts: SearchOptions,
) -> Result<SearchOutcome> {
    validate(w, p, mode, opts)?;
    let m = p.len();
    let n = w.len() - m + 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut measure_rng = ChaCha8Rng::seed_from_u64(seed);
    measure_rng.set_stream(MEASUREMENT_STREAM);
    let rounds = match rounds {
        Some(r) => r,
        None => rng.gen_range(1..=((n as f64).sqrt().floor().max(1.0) as usize)),
    };
    let position = match mode {
        Mode::Compressed => {
            let mut st = CompressedState::window_superposition(n)?;
            for _ in 0..rounds {
                let j = rng.gen_range(1..=m);
                phase_oracle_window_symbol(&mut st, j, m, p.symbols()[j - 1], w)?;
                st.reflect_first_register();
            }
            sample_first_register(&st, &mut measure_rng)?
        }
        Mode::Full => {
            let mut st = FullState::window_superposition(w.len(), m, opts.qubit_cap)?;
            for _ in 0..rounds {
                let j = rng.gen_range(1..=m);
                phase_oracle_symbol(&mut st, j, p.symbols()[j - 1], w)?;
                st.reflect_first_register();
            }
            sample_first_register(&st, &mut measure_rng)?
        }
    };
    let mismatches = (position <= n).then(|| {
        w.symbols()[position - 1..position - 1 + m]
            .iter()
            .zip(p.symbols())
            .filter(|(a, b)| a != b)
            .count()
    });
    let exact = (1..=n)
        .filter(|&k| w.symbols()[k - 1..k - 1 + m] == *p.symbols())
        .count();
    Ok(SearchOutcome {
        measured_position: position,
        is_match: mismatches == Some(0),
        oracle_calls: rounds,
        iterations_used: rounds,
        attempts: 1,
        seed,
        mode,
        n,
        t: exact,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{sliding_window_matches, Alphabet};

    fn pair(alpha: &[u8], t: &[u8], q: &[u8]) -> (SymbolString, SymbolString) {
        let a = Alphabet::new(alpha.to_vec()).unwrap();
        (a.encode(t).unwrap(), a.encode(q).unwrap())
    }

    #[test]
    fn aabbc_fixed_is_certain() {
        let (t, q) = pair(b"abc", b"aabbc", b"ab");
        for seed in 0..200 {
            let o = run_jpm_search(
                &t,
                &q,
                Schedule::FixedOptimal,
                Mode::Compressed,
                seed,
                SearchOptions::default(),
            )
            .unwrap();
            assert_eq!(o.measured_position, 2);
            assert!(o.is_match);
            assert_eq!((o.n, o.t, o.oracle_calls), (4, 1, 1));
        }
    }

    #[test]
    fn all_marked_needs_no_iterations() {
        let (t, q) = pair(b"ab", b"abab", b"ba");
        for seed in 0..50 {
            let o = run_jpm_search(
                &t,
                &q,
                Schedule::FixedOptimal,
                Mode::Compressed,
                seed,
                SearchOptions::default(),
            )
            .unwrap();
            assert!(o.is_match);
            assert_eq!(o.oracle_calls, 0);
        }
    }

    #[test]
    fn no_match_never_verifies() {
        let (t, q) = pair(b"abc", b"aaaa", b"bc");
        for seed in 0..50 {
            for sched in [
                Schedule::MateusRandom,
                Schedule::FixedOptimal,
                Schedule::Bbht(Default::default()),
            ] {
                let o = run_jpm_search(&t, &q, sched, Mode::Compressed, seed, SearchOptions::default()).unwrap();
                assert!(!o.is_match);
                assert_eq!(o.t, 0);
                if sched == Schedule::MateusRandom {
                    assert_eq!(o.oracle_calls, 1);
                }
            }
        }
    }

    #[test]
    fn verdicts_agree_with_sliding_window() {
        let (t, q) = pair(b"acgt", b"acgtgcatacggatcgatgc", b"gca");
        let matches = sliding_window_matches(&t, &q).unwrap();
        for seed in 0..100 {
            let o = run_jpm_search(
                &t,
                &q,
                Schedule::MateusRandom,
                Mode::Compressed,
                seed,
                SearchOptions::default(),
            )
            .unwrap();
            assert_eq!(o.is_match, matches.contains(&o.measured_position));
            assert_eq!(o.oracle_calls, o.iterations_used);
        }
    }

    #[test]
    fn full_mode_preconditions() {
        let (t, q) = pair(b"abc", b"aabbc", b"ab");
        assert!(matches!(
            run_jpm_search(&t, &q, Schedule::FixedOptimal, Mode::Full, 0, SearchOptions::default()),
            Err(Error::NotPowerOfTwo(5))
        ));
        let (t, q) = pair(b"ab", &[b'a'; 64], &[b'a'; 3]);
        assert!(matches!(
            run_jpm_search(&t, &q, Schedule::FixedOptimal, Mode::Full, 0, SearchOptions::default()),
            Err(Error::QubitCapExceeded {
                required: 18,
                available: 16
            })
        ));
    }

    #[test]
    fn single_register_full_mode_is_compressed_mode() {
        let (t, q) = pair(b"ab", b"aababbba", b"b");
        for seed in 0..20 {
            let c = run_jpm_search(
                &t,
                &q,
                Schedule::MateusRandom,
                Mode::Compressed,
                seed,
                SearchOptions::default(),
            )
            .unwrap();
            let f = run_jpm_search(
                &t,
                &q,
                Schedule::MateusRandom,
                Mode::Full,
                seed,
                SearchOptions::default(),
            )
            .unwrap();
            assert_eq!(c.measured_position, f.measured_position);
            assert_eq!(c.oracle_calls, f.oracle_calls);
        }
    }

    #[test]
    fn seeded_runs_are_reproducible() {
        let (t, q) = pair(b"acgt", b"acgtgcatacggatcgatgcaatt", b"gcat");
        let s = Schedule::Bbht(Default::default());
        let a = run_jpm_search(&t, &q, s, Mode::Compressed, 77, SearchOptions::default()).unwrap();
        let b = run_jpm_search(&t, &q, s, Mode::Compressed, 77, SearchOptions::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn closest_match_forced_zero_rounds_measures_uniform_windows() {
        let (w, p) = pair(b"ab", b"aaab", b"ab");
        let o = run_closest_match(&w, &p, Mode::Compressed, 5, Some(0), SearchOptions::default()).unwrap();
        assert_eq!(o.oracle_calls, 0);
        assert!((1..=3).contains(&o.measured_position));
        assert_eq!(o.t, 1);
    }
}
