use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::classic::run_classic;
use super::gates::gate_report;
use crate::circuit::{
    build_cyclic_window_prep, compare_to_eq5, cyclic_window_superposition, decompose_mcx, execute, mcx_elementary_cost,
    Circuit, Gate,
};
use crate::error::Result;
use crate::grover::{amplify, success_probability_closed_form};
use crate::state::{
    l2_distance, probability_of_set, Amplitude, CompressedState, FullState, QuantumState, DEFAULT_QUBIT_CAP,
};
use crate::text::{fingerprint, ParikhVector, PrimeCodec, SymbolString};
use crate::translation::{partitions_agree, Agreement, WindowTable};

const TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Swap the prime codec for a composite one so the fingerprint check
    /// must fail.
    pub sabotage: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// Worst observed value (a distance, a ratio or a failure count).
    pub measured: f64,
    pub bound: f64,
    pub detail: String,
}

impl CheckResult {
    fn at_most(name: &str, measured: f64, bound: f64, detail: impl Into<String>) -> Self {
        Self {
            name: name.to_owned(),
            passed: measured <= bound,
            measured,
            bound,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Runs every cross-module consistency check.
pub fn run_verification(options: VerifyOptions) -> Result<VerifyReport> {
    let codec = if options.sabotage {
        PrimeCodec::with_codes_unchecked(vec![2, 8, 4, 3])
    } else {
        PrimeCodec::first_primes(4)
    };
    Ok(VerifyReport {
        checks: vec![
            check_fingerprint_theorem(&codec, 6)?,
            check_window_states()?,
            check_prep_circuit()?,
            check_closed_form(64, 20)?,
            check_classical_baselines(200, 0x5eed)?,
            check_mcx_decomposition(4)?,
            check_gate_fit()?,
        ],
    })
}

/// Every string of length `1..=max_len` over 4 symbols: equal Parikh vectors
/// exactly when fingerprints are equal.
fn check_fingerprint_theorem(codec: &PrimeCodec, max_len: usize) -> Result<CheckResult> {
    let sigma = codec.len();
    let mut failures = 0usize;
    let mut detail = format!("codes {:?}", codec.codes());
    for len in 1..=max_len {
        let total = sigma.pow(len as u32);
        let mut parikh = Vec::with_capacity(total);
        let mut prints = Vec::with_capacity(total);
        for code in 0..total {
            let s = SymbolString::new(nth_string(code, len, sigma), sigma)?;
            parikh.push(ParikhVector::of(&s));
            prints.push(fingerprint(&s, codec)?);
        }
        if let Agreement::Disagree { first, second } = partitions_agree(&parikh, &prints)? {
            if failures == 0 {
                let show = |i: usize| letters(&nth_string(i - 1, len, sigma));
                detail = format!("{detail}; witness {} vs {}", show(first), show(second));
            }
            failures += 1;
        }
    }
    Ok(CheckResult::at_most(
        "fingerprint_theorem",
        failures as f64,
        0.0,
        detail,
    ))
}

/// The `index`-th string of length `len` in little-endian base `sigma`.
fn nth_string(mut index: usize, len: usize, sigma: usize) -> Vec<u8> {
    let mut symbols = Vec::with_capacity(len);
    for _ in 0..len {
        symbols.push((index % sigma) as u8);
        index /= sigma;
    }
    symbols
}

fn letters(symbols: &[u8]) -> String {
    symbols.iter().map(|&s| (b'a' + s) as char).collect()
}

/// The injected window superposition has exactly the expected support.
fn check_window_states() -> Result<CheckResult> {
    let mut worst = 0.0f64;
    for s in 1..=4 {
        let n = 1usize << s;
        for m in 1..=n {
            if s * m > DEFAULT_QUBIT_CAP {
                break;
            }
            let state = FullState::window_superposition(n, m, DEFAULT_QUBIT_CAP)?;
            let expected = 1.0 / ((n - m + 1) as f64).sqrt();
            for (i, a) in state.amplitudes().iter().enumerate() {
                let tuple = state.tuple_of(i);
                let is_window = tuple.windows(2).all(|w| w[1] == w[0] + 1);
                let want = if is_window { expected } else { 0.0 };
                worst = worst.max((a - Amplitude::new(want, 0.0)).norm());
            }
        }
    }
    Ok(CheckResult::at_most(
        "window_state",
        worst,
        TOLERANCE,
        "s<=4, all M with s*M<=16",
    ))
}

/// The preparation circuit reproduces the cyclic superposition, and differs
/// from the linear one only through the `M - 1` wrapping windows.
fn check_prep_circuit() -> Result<CheckResult> {
    let mut worst = 0.0f64;
    let mut boundary_errors = 0usize;
    for s in 1..=3 {
        for m in 1..=3 {
            let circuit = build_cyclic_window_prep(s, m, DEFAULT_QUBIT_CAP)?;
            let out = execute(&circuit, &FullState::zero(s, m, DEFAULT_QUBIT_CAP)?)?;
            let analytic = cyclic_window_superposition(s, m, DEFAULT_QUBIT_CAP)?;
            worst = worst.max(l2_distance(&out, &analytic)?);
            if m <= 1 << s {
                let cmp = compare_to_eq5(s, m, DEFAULT_QUBIT_CAP)?;
                if cmp.boundary_window_count != m - 1 {
                    boundary_errors += 1;
                }
            }
        }
    }
    let detail = format!("s<=3, M<=3; boundary count mismatches: {boundary_errors}");
    let mut result = CheckResult::at_most("prep_circuit", worst, TOLERANCE, detail);
    result.passed &= boundary_errors == 0;
    Ok(result)
}

/// Simulated compressed amplification against `sin²((2r+1)θ)`.
fn check_closed_form(max_n: usize, max_rounds: usize) -> Result<CheckResult> {
    let mut worst = 0.0f64;
    for n in 1..=max_n {
        for t in 1..=n {
            let marked: Vec<usize> = (1..=t).collect();
            let mut state = CompressedState::window_superposition(n)?;
            for r in 0..=max_rounds {
                if r > 0 {
                    amplify(&mut state, &marked, 1);
                }
                let p = probability_of_set(&state, &marked)?;
                worst = worst.max((p - success_probability_closed_form(n, t, r)).abs());
            }
        }
    }
    Ok(CheckResult::at_most(
        "closed_form",
        worst,
        TOLERANCE,
        format!("n<={max_n}, 1<=t<=n, r<={max_rounds}"),
    ))
}

/// Sliding window, jumbled index and fingerprint table give one answer.
fn check_classical_baselines(instances: usize, seed: u64) -> Result<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0usize;
    for _ in 0..instances {
        let sigma = rng.gen_range(1..=4);
        let n = rng.gen_range(1..=64);
        let m = rng.gen_range(1..=n);
        let text = SymbolString::new((0..n).map(|_| rng.gen_range(0..sigma) as u8).collect(), sigma)?;
        let pattern = SymbolString::new((0..m).map(|_| rng.gen_range(0..sigma) as u8).collect(), sigma)?;
        let report = run_classic(&text, &pattern, false)?;
        let table = WindowTable::build(&text, m, &PrimeCodec::first_primes(sigma))?;
        if !report.agree || table.marked_set_for_pattern(&pattern)? != report.sliding_window {
            failures += 1;
        }
    }
    Ok(CheckResult::at_most(
        "classical_baselines",
        failures as f64,
        0.0,
        format!("{instances} random instances, N<=64, |alphabet|<=4"),
    ))
}

/// Each decomposed MCX acts as the ideal gate on every basis state.
fn check_mcx_decomposition(max_controls: usize) -> Result<CheckResult> {
    let mut worst = 0.0f64;
    let mut cost_errors = 0usize;
    for c in 1..=max_controls {
        let width = c + 1;
        let controls: Vec<usize> = (0..c).collect();
        let gates = decompose_mcx(&controls, c);
        if gates.len() != mcx_elementary_cost(c) {
            cost_errors += 1;
        }
        let mut circuit = Circuit::new(width);
        circuit.extend(gates)?;
        let mut ideal = Circuit::new(width);
        ideal.push(Gate::controlled_x(&controls, c))?;
        for basis in 0..1usize << width {
            let mut amps = vec![Amplitude::new(0.0, 0.0); 1 << width];
            amps[basis] = Amplitude::new(1.0, 0.0);
            let input = FullState::from_amplitudes(width, 1, amps, DEFAULT_QUBIT_CAP)?;
            let got = execute(&circuit, &input)?;
            let want = execute(&ideal, &input)?;
            worst = worst.max(l2_distance(&got, &want)?);
        }
    }
    let detail = format!("controls<={max_controls}; cost table mismatches: {cost_errors}");
    let mut result = CheckResult::at_most("mcx_decomposition", worst, TOLERANCE, detail);
    result.passed &= cost_errors == 0;
    Ok(result)
}

/// Decomposed preparation cost stays within `2·C·M·s³`.
fn check_gate_fit() -> Result<CheckResult> {
    let report = gate_report(&[1, 2, 3, 4], &[1, 2, 3])?;
    Ok(CheckResult::at_most(
        "gate_fit",
        report.max_ratio,
        2.0,
        format!("C = {:.4}", report.fitted_c),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn honest_run_passes() {
        let report = run_verification(VerifyOptions::default()).unwrap();
        for c in &report.checks {
            assert!(c.passed, "{c:?}");
        }
    }

    #[test]
    fn sabotage_fails_only_the_theorem() {
        let report = run_verification(VerifyOptions { sabotage: true }).unwrap();
        assert!(!report.passed());
        let failed: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name.as_str())
            .collect();
        assert_eq!(failed, ["fingerprint_theorem"]);
        assert!(report.checks[0].detail.contains("witness"));
    }
}
