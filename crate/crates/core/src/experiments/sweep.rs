use std::io::Write;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::instance::plant_instance;
use super::meta::{trial_seed, RunMetadata};
use crate::error::{Error, Result};
use crate::grover::{run_jpm_search, Mode, Schedule, SearchOptions};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatchCount {
    /// Exactly one planted match.
    Unique,
    /// `t = max(1, round(density * n))` planted matches, `n` the window count.
    Density(f64),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    /// Text lengths, strictly increasing.
    pub n_list: Vec<usize>,
    pub pattern_len: usize,
    pub alphabet_size: usize,
    pub matches: MatchCount,
    pub trials: usize,
    pub seed: u64,
    pub schedule: Schedule,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            n_list: (6..=12).map(|e| 1 << e).collect(),
            pattern_len: 8,
            alphabet_size: 4,
            matches: MatchCount::Unique,
            trials: 25,
            seed: 0,
            schedule: Schedule::FixedOptimal,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepPoint {
    pub text_len: usize,
    pub windows: usize,
    pub t: usize,
    pub trials: usize,
    pub median_oracle_calls: f64,
    pub mean_oracle_calls: f64,
    pub success_rate: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LogLogFit {
    pub slope: f64,
    pub intercept: f64,
    /// Root-mean-square residual in log space.
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub metadata: RunMetadata,
    pub config: SweepConfig,
    pub points: Vec<SweepPoint>,
    pub fit: LogLogFit,
}

/// Least-squares line through `(ln x, ln y)`.
pub fn fit_loglog_slope(xs: &[f64], ys: &[f64]) -> Result<LogLogFit> {
    if xs.len() != ys.len() || xs.len() < 3 {
        return Err(Error::invalid("a log-log fit needs at least 3 points"));
    }
    if xs.iter().chain(ys).any(|&v| v <= 0.0 || !v.is_finite()) {
        return Err(Error::invalid("log-log fit needs positive finite values"));
    }
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let k = lx.len() as f64;
    let mx = lx.iter().sum::<f64>() / k;
    let my = ly.iter().sum::<f64>() / k;
    let sxx: f64 = lx.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let residual = (lx
        .iter()
        .zip(&ly)
        .map(|(x, y)| (y - (slope * x + intercept)).powi(2))
        .sum::<f64>()
        / k)
        .sqrt();
    Ok(LogLogFit {
        slope,
        intercept,
        residual,
    })
}

fn median(values: &mut [usize]) -> f64 {
    values.sort_unstable();
    let n = values.len();
    if n % 2 == 1 {
        values[n / 2] as f64
    } else {
        (values[n / 2 - 1] + values[n / 2]) as f64 / 2.0
    }
}

/// Plants fresh instances at every text length, runs one compressed-mode
/// search per instance and fits the growth of the median oracle calls.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport> {
    if config.n_list.len() < 3 {
        return Err(Error::invalid("a sweep needs at least 3 text lengths"));
    }
    if config.n_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::invalid("text lengths must be strictly increasing"));
    }
    if config.trials == 0 {
        return Err(Error::invalid("trials must be at least 1"));
    }
    if let MatchCount::Density(d) = config.matches {
        if !(d > 0.0 && d <= 1.0) {
            return Err(Error::invalid("match density must lie in (0, 1]"));
        }
    }
    let mut points = Vec::with_capacity(config.n_list.len());
    for (p, &text_len) in config.n_list.iter().enumerate() {
        if config.pattern_len > text_len {
            return Err(Error::PatternTooLong {
                pattern: config.pattern_len,
                text: text_len,
            });
        }
        let windows = text_len - config.pattern_len + 1;
        let t = match config.matches {
            MatchCount::Unique => 1,
            MatchCount::Density(d) => ((d * windows as f64).round() as usize).max(1),
        };
        let outcomes = (0..config.trials)
            .into_par_iter()
            .map(|j| {
                let seed = trial_seed(config.seed, p * config.trials + j);
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let inst = plant_instance(text_len, config.pattern_len, config.alphabet_size, t, &mut rng)?;
                run_jpm_search(
                    &inst.text,
                    &inst.pattern,
                    config.schedule,
                    Mode::Compressed,
                    seed,
                    SearchOptions::default(),
                )
            })
            .collect::<Result<Vec<_>>>()?;
        let mut calls: Vec<usize> = outcomes.iter().map(|o| o.oracle_calls).collect();
        let mean = calls.iter().sum::<usize>() as f64 / calls.len() as f64;
        points.push(SweepPoint {
            text_len,
            windows,
            t,
            trials: config.trials,
            median_oracle_calls: median(&mut calls),
            mean_oracle_calls: mean,
            success_rate: outcomes.iter().filter(|o| o.is_match).count() as f64 / config.trials as f64,
        });
    }
    let xs: Vec<f64> = points.iter().map(|p| p.text_len as f64).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.median_oracle_calls).collect();
    let fit = fit_loglog_slope(&xs, &ys)?;
    Ok(SweepReport {
        metadata: RunMetadata::new(config.seed, config),
        config: config.clone(),
        points,
        fit,
    })
}

impl SweepReport {
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        for p in &self.points {
            w.serialize(p)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn summary_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_power_law_slope() {
        let xs = [4.0, 16.0, 64.0, 256.0];
        let ys: Vec<f64> = xs.iter().map(|x: &f64| 3.0 * x.sqrt()).collect();
        let fit = fit_loglog_slope(&xs, &ys).unwrap();
        assert!((fit.slope - 0.5).abs() < 1e-12);
        assert!((fit.intercept - 3f64.ln()).abs() < 1e-12);
        assert!(fit.residual < 1e-12);
    }

    #[test]
    fn degenerate_fits_rejected() {
        assert!(fit_loglog_slope(&[1.0, 2.0], &[1.0, 2.0]).is_err());
        assert!(fit_loglog_slope(&[1.0, 2.0, 3.0], &[1.0, 0.0, 2.0]).is_err());
        let cfg = SweepConfig {
            n_list: vec![64],
            ..SweepConfig::default()
        };
        assert!(run_sweep(&cfg).is_err());
        let cfg = SweepConfig {
            n_list: vec![64, 32, 128],
            ..SweepConfig::default()
        };
        assert!(run_sweep(&cfg).is_err());
    }

    #[test]
    fn medians() {
        assert_eq!(median(&mut [3, 1, 2]), 2.0);
        assert_eq!(median(&mut [4, 1, 2, 3]), 2.5);
    }

    #[test]
    fn constant_density_gives_flat_slope() {
        let cfg = SweepConfig {
            n_list: vec![64, 128, 256, 512],
            pattern_len: 4,
            matches: MatchCount::Density(1.0 / 16.0),
            trials: 5,
            seed: 9,
            ..SweepConfig::default()
        };
        let report = run_sweep(&cfg).unwrap();
        assert!(report.fit.slope.abs() < 0.1, "{:?}", report.fit);
    }
}
