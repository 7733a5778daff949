use rand::distributions::{Distribution, WeightedIndex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{CompressedState, FullState, QuantumState};
use crate::error::{Error, Result};

/// Name of the generator behind every seeded draw, recorded in run metadata.
pub const GENERATOR_NAME: &str = "rand_chacha::ChaCha8Rng (seed_from_u64)";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeasurementSample {
    /// 1-based first-register value.
    pub outcome: usize,
    pub shot_index: usize,
    pub seed: u64,
}

/// Draws one first-register outcome (1-based) without collapsing the state.
pub fn sample_first_register<S: QuantumState, R: Rng + ?Sized>(state: &S, rng: &mut R) -> Result<usize> {
    state.check_normalized()?;
    let dist = WeightedIndex::new(state.first_register_distribution())
        .map_err(|e| Error::invalid(format!("cannot sample state: {e}")))?;
    Ok(dist.sample(rng) + 1)
}

/// `shots` i.i.d. samples of the first register. The stored state is left
/// untouched; every shot resamples the same distribution.
pub fn measure_first_register<S: QuantumState>(state: &S, seed: u64, shots: usize) -> Result<Vec<MeasurementSample>> {
    if shots == 0 {
        return Err(Error::invalid("shots must be at least 1"));
    }
    state.check_normalized()?;
    let dist = WeightedIndex::new(state.first_register_distribution())
        .map_err(|e| Error::invalid(format!("cannot sample state: {e}")))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..shots)
        .map(|shot_index| MeasurementSample {
            outcome: dist.sample(&mut rng) + 1,
            shot_index,
            seed,
        })
        .collect())
}

/// Total first-register probability of the given 1-based outcomes.
/// Repeated positions count once.
pub fn probability_of_set<S: QuantumState>(state: &S, positions: &[usize]) -> Result<f64> {
    let dist = state.first_register_distribution();
    let mut sorted = positions.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut p = 0.0;
    for &k in &sorted {
        if k == 0 || k > dist.len() {
            return Err(Error::PositionOutOfRange {
                position: k,
                max: dist.len(),
            });
        }
        p += dist[k - 1];
    }
    Ok(p.clamp(0.0, 1.0))
}

/// Euclidean norm of the amplitude difference.
pub fn l2_distance<A: QuantumState, B: QuantumState>(a: &A, b: &B) -> Result<f64> {
    let (x, y) = (a.amplitudes(), b.amplitudes());
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch {
            expected: x.len(),
            found: y.len(),
        });
    }
    Ok(x.iter().zip(y).map(|(p, q)| (p - q).norm_sqr()).sum::<f64>().sqrt())
}

/// Debug dump: metadata plus `[re, im]` pairs in basis order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StateDump {
    pub metadata: StateMetadata,
    pub amplitudes: Vec<[f64; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum StateMetadata {
    Compressed { n: usize },
    Full { s: usize, registers: usize },
}

fn pairs<S: QuantumState>(state: &S) -> Vec<[f64; 2]> {
    state.amplitudes().iter().map(|a| [a.re, a.im]).collect()
}

impl From<&CompressedState> for StateDump {
    fn from(s: &CompressedState) -> Self {
        Self {
            metadata: StateMetadata::Compressed { n: s.len() },
            amplitudes: pairs(s),
        }
    }
}

impl From<&FullState> for StateDump {
    fn from(s: &FullState) -> Self {
        Self {
            metadata: StateMetadata::Full {
                s: s.qubits_per_register(),
                registers: s.registers(),
            },
            amplitudes: pairs(s),
        }
    }
}
