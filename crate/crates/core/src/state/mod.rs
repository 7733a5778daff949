//! Amplitude vectors for the window superposition and seeded sampling of
//! the first register.
//!
//! Two representations are kept side by side:
//!
//! * [`CompressedState`] has one amplitude per window start `k` (dimension
//!   `n = N - M + 1`). It is the subspace the window superposition lives in.
//! * [`FullState`] holds `M` registers of `s` qubits each, dimension
//!   `2^(s*M)`. Qubit `q` is bit `q` of the basis index, so register `j`
//!   (0-based) occupies bits `s*j .. s*j + s` with its least significant
//!   bit first, and register 0 is the "first register" that gets measured.
//!
//! Register values are 0-based inside the vector; window start `k` (1-based)
//! is stored as value `k - 1`.

mod compressed;
pub(crate) mod full;
mod measure;

pub use compressed::CompressedState;
pub use full::FullState;
pub use measure::{
    l2_distance, measure_first_register, probability_of_set, sample_first_register, MeasurementSample, StateDump,
    GENERATOR_NAME,
};

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type Amplitude = Complex64;

/// Allowed deviation of the squared norm from 1.
pub const NORM_TOLERANCE: f64 = 1e-9;

/// Default largest `s * M` a full state may use (65 536 amplitudes).
pub const DEFAULT_QUBIT_CAP: usize = 16;

/// Common read access used by measurement and comparisons.
pub trait QuantumState {
    fn amplitudes(&self) -> &[Amplitude];

    /// Probability of each first-register outcome, outcome `i` at index
    /// `i - 1`.
    fn first_register_distribution(&self) -> Vec<f64>;

    fn norm_sqr(&self) -> f64 {
        self.amplitudes().iter().map(|a| a.norm_sqr()).sum()
    }

    fn check_normalized(&self) -> Result<()> {
        let norm_sqr = self.norm_sqr();
        if (norm_sqr - 1.0).abs() > NORM_TOLERANCE || !norm_sqr.is_finite() {
            return Err(Error::Unnormalized { norm_sqr });
        }
        Ok(())
    }
}

pub(crate) fn check_finite(amps: &[Amplitude]) -> Result<()> {
    if amps.iter().all(|a| a.re.is_finite() && a.im.is_finite()) {
        Ok(())
    } else {
        Err(Error::invalid("amplitudes must be finite"))
    }
}
