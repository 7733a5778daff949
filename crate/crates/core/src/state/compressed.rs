use num_complex::Complex64;

use super::{check_finite, Amplitude, QuantumState};
use crate::error::{Error, Result};

/// One amplitude per window start position.
#[derive(Clone, Debug, PartialEq)]
pub struct CompressedState {
    amps: Vec<Amplitude>,
}

impl CompressedState {
    /// Equal amplitude `1/sqrt(n)` on every window.
    pub fn window_superposition(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("no windows: the pattern is longer than the text"));
        }
        let a = Complex64::new(1.0 / (n as f64).sqrt(), 0.0);
        Ok(Self { amps: vec![a; n] })
    }

    /// Validated state: finite and normalized within tolerance.
    pub fn from_amplitudes(amps: Vec<Amplitude>) -> Result<Self> {
        if amps.is_empty() {
            return Err(Error::EmptyInput);
        }
        check_finite(&amps)?;
        let s = Self { amps };
        s.check_normalized()?;
        Ok(s)
    }

    pub fn from_real(amps: &[f64]) -> Result<Self> {
        Self::from_amplitudes(amps.iter().map(|&r| Complex64::new(r, 0.0)).collect())
    }

    /// Basis state `|k>` for 1-based `k`.
    pub fn basis(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::PositionOutOfRange { position: k, max: n });
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); n];
        amps[k - 1] = Complex64::new(1.0, 0.0);
        Ok(Self { amps })
    }

    pub fn len(&self) -> usize {
        self.amps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amps.is_empty()
    }

    pub(crate) fn amplitudes_mut(&mut self) -> &mut [Amplitude] {
        &mut self.amps
    }
}

impl QuantumState for CompressedState {
    fn amplitudes(&self) -> &[Amplitude] {
        &self.amps
    }

    fn first_register_distribution(&self) -> Vec<f64> {
        self.amps.iter().map(|a| a.norm_sqr()).collect()
    }
}
