use num_complex::Complex64;

use super::{check_finite, Amplitude, QuantumState};
use crate::error::{Error, Result};

/// `M` registers of `s` qubits each; see the module docs for the bit layout.
#[derive(Clone, Debug, PartialEq)]
pub struct FullState {
    qubits_per_register: usize,
    registers: usize,
    amps: Vec<Amplitude>,
}

fn check_layout(s: usize, registers: usize, cap: usize) -> Result<()> {
    if s == 0 || registers == 0 {
        return Err(Error::invalid("full state needs s >= 1 and M >= 1"));
    }
    let required = s.checked_mul(registers).ok_or(Error::QubitCapExceeded {
        required: usize::MAX,
        available: cap,
    })?;
    if required > cap {
        return Err(Error::QubitCapExceeded {
            required,
            available: cap,
        });
    }
    Ok(())
}

/// `log2(n)` when `n` is a power of two of at least 2.
pub(crate) fn exact_log2(n: usize) -> Result<usize> {
    if n < 2 || !n.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(n));
    }
    Ok(n.trailing_zeros() as usize)
}

impl FullState {
    /// All qubits in `|0>`.
    pub fn zero(qubits_per_register: usize, registers: usize, cap: usize) -> Result<Self> {
        check_layout(qubits_per_register, registers, cap)?;
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << (qubits_per_register * registers)];
        amps[0] = Complex64::new(1.0, 0.0);
        Ok(Self {
            qubits_per_register,
            registers,
            amps,
        })
    }

    /// `sum_k |k, k+1, ..., k+M-1> / sqrt(N-M+1)` over the `N-M+1` windows of
    /// a text of length `text_len = N = 2^s`, injected amplitude by amplitude.
    pub fn window_superposition(text_len: usize, window: usize, cap: usize) -> Result<Self> {
        let s = exact_log2(text_len)?;
        if window == 0 || window > text_len {
            return Err(Error::WindowSizeOutOfRange { window, text: text_len });
        }
        let mut state = Self::zero(s, window, cap)?;
        state.amps[0] = Complex64::new(0.0, 0.0);
        let windows = text_len - window + 1;
        let a = Complex64::new(1.0 / (windows as f64).sqrt(), 0.0);
        for k in 0..windows {
            let tuple: Vec<usize> = (k..k + window).collect();
            let idx = state.index_of(&tuple);
            state.amps[idx] = a;
        }
        Ok(state)
    }

    /// Builds a state from raw amplitudes in the documented layout.
    pub fn from_amplitudes(
        qubits_per_register: usize,
        registers: usize,
        amps: Vec<Amplitude>,
        cap: usize,
    ) -> Result<Self> {
        check_layout(qubits_per_register, registers, cap)?;
        let dim = 1usize << (qubits_per_register * registers);
        if amps.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: amps.len(),
            });
        }
        check_finite(&amps)?;
        let s = Self {
            qubits_per_register,
            registers,
            amps,
        };
        s.check_normalized()?;
        Ok(s)
    }

    pub fn qubits_per_register(&self) -> usize {
        self.qubits_per_register
    }

    pub fn registers(&self) -> usize {
        self.registers
    }

    /// Total qubit count `s * M`.
    pub fn width(&self) -> usize {
        self.qubits_per_register * self.registers
    }

    /// Values a single register can hold, `2^s`.
    pub fn register_dim(&self) -> usize {
        1 << self.qubits_per_register
    }

    pub fn dimension(&self) -> usize {
        self.amps.len()
    }

    /// Value of 0-based register `register` in basis index `index`.
    pub fn register_value(&self, index: usize, register: usize) -> usize {
        (index >> (self.qubits_per_register * register)) & (self.register_dim() - 1)
    }

    /// Basis index of the tuple `(i_1, ..., i_M)` (0-based values).
    /// Values are reduced modulo `2^s`.
    pub fn index_of(&self, tuple: &[usize]) -> usize {
        debug_assert_eq!(tuple.len(), self.registers);
        let mask = self.register_dim() - 1;
        tuple
            .iter()
            .enumerate()
            .fold(0, |acc, (j, &v)| acc | ((v & mask) << (self.qubits_per_register * j)))
    }

    /// Tuple of register values for a basis index.
    pub fn tuple_of(&self, index: usize) -> Vec<usize> {
        (0..self.registers).map(|j| self.register_value(index, j)).collect()
    }

    pub fn amplitude_at(&self, tuple: &[usize]) -> Amplitude {
        self.amps[self.index_of(tuple)]
    }

    pub(crate) fn amplitudes_mut(&mut self) -> &mut [Amplitude] {
        &mut self.amps
    }
}

impl QuantumState for FullState {
    fn amplitudes(&self) -> &[Amplitude] {
        &self.amps
    }

    fn first_register_distribution(&self) -> Vec<f64> {
        let mask = self.register_dim() - 1;
        let mut dist = vec![0.0; self.register_dim()];
        for (idx, a) in self.amps.iter().enumerate() {
            dist[idx & mask] += a.norm_sqr();
        }
        dist
    }
}
