use num_complex::Complex64;

use super::gate::{execute, Circuit, Gate};
use crate::error::{Error, Result};
use crate::state::{l2_distance, FullState};

/// How register `j` (0-based) receives its offset `+j`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum IncrementStrategy {
    /// Copy register 0 into every register with a CNOT chain, then apply `j`
    /// separate `+1` passes to register `j`. `M(M-1)/2` incrementers.
    #[default]
    Repeated,
    /// Copy register `j-1` (already holding `k + j - 1`) into register `j`
    /// and apply a single `+1`. `M-1` incrementers.
    Chained,
}

/// Circuit that maps `|0...0>` to
/// `2^{-s/2} Σ_{k<2^s} |k, k+1, ..., k+M-1>` with every value taken mod `2^s`.
pub fn build_cyclic_window_prep(s: usize, registers: usize, cap: usize) -> Result<Circuit> {
    build_cyclic_window_prep_with(s, registers, cap, IncrementStrategy::default())
}

pub fn build_cyclic_window_prep_with(
    s: usize,
    registers: usize,
    cap: usize,
    strategy: IncrementStrategy,
) -> Result<Circuit> {
    if s == 0 || registers == 0 {
        return Err(Error::invalid("preparation needs s >= 1 and M >= 1"));
    }
    let width = s * registers;
    if width > cap {
        return Err(Error::QubitCapExceeded {
            required: width,
            available: cap,
        });
    }
    let mut c = Circuit::new(width);
    for q in 0..s {
        c.push(Gate::h(q))?;
    }
    match strategy {
        IncrementStrategy::Repeated => {
            for j in 1..registers {
                copy_register(&mut c, s, j - 1, j)?;
            }
            for j in 1..registers {
                for _ in 0..j {
                    increment(&mut c, s, j)?;
                }
            }
        }
        IncrementStrategy::Chained => {
            for j in 1..registers {
                copy_register(&mut c, s, j - 1, j)?;
                increment(&mut c, s, j)?;
            }
        }
    }
    Ok(c)
}

fn copy_register(c: &mut Circuit, s: usize, from: usize, to: usize) -> Result<()> {
    for b in 0..s {
        c.push(Gate::cnot(from * s + b, to * s + b))?;
    }
    Ok(())
}

/// `+1 mod 2^s` on register `reg`: flip bit `i` when all lower bits are
/// set, from the top bit down, then flip the lowest bit.
fn increment(c: &mut Circuit, s: usize, reg: usize) -> Result<()> {
    let base = reg * s;
    for i in (1..s).rev() {
        let controls: Vec<usize> = (base..base + i).collect();
        c.push(Gate::controlled_x(&controls, base + i))?;
    }
    c.push(Gate::x(base))
}

/// The state the preparation circuit should produce, written down directly.
pub fn cyclic_window_superposition(s: usize, registers: usize, cap: usize) -> Result<FullState> {
    let zero = FullState::zero(s, registers, cap)?;
    let dim = zero.register_dim();
    let a = Complex64::new(1.0 / (dim as f64).sqrt(), 0.0);
    let mut amps = vec![Complex64::new(0.0, 0.0); zero.dimension()];
    for k in 0..dim {
        let tuple: Vec<usize> = (k..k + registers).collect();
        amps[zero.index_of(&tuple)] = a;
    }
    FullState::from_amplitudes(s, registers, amps, cap)
}

#[derive(Clone, Debug)]
pub struct PrepComparison {
    /// Output of the preparation circuit (all `2^s` cyclic windows).
    pub cyclic_state: FullState,
    /// The linear window superposition over `N - M + 1` windows.
    pub eq5_state: FullState,
    pub l2_distance: f64,
    /// Cyclic windows that wrap past the end of the text.
    pub boundary_window_count: usize,
}

/// Runs the circuit for `(s, M)` and measures how far its cyclic output is
/// from the linear window superposition for `N = 2^s`.
pub fn compare_to_eq5(s: usize, registers: usize, cap: usize) -> Result<PrepComparison> {
    let circuit = build_cyclic_window_prep(s, registers, cap)?;
    let cyclic_state = execute(&circuit, &FullState::zero(s, registers, cap)?)?;
    let n = 1usize << s;
    let eq5_state = FullState::window_superposition(n, registers, cap)?;
    let boundary_window_count = (0..n).filter(|k| k + registers > n).count();
    let l2_distance = l2_distance(&cyclic_state, &eq5_state)?;
    Ok(PrepComparison {
        cyclic_state,
        eq5_state,
        l2_distance,
        boundary_window_count,
    })
}
