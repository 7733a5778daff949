use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::state::{Amplitude, CompressedState, FullState};
use crate::text::SymbolString;

/// States that carry a first register a Grover iteration can act on.
pub trait GroverState: crate::state::QuantumState {
    /// Number of first-register values.
    fn first_register_len(&self) -> usize;

    /// Negates every basis state whose first-register value (1-based) is in
    /// `marked`. `marked` must be sorted.
    fn negate_first_register(&mut self, marked: &[usize]);

    /// Reflection about the uniform state on the first register.
    fn reflect_first_register(&mut self);
}

impl GroverState for CompressedState {
    fn first_register_len(&self) -> usize {
        self.len()
    }

    fn negate_first_register(&mut self, marked: &[usize]) {
        let amps = self.amplitudes_mut();
        for &k in marked {
            amps[k - 1] = -amps[k - 1];
        }
    }

    fn reflect_first_register(&mut self) {
        reflect_about_mean(self.amplitudes_mut());
    }
}

impl GroverState for FullState {
    fn first_register_len(&self) -> usize {
        self.register_dim()
    }

    fn negate_first_register(&mut self, marked: &[usize]) {
        let dim = self.register_dim();
        let mut flip = vec![false; dim];
        for &k in marked {
            flip[k - 1] = true;
        }
        for (idx, a) in self.amplitudes_mut().iter_mut().enumerate() {
            if flip[idx & (dim - 1)] {
                *a = -*a;
            }
        }
    }

    fn reflect_first_register(&mut self) {
        let dim = self.register_dim();
        // register 0 is the low bits, so each trailing tuple owns a
        // contiguous slice of length 2^s
        for slice in self.amplitudes_mut().chunks_mut(dim) {
            reflect_about_mean(slice);
        }
    }
}

fn reflect_about_mean(amps: &mut [Amplitude]) {
    let mean = amps.iter().sum::<Complex64>() / amps.len() as f64;
    for a in amps.iter_mut() {
        *a = 2.0 * mean - *a;
    }
}

fn checked_marked(marked: &[usize], max: usize) -> Result<Vec<usize>> {
    let mut sorted = marked.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if let Some(&bad) = sorted.iter().find(|&&k| k == 0 || k > max) {
        return Err(Error::PositionOutOfRange { position: bad, max });
    }
    Ok(sorted)
}

/// `|k> -> (-1)^{[k ∈ marked]} |k>` on the first register (1-based `k`).
pub fn phase_oracle_marked<S: GroverState>(state: &mut S, marked: &[usize]) -> Result<()> {
    let marked = checked_marked(marked, state.first_register_len())?;
    state.negate_first_register(&marked);
    Ok(())
}

/// Each amplitude becomes `2·mean − amp` over the window indices.
pub fn diffusion_compressed(state: &mut CompressedState) {
    state.reflect_first_register();
}

/// `D_N ⊗ I` with `D_N = 2|ψ><ψ| − I` and `|ψ>` uniform over the `N = 2^s`
/// values of the first register.
pub fn diffusion_full_first_register(state: &mut FullState, text_len: usize) -> Result<()> {
    if text_len != state.register_dim() {
        return Err(Error::DimensionMismatch {
            expected: state.register_dim(),
            found: text_len,
        });
    }
    state.reflect_first_register();
    Ok(())
}

/// Negates basis states whose register `register` (1-based) points at a
/// position of `w` holding `symbol`. Register value `v` addresses position
/// `v + 1`; values past the end of `w` never match.
pub fn phase_oracle_symbol(state: &mut FullState, register: usize, symbol: u8, w: &SymbolString) -> Result<()> {
    if register == 0 || register > state.registers() {
        return Err(Error::RegisterOutOfRange {
            register,
            registers: state.registers(),
        });
    }
    if symbol as usize >= w.alphabet_size() {
        return Err(Error::SymbolIndexOutOfRange {
            index: symbol as usize,
            size: w.alphabet_size(),
        });
    }
    let hits: Vec<bool> = (0..state.register_dim())
        .map(|v| w.symbols().get(v) == Some(&symbol))
        .collect();
    let j = register - 1;
    let s = state.qubits_per_register();
    let mask = state.register_dim() - 1;
    for (idx, a) in state.amplitudes_mut().iter_mut().enumerate() {
        if hits[(idx >> (s * j)) & mask] {
            *a = -*a;
        }
    }
    Ok(())
}

/// The register-`j` symbol oracle restricted to the window manifold: window
/// `k` is negated when `w[k + j - 1]` holds `symbol`.
pub fn phase_oracle_window_symbol(
    state: &mut CompressedState,
    register: usize,
    window: usize,
    symbol: u8,
    w: &SymbolString,
) -> Result<()> {
    if register == 0 || register > window {
        return Err(Error::RegisterOutOfRange {
            register,
            registers: window,
        });
    }
    let marked: Vec<usize> = (1..=state.len())
        .filter(|&k| w.at(k + register - 1) == Some(symbol))
        .collect();
    state.negate_first_register(&marked);
    Ok(())
}

/// `r` rounds of oracle followed by diffusion. `marked` must already be
/// validated and sorted.
pub fn amplify<S: GroverState>(state: &mut S, marked: &[usize], rounds: usize) {
    for _ in 0..rounds {
        state.negate_first_register(marked);
        state.reflect_first_register();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::{QuantumState, DEFAULT_QUBIT_CAP};
    use crate::text::Alphabet;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_compressed(n: usize, seed: u64) -> CompressedState {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let raw: Vec<Complex64> = (0..n)
            .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let norm = raw.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        CompressedState::from_amplitudes(raw.into_iter().map(|a| a / norm).collect()).unwrap()
    }

    fn random_full(s: usize, m: usize, seed: u64) -> FullState {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let dim = 1 << (s * m);
        let raw: Vec<Complex64> = (0..dim)
            .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let norm = raw.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        FullState::from_amplitudes(s, m, raw.into_iter().map(|a| a / norm).collect(), DEFAULT_QUBIT_CAP).unwrap()
    }

    #[test]
    fn marked_oracle_flips_sign() {
        let mut s = CompressedState::window_superposition(4).unwrap();
        phase_oracle_marked(&mut s, &[2]).unwrap();
        let re: Vec<f64> = s.amplitudes().iter().map(|a| a.re).collect();
        assert_eq!(re, vec![0.5, -0.5, 0.5, 0.5]);
    }

    #[test]
    fn empty_marked_set_is_identity_and_oracle_is_involution() {
        let orig = random_compressed(7, 1);
        let mut s = orig.clone();
        phase_oracle_marked(&mut s, &[]).unwrap();
        assert_eq!(s, orig);
        phase_oracle_marked(&mut s, &[1, 5, 7]).unwrap();
        phase_oracle_marked(&mut s, &[1, 5, 7]).unwrap();
        assert!(crate::state::l2_distance(&s, &orig).unwrap() < 1e-12);
    }

    #[test]
    fn marked_oracle_rejects_out_of_range() {
        let mut s = CompressedState::window_superposition(4).unwrap();
        assert!(matches!(
            phase_oracle_marked(&mut s, &[5]),
            Err(Error::PositionOutOfRange { .. })
        ));
        assert!(phase_oracle_marked(&mut s, &[0]).is_err());
    }

    #[test]
    fn symbol_oracle() {
        let a = Alphabet::new(*b"abc").unwrap();
        let w = a.encode(b"ab").unwrap();
        // N = 2, M = 2: s = 1
        let mut amps = vec![Complex64::new(0.0, 0.0); 4];
        let idx_01 = 1 << 1;
        amps[idx_01] = Complex64::new(1.0, 0.0);
        let mut st = FullState::from_amplitudes(1, 2, amps, DEFAULT_QUBIT_CAP).unwrap();
        phase_oracle_symbol(&mut st, 1, 0, &w).unwrap();
        assert_eq!(st.amplitudes()[idx_01], Complex64::new(-1.0, 0.0));

        let orig = random_full(1, 2, 3);
        let mut st = orig.clone();
        phase_oracle_symbol(&mut st, 2, 2, &w).unwrap();
        assert_eq!(st, orig, "absent symbol acts as identity");
        phase_oracle_symbol(&mut st, 2, 1, &w).unwrap();
        phase_oracle_symbol(&mut st, 2, 1, &w).unwrap();
        assert!(crate::state::l2_distance(&st, &orig).unwrap() < 1e-12);

        assert!(matches!(
            phase_oracle_symbol(&mut st, 3, 0, &w),
            Err(Error::RegisterOutOfRange { .. })
        ));
    }

    #[test]
    fn diffusion_basics() {
        let mut u = CompressedState::window_superposition(5).unwrap();
        let orig = u.clone();
        diffusion_compressed(&mut u);
        assert!(crate::state::l2_distance(&u, &orig).unwrap() < 1e-12);

        let mut e1 = CompressedState::basis(2, 1).unwrap();
        diffusion_compressed(&mut e1);
        assert!((e1.amplitudes()[0].re).abs() < 1e-15);
        assert!((e1.amplitudes()[1].re - 1.0).abs() < 1e-15);
    }

    #[test]
    fn diffusions_are_norm_preserving_involutions() {
        for seed in 0..20 {
            let orig = random_compressed(3 + seed as usize, seed);
            let mut s = orig.clone();
            diffusion_compressed(&mut s);
            assert!((s.norm_sqr() - 1.0).abs() < 1e-9);
            diffusion_compressed(&mut s);
            assert!(crate::state::l2_distance(&s, &orig).unwrap() < 1e-12);

            let orig = random_full(2, 3, seed);
            let mut f = orig.clone();
            diffusion_full_first_register(&mut f, 4).unwrap();
            assert!((f.norm_sqr() - 1.0).abs() < 1e-9);
            diffusion_full_first_register(&mut f, 4).unwrap();
            assert!(crate::state::l2_distance(&f, &orig).unwrap() < 1e-12);
        }
    }

    #[test]
    fn full_diffusion_with_one_register_matches_compressed() {
        for seed in 0..5 {
            let f0 = random_full(3, 1, seed);
            let mut f = f0.clone();
            let mut c = CompressedState::from_amplitudes(f0.amplitudes().to_vec()).unwrap();
            diffusion_full_first_register(&mut f, 8).unwrap();
            diffusion_compressed(&mut c);
            assert!(crate::state::l2_distance(&f, &c).unwrap() < 1e-12);
        }
    }

    #[test]
    fn full_diffusion_leaks_off_window_tuples() {
        let mut st = FullState::window_superposition(4, 2, DEFAULT_QUBIT_CAP).unwrap();
        diffusion_full_first_register(&mut st, 4).unwrap();
        // every (i, k+1) for k = 0..3 and every i now carries amplitude
        for k in 0..3 {
            for i in 0..4 {
                assert!(st.amplitude_at(&[i, k + 1]).norm() > 1e-3, "tuple ({i}, {})", k + 1);
            }
        }
        let leaked: f64 = (0..16)
            .filter(|&idx| {
                let t = st.tuple_of(idx);
                t[1] != t[0] + 1
            })
            .map(|idx| st.amplitudes()[idx].norm_sqr())
            .sum();
        assert!(leaked > 0.5);
        assert!(diffusion_full_first_register(&mut st, 8).is_err());
    }
}
