use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::text::{sliding_window_matches, SymbolString};

/// A random text with exactly `t` jumbled occurrences of a random pattern.
#[derive(Clone, Debug)]
pub struct PlantedInstance {
    pub text: SymbolString,
    pub pattern: SymbolString,
    /// Sorted 1-based start positions of the planted occurrences.
    pub planted: Vec<usize>,
}

/// Draws a uniform text over `alphabet_size` symbols, overwrites `t`
/// non-adjacent windows with random permutations of a random pattern, then
/// re-draws single free symbols inside any accidental match until exactly
/// the planted windows match.
pub fn plant_instance<R: Rng + ?Sized>(
    text_len: usize,
    pattern_len: usize,
    alphabet_size: usize,
    t: usize,
    rng: &mut R,
) -> Result<PlantedInstance> {
    if !(2..=256).contains(&alphabet_size) {
        return Err(Error::invalid("planting needs an alphabet of 2 to 256 symbols"));
    }
    if pattern_len == 0 || t == 0 {
        return Err(Error::invalid("pattern length and match count must be positive"));
    }
    // t windows separated by at least one free symbol
    let needed = t * pattern_len + (t - 1);
    if needed > text_len {
        return Err(Error::invalid(format!(
            "{t} separated windows of length {pattern_len} do not fit a text of length {text_len}"
        )));
    }
    for _ in 0..MAX_DRAWS {
        if let Some(inst) = try_plant(text_len, pattern_len, alphabet_size, t, needed, rng)? {
            return Ok(inst);
        }
    }
    Err(Error::invalid(
        "could not remove stray matches; try a longer pattern or larger alphabet",
    ))
}

const MAX_DRAWS: usize = 64;

fn try_plant<R: Rng + ?Sized>(
    text_len: usize,
    pattern_len: usize,
    alphabet_size: usize,
    t: usize,
    needed: usize,
    rng: &mut R,
) -> Result<Option<PlantedInstance>> {
    let sym = |rng: &mut R| rng.gen_range(0..alphabet_size) as u8;
    let pattern: Vec<u8> = (0..pattern_len).map(|_| sym(rng)).collect();
    let mut text: Vec<u8> = (0..text_len).map(|_| sym(rng)).collect();

    // stars and bars: distribute the slack among t + 1 gaps
    let slack = text_len - needed;
    let mut cuts: Vec<usize> = (0..t).map(|_| rng.gen_range(0..=slack)).collect();
    cuts.sort_unstable();
    let mut planted = Vec::with_capacity(t);
    let mut is_planted = vec![false; text_len];
    for (i, &cut) in cuts.iter().enumerate() {
        let start = cut + i * (pattern_len + 1);
        let mut window = pattern.clone();
        window.shuffle(rng);
        text[start..start + pattern_len].copy_from_slice(&window);
        is_planted[start..start + pattern_len].fill(true);
        planted.push(start + 1);
    }

    let pattern = SymbolString::new(pattern, alphabet_size)?;
    let max_rounds = 4 * text_len.max(16);
    for _ in 0..max_rounds {
        let current = SymbolString::new(text.clone(), alphabet_size)?;
        let matches = sliding_window_matches(&current, &pattern)?;
        let stray: Vec<usize> = matches
            .into_iter()
            .filter(|k| planted.binary_search(k).is_err())
            .collect();
        let Some(&k) = stray.choose(rng) else {
            return Ok(Some(PlantedInstance {
                text: current,
                pattern,
                planted,
            }));
        };
        let free: Vec<usize> = (k - 1..k - 1 + pattern_len).filter(|&i| !is_planted[i]).collect();
        let &i = free.choose(rng).expect("a stray window always covers a free symbol");
        let old = text[i];
        let new = (old as usize + rng.gen_range(1..alphabet_size)) % alphabet_size;
        text[i] = new as u8;
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn exactly_t_matches() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for (n, m, sigma, t) in [
            (64, 4, 4, 1),
            (128, 6, 3, 5),
            (512, 8, 4, 1),
            (40, 3, 2, 3),
            (9, 4, 2, 2),
        ] {
            for _ in 0..10 {
                let inst = plant_instance(n, m, sigma, t, &mut rng).unwrap();
                assert_eq!(inst.text.len(), n);
                assert_eq!(sliding_window_matches(&inst.text, &inst.pattern).unwrap(), inst.planted);
            }
        }
    }

    #[test]
    fn infeasible_requests_rejected() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert!(plant_instance(10, 4, 4, 3, &mut rng).is_err());
        assert!(plant_instance(10, 4, 1, 1, &mut rng).is_err());
        assert!(plant_instance(10, 0, 4, 1, &mut rng).is_err());
    }
}
