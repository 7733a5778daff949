use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::alphabet::{Alphabet, SymbolString};
use crate::error::{Error, Result};

/// Product of the prime codes of a string's symbols. Never reduced modulo
/// anything: equality of fingerprints is exactly equality of Parikh vectors
/// only for the unreduced product.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Fingerprint(BigUint);

impl Fingerprint {
    pub fn one() -> Self {
        Self(BigUint::one())
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }

    pub(crate) fn mul_code(&mut self, code: u64) {
        self.0 *= code;
    }

    /// Divides out `code`, panicking if it does not divide the product.
    pub(crate) fn div_code(&mut self, code: u64) {
        let divisor = BigUint::from(code);
        let (q, r) = (&self.0 / &divisor, &self.0 % &divisor);
        assert!(
            r == BigUint::ZERO,
            "fingerprint {} is not divisible by leaving code {code}",
            self.0
        );
        self.0 = q;
    }
}

impl From<u64> for Fingerprint {
    fn from(v: u64) -> Self {
        Self(BigUint::from(v))
    }
}

impl From<BigUint> for Fingerprint {
    fn from(v: BigUint) -> Self {
        Self(v)
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Maps alphabet index `i` to a code, normally the `i`-th prime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeCodec {
    codes: Vec<u64>,
}

impl PrimeCodec {
    /// The first `size` primes: 2, 3, 5, 7, ...
    pub fn first_primes(size: usize) -> Self {
        Self {
            codes: (0..size).map(nth_prime).collect(),
        }
    }

    /// Validated codec: entries prime, strictly increasing, starting at 2.
    pub fn new(codes: Vec<u64>) -> Result<Self> {
        if codes.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut prev = 1;
        for (index, &code) in codes.iter().enumerate() {
            let ok = is_prime(code) && code > prev && (index > 0 || code == 2);
            if !ok {
                return Err(Error::InvalidPrimeCode { index, code });
            }
            prev = code;
        }
        Ok(Self { codes })
    }

    /// Arbitrary positive codes with no primality check. Only useful for
    /// demonstrating what breaks when the codes are not prime.
    pub fn with_codes_unchecked(codes: Vec<u64>) -> Self {
        assert!(codes.iter().all(|&c| c >= 1), "codes must be positive");
        Self { codes }
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn codes(&self) -> &[u64] {
        &self.codes
    }

    pub fn code(&self, symbol: u8) -> u64 {
        self.codes[symbol as usize]
    }

    pub(crate) fn check_aligned(&self, alphabet_size: usize) -> Result<()> {
        if self.codes.len() != alphabet_size {
            return Err(Error::DimensionMismatch {
                expected: alphabet_size,
                found: self.codes.len(),
            });
        }
        Ok(())
    }

    /// `{symbol: code}` as a JSON object, in alphabet order.
    pub fn to_json(&self, alphabet: &Alphabet) -> Result<String> {
        self.check_aligned(alphabet.len())?;
        let mut map = serde_json::Map::new();
        for (&b, &code) in alphabet.symbols().iter().zip(&self.codes) {
            map.insert(char::from(b).to_string(), code.into());
        }
        Ok(serde_json::to_string_pretty(&serde_json::Value::Object(map))?)
    }
}

/// Product of the codes of every symbol of `s`; 1 for the empty string.
pub fn fingerprint(s: &SymbolString, codec: &PrimeCodec) -> Result<Fingerprint> {
    codec.check_aligned(s.alphabet_size())?;
    let mut fp = Fingerprint::one();
    for &sym in s.symbols() {
        fp.mul_code(codec.code(sym));
    }
    Ok(fp)
}

/// The `index`-th prime, 0-based (`nth_prime(0) == 2`).
pub fn nth_prime(index: usize) -> u64 {
    (2u64..)
        .filter(|&c| is_prime(c))
        .nth(index)
        .expect("primes are infinite")
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn abc(s: &[u8]) -> SymbolString {
        Alphabet::new(*b"abc").unwrap().encode(s).unwrap()
    }

    #[test]
    fn products() {
        let codec = PrimeCodec::first_primes(3);
        assert_eq!(codec.codes(), &[2, 3, 5]);
        assert_eq!(fingerprint(&abc(b"abca"), &codec).unwrap(), Fingerprint::from(60));
        assert_eq!(fingerprint(&abc(b""), &codec).unwrap(), Fingerprint::one());
        assert_eq!(
            fingerprint(&abc(b"bca"), &codec).unwrap(),
            fingerprint(&abc(b"abc"), &codec).unwrap()
        );
        assert_eq!(fingerprint(&abc(b"abc"), &codec).unwrap(), Fingerprint::from(30));
    }

    #[test]
    fn codec_validation() {
        assert!(PrimeCodec::new(vec![2, 3, 5, 7]).is_ok());
        assert!(PrimeCodec::new(vec![2, 5, 11]).is_ok());
        assert!(matches!(
            PrimeCodec::new(vec![3, 5]),
            Err(Error::InvalidPrimeCode { index: 0, .. })
        ));
        assert!(matches!(
            PrimeCodec::new(vec![2, 4]),
            Err(Error::InvalidPrimeCode { index: 1, code: 4 })
        ));
        assert!(matches!(
            PrimeCodec::new(vec![2, 5, 3]),
            Err(Error::InvalidPrimeCode { index: 2, .. })
        ));
    }

    #[test]
    fn misaligned_codec_rejected() {
        let codec = PrimeCodec::first_primes(2);
        assert!(matches!(
            fingerprint(&abc(b"ab"), &codec),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn first_primes_sequence() {
        let p: Vec<u64> = (0..10).map(nth_prime).collect();
        assert_eq!(p, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn codec_json_dump() {
        let a = Alphabet::new(*b"ab").unwrap();
        let json = PrimeCodec::first_primes(2).to_json(&a).unwrap();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["a"], 2);
        assert_eq!(v["b"], 3);
    }

    #[test]
    #[should_panic(expected = "not divisible")]
    fn inexact_division_is_a_defect() {
        let mut fp = Fingerprint::from(6);
        fp.div_code(5);
    }

    proptest! {
        #[test]
        fn fingerprint_is_permutation_invariant(mut s in proptest::collection::vec(0u8..5, 0..16), seed in any::<u64>()) {
            use rand::{seq::SliceRandom, SeedableRng};
            let codec = PrimeCodec::first_primes(5);
            let before = fingerprint(&SymbolString::new(s.clone(), 5).unwrap(), &codec).unwrap();
            s.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            let after = fingerprint(&SymbolString::new(s, 5).unwrap(), &codec).unwrap();
            prop_assert_eq!(before, after);
        }
    }
}
