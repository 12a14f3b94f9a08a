//! Shared helpers for the integration and acceptance suites: a small
//! deterministic RNG (stable across platforms and releases, so seeded runs
//! are byte-reproducible) and bi-sequence samplers/enumerators.
#![allow(dead_code)]

use gpsw::{Alphabet, DirectiveBiSeq, Letter, Word};

/// SplitMix64; good enough for sampling test cases and fully deterministic.
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }
}

/// A uniformly random bi-sequence of exactly `len` pairs.
pub fn random_biseq(rng: &mut SplitMix64, alphabet: Alphabet, len: usize) -> DirectiveBiSeq {
    let letters = alphabet.letters();
    let thetas = alphabet.antimorphisms();
    let mut bs = DirectiveBiSeq::empty(alphabet);
    for _ in 0..len {
        let l = letters[rng.below(letters.len() as u64) as usize];
        let t = thetas[rng.below(thetas.len() as u64) as usize];
        bs.push((l, t));
    }
    bs
}

/// A random bi-sequence of length `1..=max_len`.
pub fn random_biseq_up_to(
    rng: &mut SplitMix64,
    alphabet: Alphabet,
    max_len: usize,
) -> DirectiveBiSeq {
    let len = 1 + rng.below(max_len as u64) as usize;
    random_biseq(rng, alphabet, len)
}

/// Every bi-sequence of exactly `len` pairs, in lexicographic order.
pub fn all_biseqs(alphabet: Alphabet, len: usize) -> Vec<DirectiveBiSeq> {
    let letters = alphabet.letters();
    let thetas = alphabet.antimorphisms();
    let pair_count = letters.len() * thetas.len();
    let total = pair_count.pow(len as u32);
    let mut out = Vec::with_capacity(total);
    for mut code in 0..total {
        let mut bs = DirectiveBiSeq::empty(alphabet);
        for _ in 0..len {
            let pair = code % pair_count;
            code /= pair_count;
            bs.push((letters[pair % letters.len()], thetas[pair / letters.len()]));
        }
        out.push(bs);
    }
    out
}

/// Every word of exactly `len` letters over `alphabet`.
pub fn all_words(alphabet: Alphabet, len: usize) -> Vec<Word> {
    let letters = alphabet.letters();
    let total = letters.len().pow(len as u32);
    let mut out = Vec::with_capacity(total);
    for mut code in 0..total {
        let mut w = Word::new();
        for _ in 0..len {
            w.push(letters[code % letters.len()]);
            code /= letters.len();
        }
        out.push(w);
    }
    out
}

/// A random word of exactly `len` letters.
pub fn random_word(rng: &mut SplitMix64, alphabet: Alphabet, len: usize) -> Word {
    let letters = alphabet.letters();
    (0..len)
        .map(|_| letters[rng.below(letters.len() as u64) as usize])
        .collect()
}

pub fn letter(c: char) -> Letter {
    Letter::from_char(c).unwrap()
}
