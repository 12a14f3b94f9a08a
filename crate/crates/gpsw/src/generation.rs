//! Word generation from directive bi-sequences.
//!
//! The prefix sequence of a generalized pseudostandard word is produced by
//! iterated pseudopalindromic closure: `w₀ = ε` and
//! `wₙ₊₁ = (wₙ · δₙ₊₁)^ϑₙ₊₁`. Every `wₙ` is a proper prefix of `wₙ₊₁`, so a
//! single growing buffer holds all of them.
//!
//! ```
//! use gpsw::{generate_word, Alphabet, DirectiveBiSeq};
//!
//! let bs = DirectiveBiSeq::parse("01021", "R112R", Alphabet::Ternary).unwrap();
//! assert_eq!(generate_word(&bs).to_string(), "012012201201102102210210");
//! ```

use crate::alphabet::{Alphabet, Antimorphism, Letter};
use crate::biseq::DirectiveBiSeq;
use crate::engine::ClosureEngine;
use crate::word::Word;

/// Runs the generation recurrence, invoking `on_prefix(n, w_n)` after every
/// step (`n` counts from 1). Stops early once the word length reaches
/// `limit`, if one is given. Returns the final word.
///
/// This is the streaming primitive behind [`build_prefixes`] and
/// [`generate_word`]; prefix buffers are never copied.
pub fn generate_with<F>(bs: &DirectiveBiSeq, limit: Option<usize>, mut on_prefix: F) -> Word
where
    F: FnMut(usize, &[Letter]),
{
    let mut engine = ClosureEngine::new(bs.alphabet());
    for (i, (delta, theta)) in bs.pairs().enumerate() {
        let len = engine.close(delta, theta);
        on_prefix(i + 1, engine.word());
        if limit.is_some_and(|l| len >= l) {
            break;
        }
    }
    Word::from_letters(engine.word().to_vec())
}

/// The prefixes `w₁, …, w_N` directed by `bs` (`w₀ = ε` is omitted). Each
/// `wₙ` is a `ϑₙ`-palindrome and a proper prefix of `wₙ₊₁`.
pub fn build_prefixes(bs: &DirectiveBiSeq) -> Vec<Word> {
    let mut prefixes = Vec::with_capacity(bs.len());
    generate_with(bs, None, |_, w| {
        prefixes.push(Word::from_letters(w.to_vec()));
    });
    prefixes
}

/// The lengths `|w₁|, …, |w_N|` without copying any prefix.
pub fn prefix_lengths(bs: &DirectiveBiSeq) -> Vec<usize> {
    let mut lengths = Vec::with_capacity(bs.len());
    generate_with(bs, None, |_, w| lengths.push(w.len()));
    lengths
}

/// The generated word `w_N` (the last prefix), or `ε` for an empty bi-sequence.
pub fn generate_word(bs: &DirectiveBiSeq) -> Word {
    generate_with(bs, None, |_, _| {})
}

/// One pseudopalindromic prefix of a word: its length and the set of
/// antimorphisms fixing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PalPrefixRecord {
    pub length: usize,
    pub types: Vec<Antimorphism>,
}

/// All nonempty pseudopalindromic prefixes of `w`, in increasing length
/// order, each with its full type set. `w` itself is included when it is a
/// pseudopalindrome; `ε` never is.
///
/// Uses the incremental engine, so the scan is linear in `|w|`. The direct
/// per-prefix check is kept as an independent cross-check in the tests.
pub fn pseudopalindromic_prefixes(w: &Word, alphabet: Alphabet) -> Vec<PalPrefixRecord> {
    let mut records = Vec::new();
    let mut engine = ClosureEngine::new(alphabet);
    for (i, &letter) in w.letters().iter().enumerate() {
        engine.push(letter);
        let types: Vec<Antimorphism> = alphabet
            .antimorphisms()
            .iter()
            .copied()
            .filter(|&theta| engine.is_whole_word_theta_palindrome(theta))
            .collect();
        if !types.is_empty() {
            records.push(PalPrefixRecord {
                length: i + 1,
                types,
            });
        }
    }
    records
}
