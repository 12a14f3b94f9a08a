//! Generalized pseudostandard words and directive bi-sequence normalization.
//!
//! A *generalized pseudostandard word* is built by iterated pseudopalindromic
//! closure: starting from the empty word, each step appends a letter `δₙ` and
//! closes the result to the shortest `ϑₙ`-palindrome extending it, where `ϑₙ`
//! ranges over the involutory antimorphisms of the alphabet. The pair of
//! sequences `(Δ, Θ)` steering the construction is the word's *directive
//! bi-sequence*.
//!
//! Different bi-sequences can direct the same word, and a bi-sequence may
//! skip pseudopalindromic prefixes of the word it directs. The *normalized*
//! bi-sequence is the canonical representative: its prefix sequence lists
//! every pseudopalindromic prefix, with unary word prefixes `i…i` directed
//! by `Ei…Ei` over the ternary alphabet. This crate provides:
//!
//! * the word-level kernel: antimorphisms, pseudopalindrome predicates, and
//!   the palindromic closure ([`Word`]);
//! * generation of prefix sequences and words from bi-sequences, in time
//!   near-linear in the output ([`generate_word`], [`build_prefixes`]);
//! * the ternary normalizer, a rewrite system of 30 anchored prefix rules
//!   and 4 factor rules ([`normalize()`]);
//! * the binary normalizer, three prefix replacements plus one factor
//!   replacement ([`normalize_binary`]);
//! * a brute-force reference normalizer used as ground truth in the tests
//!   and the CLI ([`naive_normalize`], [`is_normalized`]).
//!
//! ```
//! use gpsw::{normalize, Alphabet, DirectiveBiSeq};
//!
//! let bs = DirectiveBiSeq::parse("0001", "R0R2", Alphabet::Ternary).unwrap();
//! let outcome = normalize(&bs).unwrap();
//! assert_eq!(outcome.normalized.theta_string(), "0002");
//! assert!(!outcome.notchanged);
//! ```

pub mod alphabet;
pub mod biseq;
pub mod engine;
pub mod error;
pub mod generation;
pub mod normalize;
pub mod oracle;
pub mod word;

pub use alphabet::{Alphabet, Antimorphism, Letter, LetterSubstitution};
pub use biseq::{DirectiveBiSeq, Pair};
pub use engine::ClosureEngine;
pub use error::{Error, Result};
pub use generation::{
    build_prefixes, generate_with, generate_word, prefix_lengths, pseudopalindromic_prefixes,
    PalPrefixRecord,
};
pub use normalize::binary::normalize_binary;
pub use normalize::ternary::{
    apply_rule, find_all_rule_matches, find_applicable_rule, normalize, normalize_checked,
    prefix_rule_instance, preprocess_unary_prefix, reorder_letters,
};
pub use normalize::{NormalizationOutcome, RuleId, RuleMatch};
pub use oracle::{is_normalized, naive_normalize};
pub use word::Word;


// The guide's chapters double as documentation tests: every fenced Rust
// block in book/src compiles and runs under `cargo test --doc`, so the book
// cannot drift from the library.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            pub struct $name;
        };
    }

    chapter!(Introduction, "../../../book/src/introduction.md");
    chapter!(Antimorphisms, "../../../book/src/antimorphisms.md");
    chapter!(Closure, "../../../book/src/closure.md");
    chapter!(Generation, "../../../book/src/generation.md");
    chapter!(Normalization, "../../../book/src/normalization.md");
    chapter!(Binary, "../../../book/src/binary.md");
    chapter!(Ternary, "../../../book/src/ternary.md");
    chapter!(Oracle, "../../../book/src/oracle.md");
    chapter!(Cli, "../../../book/src/cli.md");
}
