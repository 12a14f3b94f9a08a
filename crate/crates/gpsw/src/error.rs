use thiserror::Error;

use crate::alphabet::Alphabet;

/// Errors reported by this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A directive bi-sequence was built from sequences of different lengths.
    #[error("length mismatch: delta has {delta} entries but theta has {theta}")]
    LengthMismatch { delta: usize, theta: usize },

    /// A character in a delta string is not a letter of the active alphabet.
    #[error("invalid letter {found:?} at position {position} for the {alphabet} alphabet")]
    InvalidLetter {
        found: char,
        position: usize,
        alphabet: Alphabet,
    },

    /// A character in a theta string does not name an antimorphism of the
    /// active alphabet.
    #[error("invalid antimorphism {found:?} at position {position} for the {alphabet} alphabet")]
    InvalidAntimorphism {
        found: char,
        position: usize,
        alphabet: Alphabet,
    },

    /// A letter or antimorphism does not belong to the alphabet it is used with.
    #[error("symbol at position {position} does not belong to the {alphabet} alphabet")]
    AlphabetMismatch { position: usize, alphabet: Alphabet },

    /// An operation got a bi-sequence over the wrong alphabet.
    #[error("operation requires the {expected} alphabet but the bi-sequence is {found}")]
    WrongAlphabet { expected: Alphabet, found: Alphabet },

    /// A rule match was applied to a bi-sequence whose window contents no
    /// longer agree with the match.
    #[error("stale rule match: {rule} no longer applies at position {position}")]
    StaleRuleMatch { rule: String, position: usize },

    /// An internal consistency check failed. This signals a bug, never bad input.
    #[error("internal error: {0}")]
    Internal(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
