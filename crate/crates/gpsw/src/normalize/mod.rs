//! Normalization of directive bi-sequences.
//!
//! A directive bi-sequence is *normalized* when its prefix sequence `(wₙ)`
//! contains every pseudopalindromic prefix of the generated word, with the
//! convention that a unary word prefix `i^l` is directed by `Ei^l` over the
//! ternary alphabet. Normalization rewrites a bi-sequence into the unique
//! normalized one generating the same word.
//!
//! [`ternary`] implements the rule-table rewriter for the ternary alphabet
//! (30 anchored prefix rules plus 4 factor rules); [`binary`] implements the
//! three prefix replacements and single factor replacement that suffice over
//! the binary alphabet.

pub mod binary;
pub mod ternary;

use std::fmt;

use crate::biseq::{DirectiveBiSeq, Pair};

/// Identifies one rewrite rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleId {
    /// Ternary prefix rule `P1`–`P30`.
    Prefix(u8),
    /// Ternary factor rule `F1`–`F4`.
    Factor(u8),
    /// Binary prefix replacement `BP1`–`BP3`.
    BinaryPrefix(u8),
    /// The binary factor replacement.
    BinaryFactor,
}

impl RuleId {
    pub fn is_prefix_rule(self) -> bool {
        matches!(self, RuleId::Prefix(_) | RuleId::BinaryPrefix(_))
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleId::Prefix(n) => write!(f, "P{n}"),
            RuleId::Factor(n) => write!(f, "F{n}"),
            RuleId::BinaryPrefix(n) => write!(f, "BP{n}"),
            RuleId::BinaryFactor => write!(f, "BF"),
        }
    }
}

/// A located rule application: which rule, where its window starts, how many
/// pairs the window spans, and the pairs spliced in place of the window's
/// last pair. The replacement is always strictly longer (2 or 3 pairs) than
/// the single pair it replaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleMatch {
    pub rule: RuleId,
    /// Pair index where the matched window starts (0 for prefix rules).
    pub position: usize,
    /// Number of pairs in the matched window.
    pub window: usize,
    /// Pairs replacing the window's last pair.
    pub replacement: Vec<Pair>,
}

impl RuleMatch {
    /// Index of the pair the replacement is spliced over.
    pub fn splice_index(&self) -> usize {
        self.position + self.window - 1
    }
}

/// Result of a normalization run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizationOutcome {
    pub normalized: DirectiveBiSeq,
    /// True exactly when the input was already normalized: no rule fired and
    /// preprocessing changed nothing.
    pub notchanged: bool,
    /// Every rule application, in order.
    pub trace: Vec<RuleMatch>,
}

/// Replaces the pair at `index` with `replacement` inside a pair buffer.
pub(crate) fn splice_pairs(pairs: &mut Vec<Pair>, index: usize, replacement: &[Pair]) {
    pairs.splice(index..index + 1, replacement.iter().copied());
}
