//! Directive bi-sequences.
//!
//! A directive bi-sequence `(Δ, Θ)` is a pair of equally long sequences: a
//! sequence of letters `Δ = δ₁δ₂…` and a sequence of involutory
//! antimorphisms `Θ = ϑ₁ϑ₂…`. It drives the construction of a generalized
//! pseudostandard word through the recurrence
//! `w₀ = ε`, `wₙ₊₁ = (wₙ · δₙ₊₁)^ϑₙ₊₁`.
//!
//! ```
//! use gpsw::{Alphabet, DirectiveBiSeq};
//!
//! let bs = DirectiveBiSeq::parse("01021", "R112R", Alphabet::Ternary).unwrap();
//! assert_eq!(bs.len(), 5);
//! assert_eq!(bs.theta_string(), "R112R");
//! ```

use std::fmt;

use crate::alphabet::{
    check_antimorphism, check_letter, Alphabet, Antimorphism, Letter, LetterSubstitution,
};
use crate::error::{Error, Result};

/// One directive step: a letter to append and the antimorphism whose
/// palindromic closure follows.
pub type Pair = (Letter, Antimorphism);

/// A directive bi-sequence over a fixed alphabet. `|Δ| = |Θ|` always holds;
/// the empty bi-sequence directs `w₀ = ε` only.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DirectiveBiSeq {
    alphabet: Alphabet,
    delta: Vec<Letter>,
    theta: Vec<Antimorphism>,
}

impl DirectiveBiSeq {
    pub fn new(
        alphabet: Alphabet,
        delta: Vec<Letter>,
        theta: Vec<Antimorphism>,
    ) -> Result<DirectiveBiSeq> {
        if delta.len() != theta.len() {
            return Err(Error::LengthMismatch {
                delta: delta.len(),
                theta: theta.len(),
            });
        }
        for (i, &l) in delta.iter().enumerate() {
            check_letter(l, alphabet, i)?;
        }
        for (i, &t) in theta.iter().enumerate() {
            check_antimorphism(t, alphabet, i)?;
        }
        Ok(DirectiveBiSeq {
            alphabet,
            delta,
            theta,
        })
    }

    pub fn empty(alphabet: Alphabet) -> DirectiveBiSeq {
        DirectiveBiSeq {
            alphabet,
            delta: Vec::new(),
            theta: Vec::new(),
        }
    }

    /// Parses the character encodings used throughout: `Δ` over `012`
    /// (binary: `01`) and `Θ` over `R012` (binary: `RE`), where a digit `i`
    /// in a ternary theta string stands for `Ei`.
    pub fn parse(delta: &str, theta: &str, alphabet: Alphabet) -> Result<DirectiveBiSeq> {
        let mut d = Vec::with_capacity(delta.len());
        for (position, c) in delta.chars().enumerate() {
            let letter = Letter::from_char(c)
                .filter(|&l| alphabet.contains_letter(l))
                .ok_or(Error::InvalidLetter {
                    found: c,
                    position,
                    alphabet,
                })?;
            d.push(letter);
        }
        let mut t = Vec::with_capacity(theta.len());
        for (position, c) in theta.chars().enumerate() {
            let theta = Antimorphism::from_char(c, alphabet).ok_or(Error::InvalidAntimorphism {
                found: c,
                position,
                alphabet,
            })?;
            t.push(theta);
        }
        DirectiveBiSeq::new(alphabet, d, t)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.delta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.delta.is_empty()
    }

    pub fn delta(&self) -> &[Letter] {
        &self.delta
    }

    pub fn theta(&self) -> &[Antimorphism] {
        &self.theta
    }

    pub fn pair(&self, i: usize) -> Pair {
        (self.delta[i], self.theta[i])
    }

    pub fn pairs(&self) -> impl Iterator<Item = Pair> + '_ {
        self.delta.iter().copied().zip(self.theta.iter().copied())
    }

    pub fn push(&mut self, pair: Pair) {
        debug_assert!(self.alphabet.contains_letter(pair.0));
        debug_assert!(self.alphabet.contains_antimorphism(pair.1));
        self.delta.push(pair.0);
        self.theta.push(pair.1);
    }

    /// The bi-sequence made of the first `len` pairs.
    pub fn truncated(&self, len: usize) -> DirectiveBiSeq {
        DirectiveBiSeq {
            alphabet: self.alphabet,
            delta: self.delta[..len].to_vec(),
            theta: self.theta[..len].to_vec(),
        }
    }

    /// Is `self` a pair-wise prefix of `other`?
    pub fn is_pairwise_prefix_of(&self, other: &DirectiveBiSeq) -> bool {
        other.delta.starts_with(&self.delta) && other.theta.starts_with(&self.theta)
    }

    /// Applies a letter substitution to both `Δ` and the `Θ` subscripts.
    pub fn relabel(&self, subst: &LetterSubstitution) -> DirectiveBiSeq {
        DirectiveBiSeq {
            alphabet: self.alphabet,
            delta: self.delta.iter().map(|&l| subst.apply_letter(l)).collect(),
            theta: self
                .theta
                .iter()
                .map(|&t| subst.apply_antimorphism(t))
                .collect(),
        }
    }

    pub fn delta_string(&self) -> String {
        self.delta.iter().map(|l| l.to_char()).collect()
    }

    pub fn theta_string(&self) -> String {
        self.theta.iter().map(|t| t.to_char()).collect()
    }

    pub(crate) fn from_pairs(alphabet: Alphabet, pairs: &[Pair]) -> DirectiveBiSeq {
        DirectiveBiSeq {
            alphabet,
            delta: pairs.iter().map(|p| p.0).collect(),
            theta: pairs.iter().map(|p| p.1).collect(),
        }
    }
}

impl fmt::Display for DirectiveBiSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.delta_string(), self.theta_string())
    }
}

impl fmt::Debug for DirectiveBiSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.delta_string(), self.theta_string())
    }
}
