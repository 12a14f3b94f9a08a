//! Finite words, pseudopalindrome predicates, and the pseudopalindromic
//! closure.
//!
//! A word `w` is a *θ-palindrome* if `w = θ(w)`; when the antimorphism is
//! left unspecified we say `w` is a *pseudopalindrome*. The *θ-palindromic
//! closure* `w^θ` is the shortest θ-palindrome having `w` as a prefix. It is
//! computed from the longest θ-palindromic suffix `p` of `w`: writing
//! `w = v·p`, the closure is `v·p·θ(v)`.
//!
//! ```
//! use gpsw::{Alphabet, Antimorphism, Word};
//!
//! let w = Word::parse("01011", Alphabet::Ternary).unwrap();
//! assert_eq!(w.palindromic_closure(Antimorphism::R).to_string(), "01011010");
//! assert_eq!(w.palindromic_closure(Antimorphism::E0).to_string(), "0101122020");
//! ```

use std::fmt;

use crate::alphabet::{Alphabet, Antimorphism, Letter};
use crate::error::{Error, Result};

/// A finite word over the binary or ternary alphabet.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new() -> Word {
        Word {
            letters: Vec::new(),
        }
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word { letters }
    }

    /// Parses a word from its digit string, validating membership in `alphabet`.
    pub fn parse(s: &str, alphabet: Alphabet) -> Result<Word> {
        let mut letters = Vec::with_capacity(s.len());
        for (position, c) in s.chars().enumerate() {
            let letter = Letter::from_char(c)
                .filter(|&l| alphabet.contains_letter(l))
                .ok_or(Error::InvalidLetter {
                    found: c,
                    position,
                    alphabet,
                })?;
            letters.push(letter);
        }
        Ok(Word { letters })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn push(&mut self, letter: Letter) {
        self.letters.push(letter);
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word::from_letters(self.letters[..len].to_vec())
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.letters.starts_with(&self.letters)
    }

    /// True when all letters are equal (single-letter runs; `ε` is not unary).
    pub fn is_unary(&self) -> bool {
        match self.letters.first() {
            None => false,
            Some(&first) => self.letters.iter().all(|&l| l == first),
        }
    }

    /// The image `θ(w)`: the reversal of `w` with every letter replaced by
    /// its image under `θ`. Length is preserved, and applying the same
    /// antimorphism twice gives back the original word.
    pub fn image(&self, theta: Antimorphism) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|&l| theta.letter_image(l))
                .collect(),
        }
    }

    /// Is `w = θ(w)`?
    pub fn is_theta_palindrome(&self, theta: Antimorphism) -> bool {
        is_theta_palindrome_slice(&self.letters, theta)
    }

    /// Every antimorphism `θ` of `alphabet` with `w = θ(w)`, in canonical
    /// order. The empty set means `w` is not a pseudopalindrome; the empty
    /// word is fixed by all four (resp. two) antimorphisms.
    pub fn pseudopalindrome_types(&self, alphabet: Alphabet) -> Vec<Antimorphism> {
        alphabet
            .antimorphisms()
            .iter()
            .copied()
            .filter(|&theta| self.is_theta_palindrome(theta))
            .collect()
    }

    /// Length of the longest suffix `p` of `w` with `p = θ(p)`; may be 0
    /// (the empty suffix) or `w.len()` (the whole word).
    ///
    /// This is the direct scan from the longest candidate down; the
    /// incremental tracker in [`crate::engine`] computes the same quantity
    /// in amortized constant time for growing words.
    pub fn longest_theta_pal_suffix_len(&self, theta: Antimorphism) -> usize {
        let n = self.letters.len();
        (0..=n)
            .rev()
            .find(|&len| is_theta_palindrome_slice(&self.letters[n - len..], theta))
            .unwrap_or(0)
    }

    /// The longest θ-palindromic suffix itself.
    pub fn longest_theta_pal_suffix(&self, theta: Antimorphism) -> Word {
        let len = self.longest_theta_pal_suffix_len(theta);
        Word::from_letters(self.letters[self.letters.len() - len..].to_vec())
    }

    /// The θ-palindromic closure `w^θ`: the shortest θ-palindrome having `w`
    /// as a prefix.
    pub fn palindromic_closure(&self, theta: Antimorphism) -> Word {
        let p = self.longest_theta_pal_suffix_len(theta);
        let v = &self.letters[..self.letters.len() - p];
        let mut letters = self.letters.clone();
        letters.extend(v.iter().rev().map(|&l| theta.letter_image(l)));
        Word { letters }
    }
}

pub(crate) fn is_theta_palindrome_slice(letters: &[Letter], theta: Antimorphism) -> bool {
    let n = letters.len();
    (0..n / 2 + n % 2).all(|i| letters[i] == theta.letter_image(letters[n - 1 - i]))
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Word {
        Word::from_letters(iter.into_iter().collect())
    }
}
