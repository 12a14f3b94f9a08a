//! Letters and involutory antimorphisms.
//!
//! Everything in this crate works over one of two alphabets: the binary
//! alphabet `{0, 1}` or the ternary alphabet `{0, 1, 2}`. An *involutory
//! antimorphism* is a map `θ` on words with `θ(uv) = θ(v)θ(u)` and
//! `θ² = id`; it is determined by its letter images. Over the binary
//! alphabet there are exactly two such maps (the reversal `R` and the
//! exchange `E`), over the ternary alphabet exactly four (`R`, `E0`, `E1`,
//! `E2`, where `Ei` fixes the letter `i` and swaps the other two).

use std::fmt;

use crate::error::Error;

/// The active alphabet: binary `{0, 1}` or ternary `{0, 1, 2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Alphabet {
    Binary,
    Ternary,
}

impl Alphabet {
    /// Number of letters.
    pub fn size(self) -> usize {
        match self {
            Alphabet::Binary => 2,
            Alphabet::Ternary => 3,
        }
    }

    /// The letters of this alphabet, in order.
    pub fn letters(self) -> &'static [Letter] {
        match self {
            Alphabet::Binary => &[Letter::L0, Letter::L1],
            Alphabet::Ternary => &[Letter::L0, Letter::L1, Letter::L2],
        }
    }

    /// The involutory antimorphisms over this alphabet, in canonical order.
    pub fn antimorphisms(self) -> &'static [Antimorphism] {
        match self {
            Alphabet::Binary => &[Antimorphism::R, Antimorphism::E],
            Alphabet::Ternary => &[
                Antimorphism::R,
                Antimorphism::E0,
                Antimorphism::E1,
                Antimorphism::E2,
            ],
        }
    }

    pub fn contains_letter(self, letter: Letter) -> bool {
        (letter.value() as usize) < self.size()
    }

    pub fn contains_antimorphism(self, theta: Antimorphism) -> bool {
        self.antimorphisms().contains(&theta)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Alphabet::Binary => write!(f, "binary"),
            Alphabet::Ternary => write!(f, "ternary"),
        }
    }
}

/// A single letter, one of `0`, `1`, `2`.
///
/// The binary alphabet uses only `0` and `1`; membership is checked when
/// words and bi-sequences are constructed, so a `Letter` held by a validated
/// value is always inside its alphabet.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(u8);

impl Letter {
    pub const L0: Letter = Letter(0);
    pub const L1: Letter = Letter(1);
    pub const L2: Letter = Letter(2);

    /// Builds a letter from its numeric value; `None` for values above 2.
    pub const fn new(value: u8) -> Option<Letter> {
        if value <= 2 {
            Some(Letter(value))
        } else {
            None
        }
    }

    pub const fn value(self) -> u8 {
        self.0
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            '0' => Some(Letter::L0),
            '1' => Some(Letter::L1),
            '2' => Some(Letter::L2),
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        (b'0' + self.0) as char
    }

    /// The third ternary letter, distinct from both `a` and `b` (which must differ).
    pub fn remaining(a: Letter, b: Letter) -> Letter {
        debug_assert_ne!(a, b);
        Letter(3 - a.0 - b.0)
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// An involutory antimorphism, identified by its letter images.
///
/// `R` reverses a word and fixes every letter. `Ei` (ternary) fixes `i` and
/// swaps the other two letters. `E` is the binary exchange `0 ↔ 1`; it is a
/// distinct kind and never conflated with the ternary `E0`/`E1`/`E2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Antimorphism {
    R,
    E0,
    E1,
    E2,
    /// The binary exchange antimorphism.
    E,
}

impl Antimorphism {
    /// Image of a single letter.
    pub fn letter_image(self, letter: Letter) -> Letter {
        // E0: 0↦0 1↦2 2↦1, E1: 0↦2 1↦1 2↦0, E2: 0↦1 1↦0 2↦2.
        match self {
            Antimorphism::R => letter,
            Antimorphism::E0 => Letter(match letter.0 {
                0 => 0,
                1 => 2,
                _ => 1,
            }),
            Antimorphism::E1 => Letter(match letter.0 {
                0 => 2,
                1 => 1,
                _ => 0,
            }),
            Antimorphism::E2 => Letter(match letter.0 {
                0 => 1,
                1 => 0,
                _ => 2,
            }),
            Antimorphism::E => Letter(match letter.0 {
                0 => 1,
                1 => 0,
                _ => 2,
            }),
        }
    }

    /// The letter fixed by this antimorphism, if there is exactly one.
    pub fn subscript(self) -> Option<Letter> {
        match self {
            Antimorphism::E0 => Some(Letter::L0),
            Antimorphism::E1 => Some(Letter::L1),
            Antimorphism::E2 => Some(Letter::L2),
            _ => None,
        }
    }

    /// The ternary exchange antimorphism fixing `letter`.
    pub fn exchange_fixing(letter: Letter) -> Antimorphism {
        match letter.0 {
            0 => Antimorphism::E0,
            1 => Antimorphism::E1,
            _ => Antimorphism::E2,
        }
    }

    /// Position of this antimorphism in `alphabet.antimorphisms()`.
    pub(crate) fn index(self, alphabet: Alphabet) -> usize {
        match (alphabet, self) {
            (_, Antimorphism::R) => 0,
            (Alphabet::Binary, Antimorphism::E) => 1,
            (Alphabet::Ternary, Antimorphism::E0) => 1,
            (Alphabet::Ternary, Antimorphism::E1) => 2,
            (Alphabet::Ternary, Antimorphism::E2) => 3,
            _ => unreachable!("antimorphism outside its alphabet"),
        }
    }

    /// Decodes the character encoding used for theta strings: `R`, `0`, `1`,
    /// `2` over the ternary alphabet (digits standing for `E0`, `E1`, `E2`)
    /// and `R`, `E` over the binary alphabet.
    pub fn from_char(c: char, alphabet: Alphabet) -> Option<Antimorphism> {
        match (alphabet, c) {
            (_, 'R') => Some(Antimorphism::R),
            (Alphabet::Ternary, '0') => Some(Antimorphism::E0),
            (Alphabet::Ternary, '1') => Some(Antimorphism::E1),
            (Alphabet::Ternary, '2') => Some(Antimorphism::E2),
            (Alphabet::Binary, 'E') => Some(Antimorphism::E),
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Antimorphism::R => 'R',
            Antimorphism::E0 => '0',
            Antimorphism::E1 => '1',
            Antimorphism::E2 => '2',
            Antimorphism::E => 'E',
        }
    }
}

impl fmt::Display for Antimorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Antimorphism::R => write!(f, "R"),
            Antimorphism::E0 => write!(f, "E0"),
            Antimorphism::E1 => write!(f, "E1"),
            Antimorphism::E2 => write!(f, "E2"),
            Antimorphism::E => write!(f, "E"),
        }
    }
}

/// A relabeling of the ternary letters, used to bring the first occurrences
/// of letters in a generated word into the order `0`, `1`, `2`.
///
/// A single preprocessing step is a transposition, but two steps may compose
/// into a 3-cycle, so the inverse is tracked explicitly rather than assumed
/// equal to the substitution itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LetterSubstitution {
    map: [u8; 3],
}

impl LetterSubstitution {
    pub fn identity() -> LetterSubstitution {
        LetterSubstitution { map: [0, 1, 2] }
    }

    /// The transposition exchanging `a` and `b`.
    pub fn swap(a: Letter, b: Letter) -> LetterSubstitution {
        let mut map = [0u8, 1, 2];
        map.swap(a.value() as usize, b.value() as usize);
        LetterSubstitution { map }
    }

    pub fn is_identity(&self) -> bool {
        self.map == [0, 1, 2]
    }

    /// `other` applied after `self`.
    pub fn then(&self, other: &LetterSubstitution) -> LetterSubstitution {
        let mut map = [0u8; 3];
        for (i, slot) in map.iter_mut().enumerate() {
            *slot = other.map[self.map[i] as usize];
        }
        LetterSubstitution { map }
    }

    pub fn inverse(&self) -> LetterSubstitution {
        let mut map = [0u8; 3];
        for (i, &v) in self.map.iter().enumerate() {
            map[v as usize] = i as u8;
        }
        LetterSubstitution { map }
    }

    pub fn apply_letter(&self, letter: Letter) -> Letter {
        Letter(self.map[letter.value() as usize])
    }

    /// Relabels an antimorphism: `Ei` maps to `E(σ(i))`, `R` and `E` are fixed.
    pub fn apply_antimorphism(&self, theta: Antimorphism) -> Antimorphism {
        match theta.subscript() {
            Some(i) => Antimorphism::exchange_fixing(self.apply_letter(i)),
            None => theta,
        }
    }
}

pub(crate) fn check_letter(
    letter: Letter,
    alphabet: Alphabet,
    position: usize,
) -> Result<(), Error> {
    if alphabet.contains_letter(letter) {
        Ok(())
    } else {
        Err(Error::AlphabetMismatch { position, alphabet })
    }
}

pub(crate) fn check_antimorphism(
    theta: Antimorphism,
    alphabet: Alphabet,
    position: usize,
) -> Result<(), Error> {
    if alphabet.contains_antimorphism(theta) {
        Ok(())
    } else {
        Err(Error::AlphabetMismatch { position, alphabet })
    }
}
