//! Incremental closure engine.
//!
//! Generating a pseudostandard word repeats one step: append a letter to the
//! current word and extend it to its θ-palindromic closure. The closure needs
//! the longest θ-palindromic suffix of a word that only ever grows, so the
//! engine maintains, for every antimorphism of the alphabet, a palindromic
//! tree (eertree) generalized from `R`-palindromes to θ-palindromes. Each
//! appended letter updates all trees in amortized constant time, which keeps
//! generation near-linear in the size of the output word.
//!
//! A θ-palindrome grows from a shorter one by `x · p · θ(x)`; a single letter
//! `c` is a θ-palindrome only when `θ(c) = c`. Both points differ from the
//! classical eertree and are handled in the tree-extension step.
//!
//! [`Word::longest_theta_pal_suffix_len`](crate::Word::longest_theta_pal_suffix_len)
//! computes the same quantity by direct scanning; the two routes are checked
//! against each other in the test suite.

use crate::alphabet::{Alphabet, Antimorphism, Letter};

const NO_NODE: u32 = u32::MAX;
/// Virtual root of length -1 (seed for odd-length palindromes).
const ROOT_NEG: u32 = 0;
/// Root of length 0 (the empty suffix, which is a θ-palindrome for every θ).
const ROOT_ZERO: u32 = 1;

#[derive(Clone)]
struct Node {
    len: i32,
    link: u32,
    next: [u32; 3],
}

impl Node {
    fn new(len: i32, link: u32) -> Node {
        Node {
            len,
            link,
            next: [NO_NODE; 3],
        }
    }
}

/// Palindromic tree for one antimorphism over a shared, growing word.
struct PalTree {
    theta: Antimorphism,
    nodes: Vec<Node>,
    /// Node of the longest θ-palindromic suffix of the current word.
    last: u32,
}

impl PalTree {
    fn new(theta: Antimorphism) -> PalTree {
        let mut nodes = Vec::with_capacity(64);
        nodes.push(Node::new(-1, ROOT_NEG));
        nodes.push(Node::new(0, ROOT_NEG));
        PalTree {
            theta,
            nodes,
            last: ROOT_ZERO,
        }
    }

    /// Can the θ-palindrome at `x` be extended by `c` at position `pos`?
    /// The candidate extension is `word[pos - len(x) - 1 ..= pos]`, which is a
    /// θ-palindrome exactly when its first letter is `θ(c)`. For the length
    /// -1 root the candidate is the single letter `c` itself and the formula
    /// degenerates to `word[pos] = θ(c)`, i.e. `θ(c) = c`.
    fn extendable(&self, x: u32, word: &[Letter], pos: usize, mirror: Letter) -> bool {
        let idx = pos as i64 - 1 - self.nodes[x as usize].len as i64;
        idx >= 0 && word[idx as usize] == mirror
    }

    fn push(&mut self, word: &[Letter], pos: usize) {
        let c = word[pos];
        let mirror = self.theta.letter_image(c);

        let mut x = self.last;
        loop {
            if self.extendable(x, word, pos, mirror) {
                break;
            }
            if x == ROOT_NEG {
                // Not even the single letter works: the longest θ-palindromic
                // suffix of the extended word is empty.
                self.last = ROOT_ZERO;
                return;
            }
            x = self.nodes[x as usize].link;
        }

        let slot = c.value() as usize;
        if self.nodes[x as usize].next[slot] != NO_NODE {
            self.last = self.nodes[x as usize].next[slot];
            return;
        }

        let len = if x == ROOT_NEG {
            1
        } else {
            self.nodes[x as usize].len + 2
        };
        let link = if len == 1 {
            ROOT_ZERO
        } else {
            let mut z = self.nodes[x as usize].link;
            loop {
                if self.extendable(z, word, pos, mirror) {
                    let target = self.nodes[z as usize].next[slot];
                    debug_assert_ne!(
                        target, NO_NODE,
                        "a proper suffix θ-palindrome must have been registered earlier"
                    );
                    break target;
                }
                if z == ROOT_NEG {
                    // No nonempty proper suffix θ-palindrome: unlike the
                    // classical palindromic tree, a single letter need not be
                    // a θ-palindrome, so the chain may bottom out at ε.
                    break ROOT_ZERO;
                }
                z = self.nodes[z as usize].link;
            }
        };
        let id = self.nodes.len() as u32;
        self.nodes.push(Node::new(len, link));
        self.nodes[x as usize].next[slot] = id;
        self.last = id;
    }

    fn longest_suffix_len(&self) -> usize {
        self.nodes[self.last as usize].len as usize
    }
}

/// Growing word plus one palindromic tree per antimorphism of the alphabet.
pub struct ClosureEngine {
    alphabet: Alphabet,
    word: Vec<Letter>,
    trees: Vec<PalTree>,
}

impl ClosureEngine {
    pub fn new(alphabet: Alphabet) -> ClosureEngine {
        ClosureEngine {
            alphabet,
            word: Vec::new(),
            trees: alphabet
                .antimorphisms()
                .iter()
                .map(|&t| PalTree::new(t))
                .collect(),
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn word(&self) -> &[Letter] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Appends one letter, updating every tree.
    pub fn push(&mut self, letter: Letter) {
        debug_assert!(self.alphabet.contains_letter(letter));
        self.word.push(letter);
        let pos = self.word.len() - 1;
        for tree in &mut self.trees {
            tree.push(&self.word, pos);
        }
    }

    /// Length of the longest θ-palindromic suffix of the current word.
    pub fn longest_theta_pal_suffix_len(&self, theta: Antimorphism) -> usize {
        self.trees[theta.index(self.alphabet)].longest_suffix_len()
    }

    /// Is the whole current word a θ-palindrome?
    pub fn is_whole_word_theta_palindrome(&self, theta: Antimorphism) -> bool {
        self.longest_theta_pal_suffix_len(theta) == self.word.len()
    }

    /// One generation step: append `delta`, then extend the word to the
    /// θ-palindromic closure `(w·delta)^θ`. Returns the new length.
    pub fn close(&mut self, delta: Letter, theta: Antimorphism) -> usize {
        self.push(delta);
        let suffix = self.longest_theta_pal_suffix_len(theta);
        let v_len = self.word.len() - suffix;
        for i in (0..v_len).rev() {
            let letter = theta.letter_image(self.word[i]);
            self.push(letter);
        }
        debug_assert!(self.is_whole_word_theta_palindrome(theta));
        self.word.len()
    }
}
