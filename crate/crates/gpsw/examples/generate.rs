//! Build a word by iterated pseudopalindromic closure and print every
//! prefix of the construction.
//!
//! ```console
//! cargo run -p gpsw --example generate
//! ```

use gpsw::{generate_with, Alphabet, DirectiveBiSeq, Word};

fn main() {
    let bs = DirectiveBiSeq::parse("01021", "R112R", Alphabet::Ternary).unwrap();
    println!("directive bi-sequence: {bs}");
    let word = generate_with(&bs, None, |n, prefix| {
        println!("w{n} = {}", Word::from_letters(prefix.to_vec()));
    });
    println!("directed word ({} letters): {word}", word.len());
}
