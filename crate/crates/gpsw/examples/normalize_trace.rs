//! Normalize a ternary directive bi-sequence and show which rules fired
//! where, then double-check the result against the brute-force reference.
//!
//! ```console
//! cargo run -p gpsw --example normalize_trace
//! ```

use gpsw::{naive_normalize, normalize, Alphabet, DirectiveBiSeq};

fn main() {
    let bs = DirectiveBiSeq::parse("01022101111", "RR021210222", Alphabet::Ternary).unwrap();
    println!("input:      {bs}");

    let outcome = normalize(&bs).unwrap();
    println!("normalized: {}", outcome.normalized);
    println!("notchanged: {}", outcome.notchanged);
    for m in &outcome.trace {
        println!("  applied {} at pair {}", m.rule, m.position);
    }

    let reference = naive_normalize(&bs).unwrap();
    assert_eq!(outcome.normalized, reference);
    println!("reference agrees: {reference}");
}
