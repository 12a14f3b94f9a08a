//! Invariants of prefix-sequence generation and the pseudopalindromic
//! prefix enumerator.

mod common;

use common::{all_biseqs, random_biseq_up_to, SplitMix64};
use gpsw::{
    build_prefixes, generate_word, prefix_lengths, pseudopalindromic_prefixes, Alphabet,
    DirectiveBiSeq, Word,
};

/// Strict growth, nesting, and per-step palindromic type of the prefix
/// sequence, plus agreement with a fold of the word-level closure.
#[test]
fn prefix_sequence_invariants() {
    let mut rng = SplitMix64::new(2024);
    let mut cases: Vec<DirectiveBiSeq> = (0..300)
        .map(|_| random_biseq_up_to(&mut rng, Alphabet::Ternary, 9))
        .collect();
    cases.extend((0..100).map(|_| random_biseq_up_to(&mut rng, Alphabet::Binary, 9)));

    for bs in &cases {
        let prefixes = build_prefixes(bs);
        assert_eq!(prefixes.len(), bs.len());
        let mut by_closure = Word::new();
        let mut prev_len = 0;
        for (n, w) in prefixes.iter().enumerate() {
            let (delta, theta) = bs.pair(n);
            by_closure.push(delta);
            by_closure = by_closure.palindromic_closure(theta);
            assert_eq!(w, &by_closure, "{bs} step {n}");
            assert!(w.len() > prev_len, "{bs}: growth must be strict");
            assert!(w.is_theta_palindrome(theta), "{bs} step {n}");
            if n + 1 < prefixes.len() {
                assert!(w.is_prefix_of(&prefixes[n + 1]));
            }
            prev_len = w.len();
        }
        assert_eq!(
            prefixes.last().cloned().unwrap_or_default(),
            generate_word(bs)
        );
    }
}

/// The engine-backed enumerator agrees with a per-prefix full scan: every
/// listed type really fixes the prefix, and no omitted length has any type.
#[test]
fn enumerator_matches_full_scan() {
    let mut rng = SplitMix64::new(99);
    for alphabet in [Alphabet::Ternary, Alphabet::Binary] {
        for case in 0..150 {
            let w = common::random_word(&mut rng, alphabet, case % 60);
            let records = pseudopalindromic_prefixes(&w, alphabet);
            let mut by_scan = Vec::new();
            for len in 1..=w.len() {
                let prefix = w.prefix(len);
                let types = prefix.pseudopalindrome_types(alphabet);
                if !types.is_empty() {
                    by_scan.push((len, types));
                }
            }
            let got: Vec<(usize, Vec<_>)> =
                records.into_iter().map(|r| (r.length, r.types)).collect();
            assert_eq!(got, by_scan, "word {w}");
        }
    }
}

/// Between consecutive prefixes of a bi-sequence whose processed prefix is
/// normalized, at most two pseudopalindromic prefixes are missed.
/// Exhaustive for all ternary bi-sequences of length ≤ 4; the randomized
/// sweep over longer instances runs in the acceptance suite.
#[test]
fn at_most_two_missed_prefixes_small() {
    for len in 1..=4 {
        for bs in all_biseqs(Alphabet::Ternary, len) {
            assert_missed_bound(&bs);
        }
    }
}

fn assert_missed_bound(bs: &DirectiveBiSeq) {
    let w = generate_word(bs);
    let steps = prefix_lengths(bs);
    let pal_lengths: Vec<usize> = pseudopalindromic_prefixes(&w, bs.alphabet())
        .iter()
        .map(|r| r.length)
        .collect();
    for n in 0..bs.len() {
        // Is the prefix of length n normalized? Its prefix words must be
        // exactly the pseudopalindromic prefixes up to |w_n|, directed with
        // the canonical antimorphism on the unary run.
        let upto = if n == 0 { 0 } else { steps[n - 1] };
        let expected: Vec<usize> = pal_lengths.iter().copied().filter(|&l| l <= upto).collect();
        if expected != steps[..n] {
            continue;
        }
        if !gpsw::is_normalized(&bs.truncated(n)) {
            continue;
        }
        let next = steps[n];
        let missed = pal_lengths
            .iter()
            .filter(|&&l| l > upto && l < next)
            .count();
        assert!(
            missed <= 2,
            "{bs}: {missed} prefixes missed between step {n} and {}",
            n + 1
        );
    }
}

/// Example values for the enumerator, frozen from the worked material.
#[test]
fn enumerator_examples() {
    let w = Word::parse("012012201201", Alphabet::Ternary).unwrap();
    let lengths: Vec<usize> = pseudopalindromic_prefixes(&w, Alphabet::Ternary)
        .iter()
        .map(|r| r.length)
        .collect();
    assert_eq!(lengths, vec![1, 2, 3, 4, 5, 6, 12]);
}
