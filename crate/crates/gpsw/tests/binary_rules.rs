//! Binary normalization against the oracle on small instances; the full
//! exhaustive sweep (all bi-sequences of length ≤ 7) runs in the acceptance
//! suite.

mod common;

use common::{all_biseqs, random_biseq_up_to, SplitMix64};
use gpsw::{generate_word, is_normalized, naive_normalize, normalize_binary, Alphabet};

#[test]
fn matches_oracle_exhaustively_to_length_5() {
    for len in 0..=5 {
        for bs in all_biseqs(Alphabet::Binary, len) {
            let ours = normalize_binary(&bs).unwrap();
            let oracle = naive_normalize(&bs).unwrap();
            assert_eq!(ours.normalized, oracle, "{bs}");
            assert_eq!(ours.notchanged, oracle == bs, "{bs}");
            assert!(is_normalized(&ours.normalized), "{bs}");
            assert_eq!(generate_word(&ours.normalized), generate_word(&bs), "{bs}");
        }
    }
}

#[test]
fn idempotent_on_random_inputs() {
    let mut rng = SplitMix64::new(4242);
    for _ in 0..500 {
        let bs = random_biseq_up_to(&mut rng, Alphabet::Binary, 10);
        let once = normalize_binary(&bs).unwrap();
        let twice = normalize_binary(&once.normalized).unwrap();
        assert!(twice.notchanged, "{bs}");
        assert_eq!(twice.normalized, once.normalized);
    }
}

/// Longer sweep than the acceptance criterion requires: every binary
/// bi-sequence of length 8 and 9 (327,680 instances). Run with
/// `cargo test -p gpsw --test binary_rules -- --ignored`.
#[test]
#[ignore = "long exhaustive sweep"]
fn exhaustive_binary_lengths_8_and_9() {
    for len in 8..=9 {
        for bs in all_biseqs(Alphabet::Binary, len) {
            let ours = normalize_binary(&bs).unwrap();
            let oracle = naive_normalize(&bs).unwrap();
            assert_eq!(ours.normalized, oracle, "mismatch on {bs}");
        }
    }
}
