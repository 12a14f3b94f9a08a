//! Acceptance suite. Each test implements one numbered criterion and prints
//! a one-line summary; `cargo test --test acceptance` reports pass/fail per
//! criterion.

mod common;

use std::time::Instant;

use common::{all_biseqs, random_biseq, random_biseq_up_to, SplitMix64};
use gpsw::{
    generate_with, generate_word, is_normalized, naive_normalize, normalize, normalize_binary,
    normalize_checked, prefix_lengths, pseudopalindromic_prefixes, Alphabet, Antimorphism,
    DirectiveBiSeq, Word,
};

fn ternary(delta: &str, theta: &str) -> DirectiveBiSeq {
    DirectiveBiSeq::parse(delta, theta, Alphabet::Ternary).unwrap()
}

/// Criterion 1: palindromic-closure golden values, exact string equality.
#[test]
fn criterion_01_closure_goldens() {
    let w = Word::parse("01011", Alphabet::Ternary).unwrap();
    assert_eq!(
        w.palindromic_closure(Antimorphism::R).to_string(),
        "01011010"
    );
    assert_eq!(
        w.palindromic_closure(Antimorphism::E0).to_string(),
        "0101122020"
    );
    let v = Word::parse("01201", Alphabet::Ternary).unwrap();
    assert_eq!(v.palindromic_closure(Antimorphism::E2).to_string(), "01201");
    println!("criterion 1: closure goldens exact");
}

/// Criterion 2: the example directive bi-sequence yields the printed prefix
/// sequence, ending in the 24-letter fifth prefix. Exact equality.
#[test]
fn criterion_02_generation_golden() {
    let bs = ternary("01021", "R112R");
    let expected = [
        "0",
        "012",
        "012012",
        "012012201201",
        "012012201201102102210210",
    ];
    let mut got = Vec::new();
    let w = generate_with(&bs, None, |_, p| {
        got.push(Word::from_letters(p.to_vec()).to_string())
    });
    assert_eq!(got, expected);
    assert_eq!(w.to_string(), expected[4]);
    assert_eq!(w.len(), 24);
    println!("criterion 2: generation golden exact (w5 has 24 letters)");
}

/// Criterion 3: normalization goldens — the unary-prefix example and the
/// worked rewriting example (confirmed by the oracle, then frozen).
#[test]
fn criterion_03_normalization_goldens() {
    let input = ternary("0001", "R0R2");
    let expected = ternary("0001", "0002");
    assert_eq!(naive_normalize(&input).unwrap(), expected);
    let out = normalize(&input).unwrap();
    assert_eq!(out.normalized, expected);
    assert!(!out.notchanged);

    let input = ternary("01022101111", "RR021210222");
    let expected = ternary("01002210210111", "02R02120120222");
    assert_eq!(naive_normalize(&input).unwrap(), expected);
    assert_eq!(normalize(&input).unwrap().normalized, expected);
    println!("criterion 3: normalization goldens exact, oracle-confirmed");
}

/// Criterion 4: exhaustive oracle equivalence over every ternary
/// bi-sequence of length ≤ 4 (22,621 instances), zero mismatches.
#[test]
fn criterion_04_exhaustive_ternary_equivalence() {
    let start = Instant::now();
    let mut count = 0usize;
    for len in 0..=4 {
        for bs in all_biseqs(Alphabet::Ternary, len) {
            let ours = normalize(&bs).unwrap();
            let oracle = naive_normalize(&bs).unwrap();
            assert_eq!(ours.normalized, oracle, "mismatch on {bs}");
            assert!(is_normalized(&ours.normalized), "{bs}");
            assert_eq!(ours.notchanged, oracle == bs, "{bs}");
            count += 1;
        }
    }
    println!(
        "criterion 4: {count} exhaustive ternary instances agree with the oracle in {:?}",
        start.elapsed()
    );
}

/// Criterion 5: ≥ 10,000 seeded random ternary bi-sequences of length ≤ 12,
/// zero mismatches; word preservation and idempotence on each.
#[test]
fn criterion_05_randomized_ternary_equivalence() {
    let start = Instant::now();
    let mut rng = SplitMix64::new(0x5EED);
    let total = 10_000;
    for _ in 0..total {
        let bs = random_biseq_up_to(&mut rng, Alphabet::Ternary, 12);
        let ours = normalize(&bs).unwrap();
        let oracle = naive_normalize(&bs).unwrap();
        assert_eq!(ours.normalized, oracle, "mismatch on {bs}");
        assert_eq!(
            generate_word(&ours.normalized),
            generate_word(&bs),
            "word not preserved on {bs}"
        );
        let again = normalize(&ours.normalized).unwrap();
        assert!(again.notchanged, "not idempotent on {bs}");
        assert_eq!(again.normalized, ours.normalized);
    }
    println!(
        "criterion 5: {total} random ternary instances agree with the oracle in {:?}",
        start.elapsed()
    );
}

/// Criterion 6: exhaustive oracle equivalence over every binary bi-sequence
/// of length ≤ 7 (21,845 instances), zero mismatches.
#[test]
fn criterion_06_exhaustive_binary_equivalence() {
    let start = Instant::now();
    let mut count = 0usize;
    for len in 0..=7 {
        for bs in all_biseqs(Alphabet::Binary, len) {
            let ours = normalize_binary(&bs).unwrap();
            let oracle = naive_normalize(&bs).unwrap();
            assert_eq!(ours.normalized, oracle, "mismatch on {bs}");
            count += 1;
        }
    }
    println!(
        "criterion 6: {count} exhaustive binary instances agree with the oracle in {:?}",
        start.elapsed()
    );
}

/// Criterion 7: across the criteria 4–5 instance sets, every step following
/// a normalized prefix misses at most two pseudopalindromic prefixes.
#[test]
fn criterion_07_at_most_two_missed() {
    let mut checked_steps = 0usize;
    let mut check = |bs: &DirectiveBiSeq| {
        let w = generate_word(bs);
        let steps = prefix_lengths(bs);
        let pal: Vec<usize> = pseudopalindromic_prefixes(&w, bs.alphabet())
            .iter()
            .map(|r| r.length)
            .collect();
        let unary_run = w
            .letters()
            .iter()
            .take_while(|&&l| !w.is_empty() && l == w.letters()[0])
            .count();
        for n in 0..bs.len() {
            let upto = if n == 0 { 0 } else { steps[n - 1] };
            // The length-n prefix is normalized iff its steps are exactly the
            // pseudopalindromic prefixes up to |w_n| and the unary run is
            // E_i-directed.
            let all_pal: Vec<usize> = pal.iter().copied().filter(|&l| l <= upto).collect();
            if all_pal != steps[..n] {
                continue;
            }
            let canonical = if n == 0 {
                None
            } else {
                Some(Antimorphism::exchange_fixing(w.letters()[0]))
            };
            if let Some(canonical) = canonical {
                let m = unary_run.min(n);
                if bs.theta()[..m].iter().any(|&t| t != canonical) {
                    continue;
                }
            }
            let missed = pal.iter().filter(|&&l| l > upto && l < steps[n]).count();
            assert!(
                missed <= 2,
                "{bs}: {missed} pseudopalindromic prefixes missed at step {}",
                n + 1
            );
            checked_steps += 1;
        }
    };

    for len in 0..=4 {
        for bs in all_biseqs(Alphabet::Ternary, len) {
            check(&bs);
        }
    }
    let mut rng = SplitMix64::new(0x5EED);
    for _ in 0..10_000 {
        let bs = random_biseq_up_to(&mut rng, Alphabet::Ternary, 12);
        check(&bs);
    }
    println!("criterion 7: {checked_steps} normalized-prefix steps, all miss at most 2 prefixes");
}

/// Criterion 8: the rule-exclusion property holds on every iteration of
/// every normalization across the criteria 4–5 sets: at most one prefix
/// rule matches, and while one does, no factor window ends at or before the
/// prefix window's end. `normalize_checked` scans every window on every
/// iteration and errors on a violation.
#[test]
fn criterion_08_mutual_exclusion() {
    let mut runs = 0usize;
    for len in 0..=4 {
        for bs in all_biseqs(Alphabet::Ternary, len) {
            let checked = normalize_checked(&bs).expect("exclusion violated");
            assert_eq!(checked, normalize(&bs).unwrap(), "{bs}");
            runs += 1;
        }
    }
    let mut rng = SplitMix64::new(0x5EED);
    for _ in 0..10_000 {
        let bs = random_biseq_up_to(&mut rng, Alphabet::Ternary, 12);
        let checked = normalize_checked(&bs).expect("exclusion violated");
        assert_eq!(checked, normalize(&bs).unwrap(), "{bs}");
        runs += 1;
    }
    println!("criterion 8: rule exclusion verified on every iteration of {runs} runs");
}

/// Criterion 9: truncation stability — for nested bi-sequences bs ⊂ bs′,
/// normalize(bs) is a pair-wise prefix of normalize(bs′). 1,000 seeded
/// nested pairs with |bs′| ≤ 20, zero violations.
#[test]
fn criterion_09_truncation_stability() {
    let mut rng = SplitMix64::new(0xCAFE);
    for _ in 0..1_000 {
        let long_len = 2 + rng.below(19) as usize;
        let long = random_biseq(&mut rng, Alphabet::Ternary, long_len);
        let short_len = 1 + rng.below(long_len as u64 - 1) as usize;
        let short = long.truncated(short_len);

        let short_out = normalize(&short).unwrap().normalized;
        let long_out = normalize(&long).unwrap().normalized;
        assert!(
            short_out.is_pairwise_prefix_of(&long_out),
            "{short} ⊂ {long}: {short_out} is not a prefix of {long_out}"
        );
    }
    println!("criterion 9: 1000 nested pairs, truncation-stable");
}

/// Criterion 10: engineering targets — normalize a random length-100,000
/// bi-sequence in < 5 s; generate a 10⁶-letter word in < 5 s. The
/// generation input grows two letters per step, which exercises the
/// incremental engine rather than a few bulk closures.
#[test]
fn criterion_10_performance() {
    let mut rng = SplitMix64::new(0xBEEF);
    let big = random_biseq(&mut rng, Alphabet::Ternary, 100_000);
    let start = Instant::now();
    let out = normalize(&big).unwrap();
    let normalize_elapsed = start.elapsed();
    assert!(out.normalized.len() >= big.len());
    assert!(
        normalize_elapsed.as_secs_f64() < 5.0,
        "normalize took {normalize_elapsed:?}"
    );

    // (01)^N directed by E2 grows the word by two letters per step.
    let steps = 600_000;
    let mut slow = DirectiveBiSeq::empty(Alphabet::Ternary);
    for i in 0..steps {
        let letter = if i % 2 == 0 { '0' } else { '1' };
        slow.push((gpsw::Letter::from_char(letter).unwrap(), Antimorphism::E2));
    }
    let start = Instant::now();
    let w = generate_with(&slow, Some(1_000_000), |_, _| {});
    let generate_elapsed = start.elapsed();
    assert!(w.len() >= 1_000_000, "only generated {} letters", w.len());
    assert!(
        generate_elapsed.as_secs_f64() < 5.0,
        "generate took {generate_elapsed:?}"
    );

    // A random bi-sequence reaches the same size in a few closure steps.
    let fast_growth = random_biseq(&mut rng, Alphabet::Ternary, 64);
    let start = Instant::now();
    let w = generate_with(&fast_growth, Some(1_000_000), |_, _| {});
    let bulk_elapsed = start.elapsed();
    assert!(
        bulk_elapsed.as_secs_f64() < 5.0,
        "generate took {bulk_elapsed:?}"
    );

    println!(
        "criterion 10: normalize 100k pairs in {normalize_elapsed:?}; 1e6 letters stepwise in {generate_elapsed:?}, bulk in {bulk_elapsed:?} ({} letters)",
        w.len()
    );
}
