//! Normalization over the binary alphabet.
//!
//! Over `{0, 1}` a unary word is fixed only by `R`, so no unary-prefix
//! convention is needed and every directive bi-sequence has a unique
//! normalized form. It is reached with three prefix replacements and one
//! factor replacement `(a b b̄, ϑ ϑ̄ ϑ̄) → (a b b̄ b, ϑ ϑ̄ ϑ ϑ̄)` applied
//! left to right (bars denote the other letter and the other antimorphism).
//!
//! A prefix replacement can expose another one on the lengthened prefix:
//! `(001, REE)` first takes `(00, RE) → (001, RRE)` and the result
//! `(0011, RREE)` then takes `(0011, RREE) → (00110, RRERE)`. The driver
//! therefore re-checks the prefix replacements, then the leftmost factor
//! window, until nothing applies — the same discipline as the ternary
//! normalizer.

use crate::alphabet::{Alphabet, Antimorphism, Letter};
use crate::biseq::{DirectiveBiSeq, Pair};
use crate::error::{Error, Result};
use crate::normalize::ternary::iteration_guard;
use crate::normalize::{splice_pairs, NormalizationOutcome, RuleId, RuleMatch};

fn other_letter(l: Letter) -> Letter {
    Antimorphism::E.letter_image(l)
}

fn other_theta(t: Antimorphism) -> Antimorphism {
    match t {
        Antimorphism::R => Antimorphism::E,
        _ => Antimorphism::R,
    }
}

/// The three prefix replacements; their patterns are mutually exclusive on
/// any one bi-sequence, so at most one can match at a time.
///
/// * `BP1` `(a ā, R R) → (a ā a, R E R)`
/// * `BP2` `(a^i, R^{i-1} E) → (a^i ā, R^i E)` for `i ≥ 1`
/// * `BP3` `(a^i ā ā, R^i E E) → (a^i ā ā a, R^i E R E)` for `i ≥ 1`
fn match_binary_prefix(pairs: &[Pair]) -> Option<RuleMatch> {
    let &(a, t0) = pairs.first()?;
    let bar = other_letter(a);

    // BP1
    if t0 == Antimorphism::R && pairs.len() >= 2 && pairs[1] == (bar, Antimorphism::R) {
        return Some(RuleMatch {
            rule: RuleId::BinaryPrefix(1),
            position: 0,
            window: 2,
            replacement: vec![(bar, Antimorphism::E), (a, Antimorphism::R)],
        });
    }

    // Leading (a, R) run shared by BP2 and BP3.
    let run = pairs
        .iter()
        .take_while(|&&p| p == (a, Antimorphism::R))
        .count();

    // BP2: i-1 pairs (a, R) followed by (a, E).
    if pairs.len() > run && pairs[run] == (a, Antimorphism::E) {
        return Some(RuleMatch {
            rule: RuleId::BinaryPrefix(2),
            position: 0,
            window: run + 1,
            replacement: vec![(a, Antimorphism::R), (bar, Antimorphism::E)],
        });
    }

    // BP3: i ≥ 1 pairs (a, R) followed by (ā, E)(ā, E).
    if run >= 1
        && pairs.len() >= run + 2
        && pairs[run] == (bar, Antimorphism::E)
        && pairs[run + 1] == (bar, Antimorphism::E)
    {
        return Some(RuleMatch {
            rule: RuleId::BinaryPrefix(3),
            position: 0,
            window: run + 2,
            replacement: vec![(bar, Antimorphism::R), (a, Antimorphism::E)],
        });
    }

    None
}

fn match_binary_factor(pairs: &[Pair], s: usize) -> Option<RuleMatch> {
    if s + 3 > pairs.len() {
        return None;
    }
    let (_, t0) = pairs[s];
    let (b, t1) = pairs[s + 1];
    let (b2, t2) = pairs[s + 2];
    if b2 == other_letter(b) && t1 == other_theta(t0) && t2 == t1 {
        Some(RuleMatch {
            rule: RuleId::BinaryFactor,
            position: s,
            window: 3,
            replacement: vec![(b2, t0), (b, t1)],
        })
    } else {
        None
    }
}

/// Normalizes a binary directive bi-sequence: returns the unique bi-sequence
/// generating the same word whose prefix sequence contains every `R`- and
/// `E`-palindromic prefix of it.
pub fn normalize_binary(bs: &DirectiveBiSeq) -> Result<NormalizationOutcome> {
    if bs.alphabet() != Alphabet::Binary {
        return Err(Error::WrongAlphabet {
            expected: Alphabet::Binary,
            found: bs.alphabet(),
        });
    }
    let guard = iteration_guard(bs.len());
    let mut pairs: Vec<Pair> = bs.pairs().collect();
    let mut trace: Vec<RuleMatch> = Vec::new();

    loop {
        let next = match_binary_prefix(&pairs)
            .or_else(|| (0..pairs.len()).find_map(|s| match_binary_factor(&pairs, s)));
        let Some(m) = next else { break };
        if trace.len() >= guard {
            return Err(Error::Internal(format!(
                "iteration guard of {guard} rule applications exceeded"
            )));
        }
        splice_pairs(&mut pairs, m.splice_index(), &m.replacement);
        trace.push(m);
    }

    let notchanged = trace.is_empty();
    Ok(NormalizationOutcome {
        normalized: DirectiveBiSeq::from_pairs(Alphabet::Binary, &pairs),
        notchanged,
        trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bs(delta: &str, theta: &str) -> DirectiveBiSeq {
        DirectiveBiSeq::parse(delta, theta, Alphabet::Binary).unwrap()
    }

    #[test]
    fn prefix_replacement_examples() {
        let out = normalize_binary(&bs("01", "RR")).unwrap();
        assert_eq!(out.normalized, bs("010", "RER"));
        assert_eq!(out.trace[0].rule, RuleId::BinaryPrefix(1));

        let out = normalize_binary(&bs("0", "E")).unwrap();
        assert_eq!(out.normalized, bs("01", "RE"));
        assert_eq!(out.trace[0].rule, RuleId::BinaryPrefix(2));

        let out = normalize_binary(&bs("011", "REE")).unwrap();
        assert_eq!(out.normalized, bs("0110", "RERE"));
        assert_eq!(out.trace[0].rule, RuleId::BinaryPrefix(3));
    }

    #[test]
    fn prefix_replacements_cascade() {
        // (00, RE) → (001, RRE) exposes (0011, RREE) → (00110, RRERE); the
        // intermediate form would miss the palindromic prefix 0011100 of the
        // generated word 0011100011.
        let out = normalize_binary(&bs("001", "REE")).unwrap();
        assert_eq!(out.normalized, bs("00110", "RRERE"));
        let rules: Vec<RuleId> = out.trace.iter().map(|m| m.rule).collect();
        assert_eq!(
            rules,
            vec![RuleId::BinaryPrefix(2), RuleId::BinaryPrefix(3)]
        );
    }

    #[test]
    fn factor_replacement() {
        let out = normalize_binary(&bs("010", "REE")).unwrap();
        assert_eq!(out.normalized, bs("0101", "RERE"));
        assert_eq!(out.trace.len(), 1);
        assert_eq!(out.trace[0].rule, RuleId::BinaryFactor);
        assert_eq!(out.trace[0].position, 0);
    }

    #[test]
    fn already_normalized() {
        for (d, t) in [("0", "R"), ("", ""), ("0110", "RERE")] {
            let out = normalize_binary(&bs(d, t)).unwrap();
            assert!(out.notchanged, "({d}, {t})");
            assert_eq!(out.normalized, bs(d, t));
        }
    }

    #[test]
    fn ternary_input_is_rejected() {
        let t = DirectiveBiSeq::parse("012", "R12", Alphabet::Ternary).unwrap();
        assert!(matches!(
            normalize_binary(&t),
            Err(Error::WrongAlphabet { .. })
        ));
    }
}
