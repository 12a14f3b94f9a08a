//! Normalization over the ternary alphabet.
//!
//! The rewriter works on the interleaved pair encoding `δ₁ϑ₁δ₂ϑ₂…` (a theta
//! digit `i` stands for `Ei`). It proceeds in three stages:
//!
//! 1. [`reorder_letters`] relabels letters so the generated word would see
//!    `0`, `1`, `2` appear first in this order, without generating the word.
//! 2. [`preprocess_unary_prefix`] rewrites the Θ-prefix over the longest
//!    unary run `i…i` of Δ to `Ei…Ei` (the canonical directive for a unary
//!    word prefix).
//! 3. Rewrite rules run until none applies: 30 anchored *prefix rules*
//!    (`P1`–`P30`, instantiated at the fixed letter order `i=0, j=1, k=2`)
//!    and 4 *factor rules* (`F1`–`F4`, applicable at any position, over all
//!    letter/antimorphism assignments admitted by their side conditions).
//!    Each application splices the directive steps of missed
//!    pseudopalindromic prefixes into the bi-sequence; prefix rules take
//!    precedence, then the leftmost factor window, then the smallest rule
//!    id. At most one prefix rule can ever match, and while one does no
//!    factor window ending at or before its window end can match;
//!    [`normalize_checked`] verifies this exclusion on every iteration.
//!
//! The final letter substitution is undone before returning, so the output
//! is a bi-sequence over the caller's original letters generating the same
//! word.

use std::sync::OnceLock;

use crate::alphabet::{Alphabet, Antimorphism, Letter, LetterSubstitution};
use crate::biseq::{DirectiveBiSeq, Pair};
use crate::error::{Error, Result};
use crate::normalize::{splice_pairs, NormalizationOutcome, RuleId, RuleMatch};

/// Hard ceiling on rule applications. Every application adds at least one
/// pair and a normalized output never exceeds three pairs per input pair
/// (at most two missed prefixes per step), so a correct run stays well under
/// the guard; hitting it turns a rule-table bug into an error instead of a
/// loop.
pub fn iteration_guard(input_len: usize) -> usize {
    3 * input_len + 8
}

// ---------------------------------------------------------------------------
// Prefix rules
// ---------------------------------------------------------------------------

/// One anchored rule `head · unit^n · lhs_tail → head · unit^n · rhs_tail`
/// for all `n ≥ 0`, encoded as interleaved pair strings. Rules `P25`/`P26`
/// have no repeated unit. The right side always keeps the window except for
/// its last pair, which it replaces by two or three pairs.
struct PrefixRule {
    id: u8,
    head: Vec<Pair>,
    unit: Vec<Pair>,
    lhs_tail: Vec<Pair>,
    /// `rhs_tail` minus the shared `lhs_tail[..len-1]` part.
    replacement: Vec<Pair>,
}

/// The 30 normalization prefix rules at the fixed letter order `(i, j, k) =
/// (0, 1, 2)`, in definition order, as `(head, unit, lhs_tail, rhs_tail)`.
///
/// Three entries are easy to get wrong and are pinned by dedicated oracle
/// tests at `n = 0, 1, 2` (`tests/ternary_rules.rs`):
/// * `P27`: the replacement is `(i(ji)^{n+1}kkjik, Ei(EkR)^{n+1}EiEjEkEiEj)`
///   — exactly five Θ entries after the repetition, one per appended pair;
///   any extra token leaves Θ short of Δ.
/// * `P28`: the replacement word ends `…ij`, giving
///   `(i^{n+1}jjkij, Ei^{n+1}EkEjEiEkEj)`. The `…ik` variant also balances
///   lengths but fails to preserve the generated word: at `n = 0` it
///   directs `011220012200112` instead of `0112200112`.
/// * `P30`: the replacement Θ keeps the `R` directly after the `(R,Ej)`
///   repetition, `(ijk(jj)^n jkikji, EiEkEj(REj)^n REkEiEjEkEi)`; moving or
///   dropping that `R` breaks `|Δ| = |Θ|` on the right side.
const PREFIX_RULE_SPECS: [(&str, &str, &str, &str); 30] = [
    ("", "00", "02", "0012"),                       // P1
    ("00120R", "120R", "10", "1220"),               // P2
    ("0012", "0R12", "01", "0R21"),                 // P3
    ("001221", "1R11", "12", "1R22"),               // P4
    ("0012211R", "111R", "10", "1100"),             // P5
    ("0012", "0R12", "00", "0R20"),                 // P6
    ("00", "120R", "11", "1221"),                   // P7
    ("", "001221", "00122R", "0012211R"),           // P8
    ("", "001221", "001R", "00120R"),               // P9
    ("001221", "001221", "0R", "002R"),             // P10
    ("001221", "001221", "1R2R", "1R222R"),         // P11
    ("001221", "001221", "002R2R", "002R210R"),     // P12
    ("", "001221", "00120R2R", "00120R201R"),       // P13
    ("00", "120R", "122111", "12211R11"),           // P14
    ("0012", "0R12", "0R2022", "0R202112"),         // P15
    ("00", "00", "1212", "121R02"),                 // P16
    ("00120R12", "0R12", "2020", "202R10"),         // P17
    ("00", "00", "1210", "121120"),                 // P18
    ("0012", "0R12", "0R2112", "0R211022"),         // P19
    ("001221", "1R11", "0020", "002R10"),           // P20
    ("001221", "1R11", "1R2201", "1R220021"),       // P21
    ("00", "00", "1202", "120R12"),                 // P22
    ("0000", "00", "1111", "111R11"),               // P23
    ("0000", "00", "1020", "102R10"),               // P24
    ("", "", "0010", "00122100"),                   // P25
    ("", "", "001222", "0012210012"),               // P26
    ("00120R", "120R", "202111", "2021120021"),     // P27
    ("00", "00", "121121", "1211200211"),           // P28
    ("00120R", "120R", "211020", "2110220110"),     // P29
    ("001221", "1R11", "1R220020", "1R2200211200"), // P30
];

fn parse_pairs(encoded: &str) -> Vec<Pair> {
    let chars: Vec<char> = encoded.chars().collect();
    assert!(
        chars.len().is_multiple_of(2),
        "odd interleaved encoding {encoded:?}"
    );
    chars
        .chunks(2)
        .map(|c| {
            let letter = Letter::from_char(c[0]).expect("bad letter in rule table");
            let theta =
                Antimorphism::from_char(c[1], Alphabet::Ternary).expect("bad theta in rule table");
            (letter, theta)
        })
        .collect()
}

fn prefix_rules() -> &'static [PrefixRule] {
    static RULES: OnceLock<Vec<PrefixRule>> = OnceLock::new();
    RULES.get_or_init(|| {
        PREFIX_RULE_SPECS
            .iter()
            .enumerate()
            .map(|(i, &(head, unit, lhs_tail, rhs_tail))| {
                let head = parse_pairs(head);
                let unit = parse_pairs(unit);
                let lhs_tail = parse_pairs(lhs_tail);
                let rhs_tail = parse_pairs(rhs_tail);
                let shared = lhs_tail.len() - 1;
                assert!(!lhs_tail.is_empty());
                assert_eq!(rhs_tail[..shared], lhs_tail[..shared], "P{}", i + 1);
                let added = rhs_tail.len() - lhs_tail.len();
                assert!(added == 1 || added == 2, "P{}", i + 1);
                PrefixRule {
                    id: (i + 1) as u8,
                    head,
                    unit,
                    lhs_tail,
                    replacement: rhs_tail[shared..].to_vec(),
                }
            })
            .collect()
    })
}

/// Instantiates prefix rule `P<id>` (`1..=30`) at repetition count `n`,
/// returning its left and right side as bi-sequences. Useful for inspecting
/// the rule table; `P25` and `P26` have no repetition and ignore `n`.
pub fn prefix_rule_instance(id: u8, n: usize) -> (DirectiveBiSeq, DirectiveBiSeq) {
    assert!((1..=30).contains(&id), "prefix rule ids are 1..=30");
    let rule = &prefix_rules()[id as usize - 1];
    let spec = PREFIX_RULE_SPECS[id as usize - 1];
    let rhs_tail = parse_pairs(spec.3);
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for side in [&mut lhs, &mut rhs] {
        side.extend_from_slice(&rule.head);
        for _ in 0..n {
            side.extend_from_slice(&rule.unit);
        }
    }
    lhs.extend_from_slice(&rule.lhs_tail);
    rhs.extend_from_slice(&rhs_tail);
    (
        DirectiveBiSeq::from_pairs(Alphabet::Ternary, &lhs),
        DirectiveBiSeq::from_pairs(Alphabet::Ternary, &rhs),
    )
}

impl PrefixRule {
    fn lhs_tail_last(&self) -> Pair {
        *self.lhs_tail.last().unwrap()
    }

    /// Matches `head · unit^n · lhs_tail` against the start of `pairs` for
    /// the largest possible `n` (repetitions are munched greedily, then
    /// backed off so a tail beginning like the unit is still found).
    fn match_anchored(&self, pairs: &[Pair]) -> Option<RuleMatch> {
        let h = self.head.len();
        let t = self.lhs_tail.len();
        if pairs.len() < h + t || pairs[..h] != self.head[..] {
            return None;
        }
        let u = self.unit.len();
        let mut reps = 0usize;
        if u > 0 {
            while pairs.len() >= h + (reps + 1) * u
                && pairs[h + reps * u..h + (reps + 1) * u] == self.unit[..]
            {
                reps += 1;
            }
        }
        loop {
            let start = h + reps * u;
            if pairs.len() >= start + t && pairs[start..start + t] == self.lhs_tail[..] {
                return Some(RuleMatch {
                    rule: RuleId::Prefix(self.id),
                    position: 0,
                    window: start + t,
                    replacement: self.replacement.clone(),
                });
            }
            if reps == 0 || u == 0 {
                return None;
            }
            reps -= 1;
        }
    }
}

// ---------------------------------------------------------------------------
// Factor rules
// ---------------------------------------------------------------------------

/// Is the word generated by `pairs[..upto]` the unary word `i^upto`?
/// Holds exactly when every step appends `i` under `R` or `Ei`.
fn generates_unary_prefix(pairs: &[Pair], upto: usize, i: Letter) -> bool {
    let e_i = Antimorphism::exchange_fixing(i);
    pairs[..upto]
        .iter()
        .all(|&(d, t)| d == i && (t == Antimorphism::R || t == e_i))
}

/// Tries factor rule `F<id>` on the window starting at pair index `s`.
///
/// * `F1` `(a b₁ b₂, R Ei Ei) → (a b₁ b₂ b₁, R Ei R Ei)` where `b₁ = Ei(b₂)`,
///   except `(iii, R Ei Ei)` when the word so far is `i…i`;
/// * `F2` `(a b₁ b₂, Ei R R) → (a b₁ b₂ b₁, Ei R Ei R)` where `b₁ = Ei(b₂)`,
///   with the symmetric exception;
/// * `F3` `(a b₁ b₂, Ei Ej Ei) → (a b₁ b₂ EiEj(b₁), Ei Ej Ek Ei)` where
///   `Ei(b₁) = Ej(b₂)` and `i ≠ j`;
/// * `F4` `(a b₁ b₂ b₃, Ei Ej Ek Ek) → (a b₁ b₂ b₃ b₁ b₂, Ei Ej Ek Ei Ej Ek)`
///   where `Ei(b₁) = Ej(b₂) = Ek(b₃)` and `i, j, k` pairwise distinct.
fn factor_match_at(pairs: &[Pair], s: usize, id: u8) -> Option<RuleMatch> {
    let window = if id == 4 { 4 } else { 3 };
    if s + window > pairs.len() {
        return None;
    }
    let (a, t0) = pairs[s];
    let (b1, t1) = pairs[s + 1];
    let (b2, t2) = pairs[s + 2];
    let matched = match id {
        1 => {
            // (a b1 b2, R Ei Ei), b1 = Ei(b2)
            let i = t1.subscript()?;
            if t0 != Antimorphism::R || t2 != t1 || b1 != t1.letter_image(b2) {
                return None;
            }
            if a == i && b1 == i && b2 == i && generates_unary_prefix(pairs, s, i) {
                return None;
            }
            RuleMatch {
                rule: RuleId::Factor(1),
                position: s,
                window: 3,
                replacement: vec![(b2, Antimorphism::R), (b1, t1)],
            }
        }
        2 => {
            // (a b1 b2, Ei R R), b1 = Ei(b2)
            let i = t0.subscript()?;
            if t1 != Antimorphism::R || t2 != Antimorphism::R || b1 != t0.letter_image(b2) {
                return None;
            }
            if a == i && b1 == i && b2 == i && generates_unary_prefix(pairs, s, i) {
                return None;
            }
            RuleMatch {
                rule: RuleId::Factor(2),
                position: s,
                window: 3,
                replacement: vec![(b2, t0), (b1, Antimorphism::R)],
            }
        }
        3 => {
            // (a b1 b2, Ei Ej Ei), Ei(b1) = Ej(b2), i != j
            let i = t0.subscript()?;
            let j = t1.subscript()?;
            if i == j || t2 != t0 || t0.letter_image(b1) != t1.letter_image(b2) {
                return None;
            }
            let e_k = Antimorphism::exchange_fixing(Letter::remaining(i, j));
            let new_letter = t0.letter_image(t1.letter_image(b1));
            RuleMatch {
                rule: RuleId::Factor(3),
                position: s,
                window: 3,
                replacement: vec![(b2, e_k), (new_letter, t0)],
            }
        }
        4 => {
            // (a b1 b2 b3, Ei Ej Ek Ek), Ei(b1) = Ej(b2) = Ek(b3)
            let (b3, t3) = pairs[s + 3];
            let i = t0.subscript()?;
            let j = t1.subscript()?;
            let k = t2.subscript()?;
            if i == j || i == k || j == k || t3 != t2 {
                return None;
            }
            let img = t0.letter_image(b1);
            if t1.letter_image(b2) != img || t2.letter_image(b3) != img {
                return None;
            }
            RuleMatch {
                rule: RuleId::Factor(4),
                position: s,
                window: 4,
                replacement: vec![(b3, t0), (b1, t1), (b2, t2)],
            }
        }
        _ => unreachable!("factor rule ids are 1..=4"),
    };
    Some(matched)
}

// ---------------------------------------------------------------------------
// Preprocessing
// ---------------------------------------------------------------------------

/// Rewrites the Θ-prefix over the longest bi-sequence prefix in which Δ
/// repeats a single letter `i` and Θ uses only `R` and `Ei`: every `R` there
/// becomes `Ei`. Everything else is left untouched. Ternary only; other
/// alphabets are returned unchanged.
pub fn preprocess_unary_prefix(bs: &DirectiveBiSeq) -> DirectiveBiSeq {
    if bs.alphabet() != Alphabet::Ternary {
        return bs.clone();
    }
    let mut pairs: Vec<Pair> = bs.pairs().collect();
    preprocess_in_place(&mut pairs);
    DirectiveBiSeq::from_pairs(bs.alphabet(), &pairs)
}

fn preprocess_in_place(pairs: &mut [Pair]) -> bool {
    let Some(&(first, _)) = pairs.first() else {
        return false;
    };
    let e_first = Antimorphism::exchange_fixing(first);
    let run = pairs
        .iter()
        .take_while(|&&(d, t)| d == first && (t == Antimorphism::R || t == e_first))
        .count();
    let mut changed = false;
    for pair in pairs[..run].iter_mut() {
        if pair.1 != e_first {
            pair.1 = e_first;
            changed = true;
        }
    }
    changed
}

/// Relabels the bi-sequence so that the letters of the generated word occur
/// first in the order `0`, `1`, `2`, returning the substitution that was
/// applied. The decision needs no word generation: after forcing the first
/// letter to `0`, the first pair `(δ, ϑ)` following the longest unary-prefix
/// run `(0…0, {R,E0}…)` decides whether `1` and `2` must be swapped (`δ = 2`,
/// or `δ = 0` with `ϑ = E1`).
///
/// The two relabeling steps may compose into a 3-cycle; callers undo the
/// returned substitution with [`LetterSubstitution::inverse`].
pub fn reorder_letters(bs: &DirectiveBiSeq) -> (DirectiveBiSeq, LetterSubstitution) {
    if bs.alphabet() != Alphabet::Ternary || bs.is_empty() {
        return (bs.clone(), LetterSubstitution::identity());
    }
    let mut subst = LetterSubstitution::identity();
    let first = bs.delta()[0];
    if first != Letter::L0 {
        subst = LetterSubstitution::swap(Letter::L0, first);
    }
    let mut canon = bs.relabel(&subst);

    let run = canon
        .pairs()
        .take_while(|&(d, t)| d == Letter::L0 && (t == Antimorphism::R || t == Antimorphism::E0))
        .count();
    if run < canon.len() {
        let (d, t) = canon.pair(run);
        let swap12 = match (d, t) {
            (Letter::L0, Antimorphism::E1) => true,
            (Letter::L0, _) => false,
            (Letter::L1, _) => false,
            _ => true, // δ = 2
        };
        if swap12 {
            let s = LetterSubstitution::swap(Letter::L1, Letter::L2);
            subst = subst.then(&s);
            canon = canon.relabel(&s);
        }
    }
    (canon, subst)
}

// ---------------------------------------------------------------------------
// Rule search
// ---------------------------------------------------------------------------

fn ensure_ternary(bs: &DirectiveBiSeq) -> Result<()> {
    if bs.alphabet() == Alphabet::Ternary {
        Ok(())
    } else {
        Err(Error::WrongAlphabet {
            expected: Alphabet::Ternary,
            found: bs.alphabet(),
        })
    }
}

fn find_applicable_on(pairs: &[Pair]) -> Option<RuleMatch> {
    for rule in prefix_rules() {
        if let Some(m) = rule.match_anchored(pairs) {
            return Some(m);
        }
    }
    for s in 0..pairs.len() {
        for id in 1..=4u8 {
            if let Some(m) = factor_match_at(pairs, s, id) {
                return Some(m);
            }
        }
    }
    None
}

fn all_matches_on(pairs: &[Pair]) -> Vec<RuleMatch> {
    let mut matches: Vec<RuleMatch> = prefix_rules()
        .iter()
        .filter_map(|r| r.match_anchored(pairs))
        .collect();
    for s in 0..pairs.len() {
        for id in 1..=4u8 {
            if let Some(m) = factor_match_at(pairs, s, id) {
                matches.push(m);
            }
        }
    }
    matches
}

/// Finds the next rule to apply on a preprocessed bi-sequence: the prefix
/// rule match if any prefix rule applies, otherwise the leftmost factor
/// match (smallest window position, then smallest rule id), otherwise
/// `None` — in which case the bi-sequence is normalized.
pub fn find_applicable_rule(bs: &DirectiveBiSeq) -> Option<RuleMatch> {
    let pairs: Vec<Pair> = bs.pairs().collect();
    find_applicable_on(&pairs)
}

/// Every rule match on the bi-sequence: prefix matches first (in id order),
/// then factor matches ordered by position and id. Normal runs never see
/// more than one entry when a prefix rule matches; [`normalize_checked`]
/// turns that expectation into an error check.
pub fn find_all_rule_matches(bs: &DirectiveBiSeq) -> Vec<RuleMatch> {
    let pairs: Vec<Pair> = bs.pairs().collect();
    all_matches_on(&pairs)
}

/// Applies a match produced by [`find_applicable_rule`] on the same
/// bi-sequence. The pairs before the window are untouched; the window's
/// last pair is replaced by the match's replacement, lengthening the
/// bi-sequence by one or two pairs.
pub fn apply_rule(bs: &DirectiveBiSeq, m: &RuleMatch) -> Result<DirectiveBiSeq> {
    ensure_ternary(bs)?;
    let mut pairs: Vec<Pair> = bs.pairs().collect();
    let fresh = match m.rule {
        RuleId::Prefix(id) => prefix_rules()
            .get(id as usize - 1)
            .and_then(|r| r.match_anchored(&pairs)),
        RuleId::Factor(id) => factor_match_at(&pairs, m.position, id),
        _ => None,
    };
    if fresh.as_ref() != Some(m) {
        return Err(Error::StaleRuleMatch {
            rule: m.rule.to_string(),
            position: m.position,
        });
    }
    splice_pairs(&mut pairs, m.splice_index(), &m.replacement);
    Ok(DirectiveBiSeq::from_pairs(bs.alphabet(), &pairs))
}

// ---------------------------------------------------------------------------
// Normalization drivers
// ---------------------------------------------------------------------------

/// Normalizes a ternary directive bi-sequence.
///
/// The output generates the same word as the input and its prefix sequence
/// contains every nonempty pseudopalindromic prefix of that word;
/// `notchanged` reports whether the input was already in that form.
///
/// Pairs are consumed left to right and rules are applied as soon as they
/// can match, which keeps the run linear for typical inputs and makes the
/// output of a truncated input a pair-wise prefix of the output of any
/// extension. [`normalize_checked`] is the straightforward
/// scan-apply-rescan driver used to cross-check this one.
pub fn normalize(bs: &DirectiveBiSeq) -> Result<NormalizationOutcome> {
    ensure_ternary(bs)?;
    let (canon, subst) = reorder_letters(bs);
    let mut pairs: Vec<Pair> = canon.pairs().collect();
    let pre_changed = preprocess_in_place(&mut pairs);
    let guard = iteration_guard(bs.len());

    let mut out: Vec<Pair> = Vec::with_capacity(pairs.len() + pairs.len() / 2);
    let mut trace: Vec<RuleMatch> = Vec::new();
    for &pair in &pairs {
        out.push(pair);
        let mut changed_from = out.len() - 1;
        let mut fresh = true;
        while let Some(m) = next_streaming_match(&out, changed_from, fresh) {
            if trace.len() >= guard {
                return Err(Error::Internal(format!(
                    "iteration guard of {guard} rule applications exceeded"
                )));
            }
            let idx = m.splice_index();
            splice_pairs(&mut out, idx, &m.replacement);
            trace.push(m);
            changed_from = idx;
            fresh = false;
        }
    }
    finish(bs, out, trace, pre_changed, &subst)
}

/// Finds the next match after appending or rewriting near the end of `out`.
///
/// The prefix of `out` before the last append was already normalized, so a
/// new match must involve the changed region: for prefix rules that means
/// the anchored match simply succeeds or not; for factor rules only windows
/// reaching index `changed_from` or later can newly match, and those start
/// at `changed_from - 3` at the earliest.
fn next_streaming_match(out: &[Pair], changed_from: usize, fresh: bool) -> Option<RuleMatch> {
    let last = *out.last().expect("streaming match on nonempty buffer");
    for rule in prefix_rules() {
        // On a fresh append the whole buffer is the candidate window, so its
        // last pair must be the rule's final pair; this skips almost every
        // rule in O(1) without attempting the anchored match.
        if fresh && rule.lhs_tail_last() != last {
            continue;
        }
        if let Some(m) = rule.match_anchored(out) {
            return Some(m);
        }
    }
    for s in changed_from.saturating_sub(3)..out.len() {
        for id in 1..=4u8 {
            if let Some(m) = factor_match_at(out, s, id) {
                return Some(m);
            }
        }
    }
    None
}

/// Reference driver: rescan the whole bi-sequence after every application,
/// verifying the rule-exclusion property on every iteration. Quadratic;
/// meant for tests and cross-checking [`normalize`].
///
/// The exclusion property: at most one prefix rule matches, and while a
/// prefix rule matches, no factor window ends at or before the prefix
/// window's end. (Factor windows may well pattern-match deeper inside the
/// not-yet-normalized tail — those are later rewrites, not competing ones,
/// and the prefix rule is still the unique rewrite usable on the shortest
/// prefix.)
pub fn normalize_checked(bs: &DirectiveBiSeq) -> Result<NormalizationOutcome> {
    ensure_ternary(bs)?;
    let (canon, subst) = reorder_letters(bs);
    let mut pairs: Vec<Pair> = canon.pairs().collect();
    let pre_changed = preprocess_in_place(&mut pairs);
    let guard = iteration_guard(bs.len());

    let mut trace: Vec<RuleMatch> = Vec::new();
    loop {
        let matches = all_matches_on(&pairs);
        let prefix_count = matches.iter().filter(|m| m.rule.is_prefix_rule()).count();
        if prefix_count > 1 {
            return Err(Error::Internal(format!(
                "mutual exclusion violated: {prefix_count} prefix rules match at once"
            )));
        }
        if let Some(pm) = matches.iter().find(|m| m.rule.is_prefix_rule()) {
            let end = pm.position + pm.window;
            if matches
                .iter()
                .any(|m| !m.rule.is_prefix_rule() && m.position + m.window <= end)
            {
                return Err(Error::Internal(format!(
                    "mutual exclusion violated: a factor rule matches within the {} window",
                    pm.rule
                )));
            }
        }
        let Some(m) = matches.into_iter().next() else {
            break;
        };
        if trace.len() >= guard {
            return Err(Error::Internal(format!(
                "iteration guard of {guard} rule applications exceeded"
            )));
        }
        splice_pairs(&mut pairs, m.splice_index(), &m.replacement);
        trace.push(m);
    }
    finish(bs, pairs, trace, pre_changed, &subst)
}

fn finish(
    input: &DirectiveBiSeq,
    out: Vec<Pair>,
    trace: Vec<RuleMatch>,
    pre_changed: bool,
    subst: &LetterSubstitution,
) -> Result<NormalizationOutcome> {
    let inverse = subst.inverse();
    let normalized = DirectiveBiSeq::from_pairs(input.alphabet(), &out).relabel(&inverse);
    let trace = trace
        .into_iter()
        .map(|m| RuleMatch {
            replacement: m
                .replacement
                .iter()
                .map(|&(d, t)| (inverse.apply_letter(d), inverse.apply_antimorphism(t)))
                .collect(),
            ..m
        })
        .collect::<Vec<_>>();
    let notchanged = trace.is_empty() && !pre_changed;
    debug_assert!(!notchanged || normalized == *input);
    Ok(NormalizationOutcome {
        normalized,
        notchanged,
        trace,
    })
}
