//! `gpsw` — generate and normalize generalized pseudostandard words.
//!
//! Directive bi-sequences are passed as two strings: `--delta` over `012`
//! (binary: `01`) and `--theta` over `R012` (binary: `RE`), where a digit
//! `i` in a ternary theta string denotes the exchange antimorphism fixing
//! `i`. Exit codes: 0 success (or "normalized" for `check`), 1 semantic
//! failure (not normalized, mismatch, batch line errors), 2 usage or parse
//! errors.

use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use gpsw::{
    generate_with, generate_word, is_normalized, naive_normalize, normalize, normalize_binary,
    Alphabet, DirectiveBiSeq, NormalizationOutcome,
};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "gpsw", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlphabetArg {
    Ternary,
    Binary,
}

impl From<AlphabetArg> for Alphabet {
    fn from(a: AlphabetArg) -> Alphabet {
        match a {
            AlphabetArg::Ternary => Alphabet::Ternary,
            AlphabetArg::Binary => Alphabet::Binary,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Normalize a directive bi-sequence and print the normalized form.
    Normalize {
        #[arg(long)]
        delta: String,
        #[arg(long)]
        theta: String,
        #[arg(long, value_enum, default_value_t = AlphabetArg::Ternary)]
        alphabet: AlphabetArg,
        /// Emit a single JSON object instead of text.
        #[arg(long)]
        json: bool,
        /// Also print every rule application (rule id and window position).
        #[arg(long)]
        trace: bool,
    },
    /// Generate the word directed by a bi-sequence.
    Generate {
        #[arg(long)]
        delta: String,
        #[arg(long)]
        theta: String,
        #[arg(long, value_enum, default_value_t = AlphabetArg::Ternary)]
        alphabet: AlphabetArg,
        /// Print every prefix w1, w2, … on its own line.
        #[arg(long)]
        prefixes: bool,
        /// Stop once the word reaches this many letters.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Check whether a bi-sequence is normalized (exit 0) or not (exit 1).
    Check {
        #[arg(long)]
        delta: String,
        #[arg(long)]
        theta: String,
        #[arg(long, value_enum, default_value_t = AlphabetArg::Ternary)]
        alphabet: AlphabetArg,
    },
    /// Run the rule-based normalizer and the naive reference on one case
    /// and report whether they agree.
    Compare {
        #[arg(long)]
        delta: String,
        #[arg(long)]
        theta: String,
        #[arg(long, value_enum, default_value_t = AlphabetArg::Ternary)]
        alphabet: AlphabetArg,
    },
    /// Compare the normalizer against the naive reference on random
    /// bi-sequences; reports are byte-identical for a fixed seed.
    Fuzz {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        #[arg(long = "max-len", value_parser = clap::value_parser!(u64).range(1..))]
        max_len: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = AlphabetArg::Ternary)]
        alphabet: AlphabetArg,
    },
    /// Normalize every `delta<TAB>theta` line of a file; lines starting
    /// with '#' are ignored. Errors become per-line records and set exit 1.
    Batch {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = AlphabetArg::Ternary)]
        alphabet: AlphabetArg,
        /// Emit one JSON object per line.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Serialize)]
struct TraceEntry {
    rule: String,
    position: usize,
}

#[derive(Serialize)]
struct NormalizeReport {
    delta: String,
    theta: String,
    notchanged: bool,
    trace: Vec<TraceEntry>,
}

#[derive(Serialize)]
struct BatchRecord {
    delta: String,
    theta: String,
    notchanged: bool,
}

#[derive(Serialize)]
struct BatchError {
    error: String,
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    match Cli::parse().command {
        Command::Normalize {
            delta,
            theta,
            alphabet,
            json,
            trace,
        } => cmd_normalize(&delta, &theta, alphabet.into(), json, trace),
        Command::Generate {
            delta,
            theta,
            alphabet,
            prefixes,
            limit,
        } => cmd_generate(&delta, &theta, alphabet.into(), prefixes, limit),
        Command::Check {
            delta,
            theta,
            alphabet,
        } => cmd_check(&delta, &theta, alphabet.into()),
        Command::Compare {
            delta,
            theta,
            alphabet,
        } => cmd_compare(&delta, &theta, alphabet.into()),
        Command::Fuzz {
            count,
            max_len,
            seed,
            alphabet,
        } => cmd_fuzz(count, max_len, seed, alphabet.into()),
        Command::Batch {
            input,
            alphabet,
            json,
        } => cmd_batch(&input, alphabet.into(), json),
    }
}

fn parse_biseq(delta: &str, theta: &str, alphabet: Alphabet) -> Result<DirectiveBiSeq, i32> {
    DirectiveBiSeq::parse(delta, theta, alphabet).map_err(|e| {
        eprintln!("error: {e}");
        2
    })
}

fn run_normalizer(bs: &DirectiveBiSeq) -> Result<NormalizationOutcome, i32> {
    let result = match bs.alphabet() {
        Alphabet::Ternary => normalize(bs),
        Alphabet::Binary => normalize_binary(bs),
    };
    result.map_err(|e| {
        eprintln!("error: {e}");
        1
    })
}

fn cmd_normalize(delta: &str, theta: &str, alphabet: Alphabet, json: bool, trace: bool) -> i32 {
    let bs = match parse_biseq(delta, theta, alphabet) {
        Ok(bs) => bs,
        Err(code) => return code,
    };
    let outcome = match run_normalizer(&bs) {
        Ok(o) => o,
        Err(code) => return code,
    };
    if json {
        let report = NormalizeReport {
            delta: outcome.normalized.delta_string(),
            theta: outcome.normalized.theta_string(),
            notchanged: outcome.notchanged,
            trace: outcome
                .trace
                .iter()
                .map(|m| TraceEntry {
                    rule: m.rule.to_string(),
                    position: m.position,
                })
                .collect(),
        };
        println!("{}", serde_json::to_string(&report).expect("serialize"));
    } else {
        println!(
            "delta={} theta={} notchanged={}",
            outcome.normalized.delta_string(),
            outcome.normalized.theta_string(),
            outcome.notchanged
        );
        if trace {
            for m in &outcome.trace {
                println!("rule={} position={}", m.rule, m.position);
            }
        }
    }
    0
}

fn cmd_generate(
    delta: &str,
    theta: &str,
    alphabet: Alphabet,
    prefixes: bool,
    limit: Option<usize>,
) -> i32 {
    let bs = match parse_biseq(delta, theta, alphabet) {
        Ok(bs) => bs,
        Err(code) => return code,
    };
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let word = generate_with(&bs, limit, |_, w| {
        if prefixes {
            write_word(&mut out, w);
        }
    });
    if !prefixes && !word.is_empty() {
        write_word(&mut out, word.letters());
    }
    out.flush().expect("stdout");
    0
}

fn write_word(out: &mut impl Write, letters: &[gpsw::Letter]) {
    let bytes: Vec<u8> = letters.iter().map(|l| l.to_char() as u8).collect();
    out.write_all(&bytes).expect("stdout");
    out.write_all(b"\n").expect("stdout");
}

fn cmd_check(delta: &str, theta: &str, alphabet: Alphabet) -> i32 {
    let bs = match parse_biseq(delta, theta, alphabet) {
        Ok(bs) => bs,
        Err(code) => return code,
    };
    if is_normalized(&bs) {
        println!("normalized");
        0
    } else {
        println!("not normalized");
        1
    }
}

fn cmd_compare(delta: &str, theta: &str, alphabet: Alphabet) -> i32 {
    let bs = match parse_biseq(delta, theta, alphabet) {
        Ok(bs) => bs,
        Err(code) => return code,
    };
    let outcome = match run_normalizer(&bs) {
        Ok(o) => o,
        Err(code) => return code,
    };
    let oracle = match naive_normalize(&bs) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    println!(
        "normalize: delta={} theta={}",
        outcome.normalized.delta_string(),
        outcome.normalized.theta_string()
    );
    println!(
        "naive:     delta={} theta={}",
        oracle.delta_string(),
        oracle.theta_string()
    );
    if outcome.normalized == oracle {
        println!("match");
        0
    } else {
        println!("mismatch");
        1
    }
}

/// SplitMix64; deterministic and platform-independent so fuzz reports are
/// reproducible byte for byte.
struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }
}

fn cmd_fuzz(count: u64, max_len: u64, seed: u64, alphabet: Alphabet) -> i32 {
    let mut rng = SplitMix64::new(seed);
    let letters = alphabet.letters();
    let thetas = alphabet.antimorphisms();
    let mut agree = 0u64;
    for _ in 0..count {
        let len = 1 + rng.below(max_len) as usize;
        let mut bs = DirectiveBiSeq::empty(alphabet);
        for _ in 0..len {
            let l = letters[rng.below(letters.len() as u64) as usize];
            let t = thetas[rng.below(thetas.len() as u64) as usize];
            bs.push((l, t));
        }

        let mut failures: Vec<&str> = Vec::new();
        match (run_fuzz_case(&bs), naive_normalize(&bs)) {
            (Ok(outcome), Ok(oracle)) => {
                if outcome.normalized != oracle {
                    failures.push("normalize != naive_normalize");
                }
                if !is_normalized(&outcome.normalized) {
                    failures.push("output not normalized");
                }
                if generate_word(&outcome.normalized) != generate_word(&bs) {
                    failures.push("generated word not preserved");
                }
                match run_fuzz_case(&outcome.normalized) {
                    Ok(again) if again.notchanged => {}
                    _ => failures.push("not idempotent"),
                }
            }
            _ => failures.push("normalizer error"),
        }
        if failures.is_empty() {
            agree += 1;
        } else {
            println!(
                "mismatch delta={} theta={} ({})",
                bs.delta_string(),
                bs.theta_string(),
                failures.join(", ")
            );
        }
    }
    println!("{agree}/{count} agree");
    if agree == count {
        0
    } else {
        1
    }
}

fn run_fuzz_case(bs: &DirectiveBiSeq) -> gpsw::Result<NormalizationOutcome> {
    match bs.alphabet() {
        Alphabet::Ternary => normalize(bs),
        Alphabet::Binary => normalize_binary(bs),
    }
}

fn cmd_batch(input: &PathBuf, alphabet: Alphabet, json: bool) -> i32 {
    let file = match File::open(input) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: cannot open {}: {e}", input.display());
            return 2;
        }
    };
    let mut any_error = false;
    for (lineno, line) in BufReader::new(file).lines().enumerate() {
        let line = match line {
            Ok(l) => l,
            Err(e) => {
                eprintln!("error: read failure at line {}: {e}", lineno + 1);
                return 2;
            }
        };
        let trimmed = line.trim_end_matches(['\r', '\n']);
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        match batch_line(trimmed, alphabet) {
            Ok(outcome) => {
                if json {
                    let record = BatchRecord {
                        delta: outcome.normalized.delta_string(),
                        theta: outcome.normalized.theta_string(),
                        notchanged: outcome.notchanged,
                    };
                    println!("{}", serde_json::to_string(&record).expect("serialize"));
                } else {
                    println!(
                        "{}\t{}\t{}",
                        outcome.normalized.delta_string(),
                        outcome.normalized.theta_string(),
                        outcome.notchanged
                    );
                }
            }
            Err(message) => {
                any_error = true;
                let message = format!("line {}: {message}", lineno + 1);
                if json {
                    let record = BatchError { error: message };
                    println!("{}", serde_json::to_string(&record).expect("serialize"));
                } else {
                    println!("error\t{message}");
                }
            }
        }
    }
    if any_error {
        1
    } else {
        0
    }
}

fn batch_line(line: &str, alphabet: Alphabet) -> Result<NormalizationOutcome, String> {
    let (delta, theta) = line
        .split_once('\t')
        .ok_or_else(|| "expected delta<TAB>theta".to_string())?;
    let bs = DirectiveBiSeq::parse(delta, theta, alphabet).map_err(|e| e.to_string())?;
    run_fuzz_case(&bs).map_err(|e| e.to_string())
}
