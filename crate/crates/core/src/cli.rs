//! Command-line front end: input parsing, dispatch and stable output.
//!
//! Input files look like
//!
//! ```text
//! rank: 2
//! tab:
//! 00
//! 01
//! 10
//! ```
//!
//! with character `i` of each bitstring being coordinate `i`; blank lines and
//! `#` comments are ignored. Words are written `1,0;0,-3`: letters separated
//! by `;`, coordinates by `,`.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;

use crate::decision::{self, Verdict};
use crate::error::{Error, Result};
use crate::f2_linalg::F2Vector;
use crate::lattice::GVector;
use crate::selftest;
use crate::symmetric_space::RootDatum;
use crate::weyl;

/// Exit status and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn success(stdout: String) -> Self {
        Self {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn input_error(message: impl std::fmt::Display) -> Self {
        Self {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "a1-weyl",
    version,
    about = "Decide the presentation by conjugation for A1 root systems extended by Z^n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Test 2-independence of the nonzero classes; exits 1 when U -> W is not an isomorphism.
    Check { file: PathBuf },
    /// Print a dependency certificate and, optionally, a word trivial in W.
    Witness {
        file: PathBuf,
        #[arg(long)]
        word_search: bool,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
    },
    /// Evaluate a word of reflections in W.
    Eval {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// List every datum of a small rank with its verdict.
    Enumerate {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        up_to_gl: bool,
    },
    /// Run the randomized axiom and property suites.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        iters: usize,
    },
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Parses the text input format and validates the datum.
pub fn parse_input(text: &str) -> Result<RootDatum> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, raw.split('#').next().unwrap_or("").trim()))
        .filter(|(_, content)| !content.is_empty());

    let (line, header) = lines
        .next()
        .ok_or_else(|| parse_error(1, 1, "expected `rank: <n>`"))?;
    let rank: usize = header
        .strip_prefix("rank:")
        .ok_or_else(|| parse_error(line, 1, "expected `rank: <n>`"))?
        .trim()
        .parse()
        .map_err(|_| parse_error(line, 6, "rank must be a nonnegative integer"))?;

    match lines.next() {
        Some((_, "tab:")) => {}
        Some((line, _)) => return Err(parse_error(line, 1, "expected `tab:`")),
        None => return Err(parse_error(line + 1, 1, "expected `tab:`")),
    }

    let mut tab = Vec::new();
    for (line, content) in lines {
        if let Some((col, ch)) = content.chars().enumerate().find(|(_, c)| *c != '0' && *c != '1') {
            return Err(parse_error(line, col + 1, format!("unexpected character {ch:?}")));
        }
        if content.len() != rank {
            return Err(parse_error(
                line,
                content.len().min(rank) + 1,
                format!("bitstring of length {} in a rank {rank} datum", content.len()),
            ));
        }
        tab.push(content.parse::<F2Vector>()?);
    }
    RootDatum::validate(rank, tab)
}

/// Parses `1,0;0,-3` into letters of length `rank`.
pub fn parse_word(text: &str, rank: usize) -> Result<Vec<GVector>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    let mut column = 1;
    let mut word = Vec::new();
    for letter in text.split(';') {
        let mut coords = Vec::new();
        for coord in letter.split(',') {
            let value: BigInt = coord
                .trim()
                .parse()
                .map_err(|_| parse_error(1, column, format!("invalid integer {:?}", coord.trim())))?;
            coords.push(value);
            column += coord.len() + 1;
        }
        if coords.len() != rank {
            return Err(Error::DimensionMismatch {
                expected: rank,
                found: coords.len(),
            });
        }
        word.push(GVector::new(coords));
    }
    Ok(word)
}

pub fn format_word(word: &[GVector]) -> String {
    word.iter()
        .map(|t| {
            t.coords()
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join(";")
}

pub fn format_verdict(v: &Verdict) -> String {
    format!(
        "cardinality: {}\nrank-sym: {}\nindependent: {}\nverdict: {}\n",
        v.cardinality,
        v.rank_sym,
        v.independent,
        if v.iso { "isomorphism" } else { "not-isomorphism" }
    )
}

fn verdict_code(v: &Verdict) -> i32 {
    if v.iso {
        0
    } else {
        1
    }
}

fn load(path: &PathBuf) -> std::result::Result<RootDatum, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_input(&text).map_err(|e| format!("{}: {e}", path.display()))
}

/// Runs one invocation; `args[0]` is the program name.
pub fn run<S: AsRef<str>>(args: &[S]) -> Outcome {
    let cli = match Cli::try_parse_from(args.iter().map(AsRef::as_ref)) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::success(text)
            };
        }
    };
    match cli.command {
        Command::Check { file } => match load(&file) {
            Ok(d) => {
                let v = decision::decide(&d);
                Outcome {
                    code: verdict_code(&v),
                    stdout: format_verdict(&v),
                    stderr: String::new(),
                }
            }
            Err(e) => Outcome::input_error(e),
        },
        Command::Witness {
            file,
            word_search,
            budget,
        } => match load(&file) {
            Ok(d) => witness(&d, word_search, budget),
            Err(e) => Outcome::input_error(e),
        },
        Command::Eval { file, word } => {
            let d = match load(&file) {
                Ok(d) => d,
                Err(e) => return Outcome::input_error(e),
            };
            match parse_word(&word, d.rank()).and_then(|w| weyl::eval_word_w(&d, &w)) {
                Ok(value) => Outcome::success(format!("result: {value}\n")),
                Err(e) => Outcome::input_error(e),
            }
        }
        Command::Enumerate { rank, up_to_gl } => match decision::enumerate(rank, up_to_gl) {
            Ok(items) => Outcome::success(format_enumeration(items)),
            Err(e) => Outcome::input_error(e),
        },
        Command::Selftest { seed, iters } => {
            let reports = selftest::run_all(seed, iters);
            let mut out = String::new();
            for r in &reports {
                match &r.failure {
                    None => writeln!(out, "{}: pass ({} cases)", r.name, r.cases),
                    Some(f) => writeln!(out, "{}: FAIL {f}", r.name),
                }
                .expect("writing to a String");
            }
            let all = reports.iter().all(selftest::SuiteReport::passed);
            writeln!(out, "selftest: {}", if all { "pass" } else { "fail" }).expect("String");
            Outcome {
                code: if all { 0 } else { 1 },
                stdout: out,
                stderr: String::new(),
            }
        }
    }
}

fn witness(d: &RootDatum, word_search: bool, budget: u64) -> Outcome {
    let v = decision::decide(d);
    let mut out = format_verdict(&v);
    if v.independent {
        out.push_str("dependency: none\n");
        return Outcome::success(out);
    }
    let w = match decision::extract_witness(d) {
        Ok(w) => w,
        Err(e) => return Outcome::input_error(e),
    };
    out.push_str("dependency:\n");
    for class in &w.dependency {
        writeln!(out, "{class}").expect("String");
    }
    writeln!(out, "pad-zero: {}", w.pad_zero).expect("String");
    if word_search {
        match decision::find_identity_word(d, &w, budget) {
            Ok(word) => writeln!(out, "word: {}", format_word(&word)).expect("String"),
            Err(Error::BudgetExhausted { .. }) => out.push_str("word: not-found-within-budget\n"),
            Err(e) => return Outcome::input_error(e),
        }
    }
    Outcome {
        code: verdict_code(&v),
        stdout: out,
        stderr: String::new(),
    }
}

fn format_enumeration(items: impl Iterator<Item = (RootDatum, Verdict)>) -> String {
    let mut out = String::new();
    let (mut count, mut iso) = (0usize, 0usize);
    for (d, v) in items {
        let classes: Vec<String> = d.tab().iter().map(ToString::to_string).collect();
        writeln!(out, "datum: {}", classes.join(" ")).expect("String");
        out.push_str(&format_verdict(&v));
        out.push('\n');
        count += 1;
        iso += usize::from(v.iso);
    }
    writeln!(out, "count: {count}\nisomorphisms: {iso}").expect("String");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let d = parse_input("rank: 2\ntab:\n00\n01\n10\n").unwrap();
        assert_eq!(d.rank(), 2);
        assert_eq!(d.tab().len(), 3);
        assert!(matches!(
            parse_input("rank: 2\ntab:\n00\n011\n"),
            Err(Error::Parse { line: 4, column: 3, .. })
        ));
        assert_eq!(parse_input("rank: 2\ntab:\n01\n10\n"), Err(Error::MissingZero));
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# a datum\n\nrank: 3   # three\ntab:\n000\n\n100 # e0\n010\n001\n";
        assert_eq!(parse_input(text).unwrap(), RootDatum::standard_basis(3).unwrap());
    }

    #[test]
    fn parse_diagnostics() {
        assert!(matches!(parse_input(""), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(
            parse_input("rank: x\ntab:\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_input("rank: 2\nclasses:\n00\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_input("rank: 2\ntab:\n0a\n"),
            Err(Error::Parse { line: 3, column: 2, .. })
        ));
    }

    #[test]
    fn formatted_datum_reparses() {
        let d = RootDatum::full(3).unwrap();
        assert_eq!(parse_input(&d.to_string()).unwrap(), d);
    }

    #[test]
    fn words() {
        let w = parse_word("1,0;-2, 7", 2).unwrap();
        assert_eq!(w, vec![GVector::from_i64s(&[1, 0]), GVector::from_i64s(&[-2, 7])]);
        assert_eq!(format_word(&w), "1,0;-2,7");
        assert!(parse_word("", 2).unwrap().is_empty());
        assert!(parse_word("1,0,0", 2).is_err());
        assert!(parse_word("1,z", 2).is_err());
    }

    #[test]
    fn unknown_flags_are_usage_errors() {
        let out = run(&["a1-weyl", "enumerate", "--rank", "2", "--bogus"]);
        assert_eq!(out.code, 2);
        assert!(!out.stderr.is_empty());
    }
}
