//! The `bibifix` command line.
//!
//! Exit codes: 0 when the checked property holds, 1 when it is verified
//! false (a witness is printed), 2 for usage or input errors, 3 when an
//! enumeration would exceed the budget.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::codes::{
    build_cbbf, build_cbbf_rect, build_cbbf_with_k, default_diagonal, expanding_witnesses,
    verify_cross_set, verify_nonexpandable, verify_nonexpandable_set, MatrixCode,
};
use crate::generation::{count_bbf, generate_bbf_with};
use crate::graycode::{code_gray, diagonal_gray, reflected_gray, verify_gray};
use crate::jsonl::{self, Header, Witness};
use crate::matrices::{bibifix_dims, is_bibifix_free, SquareMatrix};
use crate::words::{
    best_s, bifix_lengths, build_s, count_bf, enumerate_bf, is_bifix_free,
    is_nonexpandable_word_set, Word, WordCode,
};
use crate::{Budget, Error, Method, Result, Verdict};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "bibifix",
    version,
    about = "Bibifix-free matrices and cross-bibifix-free matrix codes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report the bifixes of a word or the bibifixes of a matrix.
    Check {
        #[arg(value_enum)]
        target: CheckTarget,
        /// Digit string, or rows joined by '/' for a matrix.
        value: String,
        #[command(flatten)]
        cfg: RunConfig,
    },
    /// Print |BF_n^q| or |BBF_n^q| from the recurrences.
    Count {
        #[arg(value_enum)]
        target: CountTarget,
        #[command(flatten)]
        cfg: RunConfig,
    },
    /// Stream every bibifix-free n x n matrix.
    Generate {
        #[command(flatten)]
        cfg: RunConfig,
    },
    /// Stream a word set or matrix code.
    Build {
        #[arg(value_enum)]
        target: BuildTarget,
        #[command(flatten)]
        cfg: RunConfig,
    },
    /// Verify a cross-(bi)bifix-free or non-expandability claim.
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
        #[command(flatten)]
        cfg: RunConfig,
    },
    /// Stream or check a Gray listing.
    Gray {
        #[arg(value_enum, default_value = "cbbf")]
        target: GrayTarget,
        #[command(flatten)]
        cfg: RunConfig,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum CheckTarget {
    Word,
    Matrix,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum CountTarget {
    Bf,
    Bbf,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum BuildTarget {
    /// Bifix-free words of length n.
    Bf,
    /// The word set S_{n,q}^(k).
    S,
    /// The square matrix code.
    Cbbf,
    /// The n x m rectangular code.
    Rect,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum VerifyTarget {
    /// Pairwise cross-bibifix-freeness of the code (or --input set).
    Cross,
    /// Non-expandability of the code (or --input set) on BBF_n^q.
    Nonexpandable,
    /// Pairwise cross-bibifix-freeness of the rectangular code.
    Rect,
    /// Non-expandability of the diagonal word set on BF_n^q.
    Words,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum GrayTarget {
    Cbbf,
    Reflected,
    Diagonal,
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
pub enum MethodArg {
    #[default]
    Recursive,
    Brute,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Jsonl,
    Text,
}

/// Options shared by every subcommand.
#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    /// Alphabet size, 2..=10.
    #[arg(long)]
    pub q: Option<u8>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, value_enum, default_value_t)]
    pub method: MethodArg,
    /// Comma-separated diagonal words replacing S_n^q.
    #[arg(long)]
    pub diagonal: Option<String>,
    /// Read the matrix set to verify from a JSONL file.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// Maximum number of candidates any enumeration may visit.
    #[arg(long, default_value_t = Budget::DEFAULT.cap())]
    pub budget: u64,
    /// Emit only the verdict.
    #[arg(long)]
    pub check: bool,
    /// With `verify nonexpandable`, list every expanding matrix, not just the first.
    #[arg(long)]
    pub all_witnesses: bool,
}

impl RunConfig {
    fn n(&self) -> Result<usize> {
        self.n.ok_or_else(|| Error::invalid("--n is required"))
    }

    fn q(&self) -> Result<u8> {
        let q = self.q.ok_or_else(|| Error::invalid("--q is required"))?;
        crate::check_q(q)?;
        Ok(q)
    }

    fn budget(&self) -> Result<Budget> {
        Budget::new(self.budget)
    }

    fn method(&self) -> Method {
        match self.method {
            MethodArg::Recursive => Method::Recursive,
            MethodArg::Brute => Method::Brute,
        }
    }

    fn diagonal_words(&self, n: usize, q: u8) -> Result<Option<WordCode>> {
        let Some(list) = &self.diagonal else {
            return Ok(None);
        };
        let words = list
            .split(',')
            .filter(|s| !s.is_empty())
            .map(|s| Word::parse(s.trim(), q))
            .collect::<Result<Vec<_>>>()?;
        WordCode::new(n, q, words).map(Some)
    }

    /// The matrix code selected by `--n --q [--k | --diagonal]`.
    fn code(&self) -> Result<MatrixCode> {
        let (n, q, budget) = (self.n()?, self.q()?, self.budget()?);
        if let Some(diag) = self.diagonal_words(n, q)? {
            let code = MatrixCode::from_diagonal(diag, None)?;
            budget.check(code.len())?;
            return Ok(code);
        }
        match self.k {
            Some(k) => build_cbbf_with_k(n, q, k, budget),
            None => build_cbbf(n, q, budget),
        }
    }
}

fn code_header(kind: &str, code: &MatrixCode) -> Header {
    let mut h = Header::new(kind, code.n(), code.q(), code.len() as u64);
    h.k = code.k();
    h.diagonal = Some(code.diagonal_code().iter().map(Word::to_string).collect());
    h
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::NoGrayOrder { .. } => EXIT_FALSE,
        Error::InvalidInput(_) | Error::Parse(_) | Error::Io { .. } => EXIT_USAGE,
    }
}

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out` (unless `--out` is given) and diagnostics to
/// `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(&cli.command, out) {
        Ok(code) => code,
        // downstream reader went away (`| head`); nothing left to report
        Err(Error::Io {
            kind: std::io::ErrorKind::BrokenPipe,
            ..
        }) => EXIT_PASS,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn config(cmd: &Command) -> &RunConfig {
    match cmd {
        Command::Check { cfg, .. }
        | Command::Count { cfg, .. }
        | Command::Generate { cfg }
        | Command::Build { cfg, .. }
        | Command::Verify { cfg, .. }
        | Command::Gray { cfg, .. } => cfg,
    }
}

fn dispatch(cmd: &Command, stdout: &mut dyn Write) -> Result<i32> {
    let cfg = config(cmd);
    let mut file;
    let out: &mut dyn Write = match &cfg.out {
        Some(path) => {
            file = BufWriter::new(File::create(path)?);
            &mut file
        }
        None => stdout,
    };
    let code = match cmd {
        Command::Check { target, value, cfg } => cmd_check(*target, value, cfg, out)?,
        Command::Count { target, cfg } => cmd_count(*target, cfg, out)?,
        Command::Generate { cfg } => cmd_generate(cfg, out)?,
        Command::Build { target, cfg } => cmd_build(*target, cfg, out)?,
        Command::Verify { target, cfg } => cmd_verify(*target, cfg, out)?,
        Command::Gray { target, cfg } => cmd_gray(*target, cfg, out)?,
    };
    out.flush()?;
    Ok(code)
}

fn infer_q(input: &str, given: Option<u8>) -> Result<u8> {
    match given {
        Some(q) => Ok(q),
        None => {
            let max = input
                .chars()
                .filter_map(|c| c.to_digit(10))
                .max()
                .unwrap_or(0) as u8;
            Ok((max + 1).max(2))
        }
    }
}

fn emit(out: &mut dyn Write, format: Format, json: serde_json::Value, text: String) -> Result<()> {
    match format {
        Format::Jsonl => writeln!(out, "{json}")?,
        Format::Text => writeln!(out, "{text}")?,
    }
    Ok(())
}

fn cmd_check(
    target: CheckTarget,
    input: &str,
    cfg: &RunConfig,
    out: &mut dyn Write,
) -> Result<i32> {
    let q = infer_q(input, cfg.q)?;
    let (free, dims, kind) = match target {
        CheckTarget::Word => {
            let w = Word::parse(input, q)?;
            (is_bifix_free(&w)?, bifix_lengths(&w)?, "word")
        }
        CheckTarget::Matrix => {
            let m = SquareMatrix::parse(input, q)?;
            (is_bibifix_free(&m), bibifix_dims(&m), "matrix")
        }
    };
    let label = if kind == "word" {
        "bifix-free"
    } else {
        "bibifix-free"
    };
    let text = format!(
        "{kind} {input}: {}{label}; {} {dims:?}",
        if free { "" } else { "not " },
        if kind == "word" {
            "bifix lengths"
        } else {
            "bibifix dimensions"
        },
    );
    let json = json!({ "kind": format!("check-{kind}"), "input": input, "q": q, "free": free, "dims": dims });
    emit(out, cfg.format, json, text)?;
    Ok(if free { EXIT_PASS } else { EXIT_FALSE })
}

fn cmd_count(target: CountTarget, cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let (n, q) = (cfg.n()?, cfg.q()?);
    let value = match target {
        CountTarget::Bf => count_bf(n, q)?,
        CountTarget::Bbf => count_bbf(n, q)?,
    };
    writeln!(out, "{value}")?;
    Ok(EXIT_PASS)
}

fn cmd_generate(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let (n, q, budget) = (cfg.n()?, cfg.q()?, cfg.budget()?);
    let set = generate_bbf_with(n, q, cfg.method(), budget)?;
    if cfg.check {
        let expected = count_bbf(n, q)?;
        let agree = expected == set.len().into();
        let json = json!({ "kind": "bbf-check", "n": n, "q": q, "count": set.len(),
                           "recurrence": expected.to_string(), "holds": agree });
        let text = format!(
            "generated {} matrices, recurrence gives {expected}: {}",
            set.len(),
            if agree { "agree" } else { "DISAGREE" }
        );
        emit(out, cfg.format, json, text)?;
        return Ok(if agree { EXIT_PASS } else { EXIT_FALSE });
    }
    match cfg.format {
        Format::Jsonl => jsonl::write_matrix_set(out, "bbf", &set)?,
        Format::Text => {
            writeln!(out, "# bbf n={n} q={q} count={}", set.len())?;
            for m in &set {
                writeln!(out, "{m}")?;
            }
        }
    }
    Ok(EXIT_PASS)
}

fn write_words(
    out: &mut dyn Write,
    format: Format,
    header: &Header,
    code: &WordCode,
) -> Result<()> {
    match format {
        Format::Jsonl => jsonl::write_word_code(out, header, code),
        Format::Text => {
            writeln!(
                out,
                "# {} n={} q={} count={}",
                header.kind, header.n, header.q, header.count
            )?;
            for w in code {
                writeln!(out, "{w}")?;
            }
            Ok(())
        }
    }
}

fn cmd_build(target: BuildTarget, cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    match target {
        BuildTarget::Bf => {
            let (n, q) = (cfg.n()?, cfg.q()?);
            let code = enumerate_bf(n, q, cfg.budget()?)?;
            let header = Header::new("bf", n, q, code.len() as u64);
            write_words(out, cfg.format, &header, &code)?;
        }
        BuildTarget::S => {
            let (n, q, budget) = (cfg.n()?, cfg.q()?, cfg.budget()?);
            let (k, code) = match cfg.k {
                Some(k) => (k, build_s(n, q, k, budget)?),
                None => best_s(n, q, budget)?,
            };
            let mut header = Header::new("s", n, q, code.len() as u64);
            header.k = Some(k);
            write_words(out, cfg.format, &header, &code)?;
        }
        BuildTarget::Cbbf => {
            let code = cfg.code()?;
            let set = code.members(cfg.budget()?)?;
            match cfg.format {
                Format::Jsonl => {
                    jsonl::write_matrices(out, &code_header("cbbf", &code), set.iter())?
                }
                Format::Text => {
                    writeln!(
                        out,
                        "# cbbf n={} q={} count={}",
                        code.n(),
                        code.q(),
                        set.len()
                    )?;
                    for m in &set {
                        writeln!(out, "{m}")?;
                    }
                }
            }
        }
        BuildTarget::Rect => {
            let (n, q) = (cfg.n()?, cfg.q()?);
            let m = cfg.m.ok_or_else(|| Error::invalid("--m is required"))?;
            let items = build_cbbf_rect(n, m, q, cfg.budget()?)?;
            let mut header = Header::new("cbbf-rect", n, q, items.len() as u64);
            header.m = Some(m);
            header.diagonal = Some(
                default_diagonal(n, q, cfg.budget()?)?
                    .1
                    .iter()
                    .map(Word::to_string)
                    .collect(),
            );
            match cfg.format {
                Format::Jsonl => jsonl::write_rect_set(out, &header, &items)?,
                Format::Text => {
                    writeln!(out, "# cbbf-rect n={n} m={m} q={q} count={}", items.len())?;
                    for c in &items {
                        writeln!(out, "{c}")?;
                    }
                }
            }
        }
    }
    Ok(EXIT_PASS)
}

fn report<W: Clone>(
    out: &mut dyn Write,
    cfg: &RunConfig,
    kind: &str,
    size: u64,
    verdict: Verdict<W>,
    witness: impl FnOnce(W) -> (Witness, String),
) -> Result<i32> {
    match verdict {
        Verdict::Holds => {
            let json = json!({ "kind": kind, "holds": true, "members": size });
            emit(
                out,
                cfg.format,
                json,
                format!("{kind}: holds ({size} members)"),
            )?;
            Ok(EXIT_PASS)
        }
        Verdict::Refuted(w) => {
            let (record, text) = witness(w);
            let json = json!({ "kind": kind, "holds": false, "members": size });
            match cfg.format {
                Format::Jsonl => {
                    writeln!(out, "{json}")?;
                    jsonl::write_witness(out, &record)?;
                }
                Format::Text => writeln!(out, "{kind}: FAILS ({size} members)\n{text}")?,
            }
            Ok(EXIT_FALSE)
        }
    }
}

fn load_or_build(cfg: &RunConfig) -> Result<(Vec<SquareMatrix>, Option<MatrixCode>)> {
    match &cfg.input {
        Some(path) => {
            let (_, set) = jsonl::read_matrix_set(BufReader::new(File::open(path)?))?;
            Ok((set.into_vec(), None))
        }
        None => {
            let code = cfg.code()?;
            cfg.budget()?.check(code.len())?;
            Ok((code.iter().collect(), Some(code)))
        }
    }
}

fn cmd_verify(target: VerifyTarget, cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let budget = cfg.budget()?;
    match target {
        VerifyTarget::Cross => {
            let (members, _) = load_or_build(cfg)?;
            let verdict = verify_cross_set(&members);
            report(
                out,
                cfg,
                "verify-cross",
                members.len() as u64,
                verdict,
                |(a, b)| {
                    (
                        Witness::conflict(&a.row_strings(), &b.row_strings()),
                        format!("cross-conflict-pair {a} {b}"),
                    )
                },
            )
        }
        VerifyTarget::Nonexpandable if cfg.all_witnesses => {
            let (members, _) = load_or_build(cfg)?;
            let first = members
                .first()
                .ok_or_else(|| Error::invalid("empty input set"))?;
            let set = crate::MatrixSet::new(first.n(), first.q(), members.iter().copied())?;
            let witnesses = expanding_witnesses(&set, budget)?;
            let holds = witnesses.is_empty();
            let json = json!({ "kind": "verify-nonexpandable", "holds": holds,
                               "members": members.len(), "witnesses": witnesses.len() });
            match cfg.format {
                Format::Jsonl => {
                    writeln!(out, "{json}")?;
                    for w in &witnesses {
                        jsonl::write_witness(out, &Witness::expanding(w))?;
                    }
                }
                Format::Text => {
                    writeln!(
                        out,
                        "verify-nonexpandable: {} expanding witnesses",
                        witnesses.len()
                    )?;
                    for w in &witnesses {
                        writeln!(out, "expanding-witness {w}")?;
                    }
                }
            }
            Ok(if holds { EXIT_PASS } else { EXIT_FALSE })
        }
        VerifyTarget::Nonexpandable => {
            let (members, code) = load_or_build(cfg)?;
            let verdict = match code {
                Some(code) => verify_nonexpandable(&code, budget)?,
                None => {
                    let first = members
                        .first()
                        .ok_or_else(|| Error::invalid("empty input set"))?;
                    let set = crate::MatrixSet::new(first.n(), first.q(), members.iter().copied())?;
                    verify_nonexpandable_set(&set, budget)?
                }
            };
            report(
                out,
                cfg,
                "verify-nonexpandable",
                members.len() as u64,
                verdict,
                |m| (Witness::expanding(&m), format!("expanding-witness {m}")),
            )
        }
        VerifyTarget::Rect => {
            let (n, q) = (cfg.n()?, cfg.q()?);
            let m = cfg.m.ok_or_else(|| Error::invalid("--m is required"))?;
            let items = build_cbbf_rect(n, m, q, budget)?;
            let verdict = verify_cross_set(&items);
            report(
                out,
                cfg,
                "verify-rect",
                items.len() as u64,
                verdict,
                |(a, b)| {
                    (
                        Witness::conflict(&a.row_strings(), &b.row_strings()),
                        format!("cross-conflict-pair {a} {b}"),
                    )
                },
            )
        }
        VerifyTarget::Words => {
            let (n, q) = (cfg.n()?, cfg.q()?);
            let code = match cfg.diagonal_words(n, q)? {
                Some(c) => c,
                None => match cfg.k {
                    Some(k) => build_s(n, q, k, budget)?,
                    None => default_diagonal(n, q, budget)?.1,
                },
            };
            let verdict = is_nonexpandable_word_set(&code, budget)?;
            match verdict {
                Verdict::Holds => {
                    let json =
                        json!({ "kind": "verify-words", "holds": true, "members": code.len() });
                    emit(
                        out,
                        cfg.format,
                        json,
                        format!("verify-words: holds ({} words)", code.len()),
                    )?;
                    Ok(EXIT_PASS)
                }
                Verdict::Refuted(w) => {
                    let json = json!({ "kind": "verify-words", "holds": false, "members": code.len(),
                                       "reason": "expanding-witness", "word": w.to_string() });
                    emit(
                        out,
                        cfg.format,
                        json,
                        format!("verify-words: FAILS, expanding-witness {w}"),
                    )?;
                    Ok(EXIT_FALSE)
                }
            }
        }
    }
}

fn gray_verdict(
    out: &mut dyn Write,
    cfg: &RunConfig,
    n: usize,
    q: u8,
    expected: u128,
    check: crate::GrayCheck,
) -> Result<i32> {
    let complete = check.ok() && check.items as u128 == expected;
    let json = json!({ "kind": "gray-check", "n": n, "q": q, "items": check.items,
                       "expected": expected as u64, "holds": complete, "offending": check.offending });
    let text = match check.offending {
        None if complete => format!("gray: holds ({} items)", check.items),
        None => format!("gray: FAILS, {} items but {expected} expected", check.items),
        Some(i) => format!("gray: FAILS at index {i}"),
    };
    emit(out, cfg.format, json, text)?;
    Ok(if complete { EXIT_PASS } else { EXIT_FALSE })
}

fn cmd_gray(target: GrayTarget, cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let budget = cfg.budget()?;
    match target {
        GrayTarget::Cbbf => {
            let code = cfg.code()?;
            let listing = code_gray(&code, budget)?;
            let expected = listing.expected_len();
            if cfg.check {
                return gray_verdict(out, cfg, code.n(), code.q(), expected, verify_gray(listing));
            }
            let mut header = Header::new("cbbf-gray", code.n(), code.q(), expected as u64);
            header.k = code.k();
            header.diagonal = Some(
                listing
                    .diagonal_order()
                    .iter()
                    .map(Word::to_string)
                    .collect(),
            );
            match cfg.format {
                Format::Jsonl => {
                    jsonl::write_matrix_listing(out, &header, listing)?;
                }
                Format::Text => {
                    writeln!(
                        out,
                        "# cbbf-gray n={} q={} count={expected}",
                        code.n(),
                        code.q()
                    )?;
                    for m in listing {
                        writeln!(out, "{m}")?;
                    }
                }
            }
        }
        GrayTarget::Reflected => {
            let (n, q) = (cfg.n()?, cfg.q()?);
            let listing = reflected_gray(n, q, budget)?;
            let expected = listing.len_total();
            if cfg.check {
                return gray_verdict(out, cfg, n, q, expected, verify_gray(listing));
            }
            let header = Header::new("reflected-gray", n, q, expected as u64);
            write_listing(out, cfg.format, &header, listing)?;
        }
        GrayTarget::Diagonal => {
            let (n, q) = (cfg.n()?, cfg.q()?);
            let code = match cfg.diagonal_words(n, q)? {
                Some(c) => c,
                None => match cfg.k {
                    Some(k) => build_s(n, q, k, budget)?,
                    None => default_diagonal(n, q, budget)?.1,
                },
            };
            let order = diagonal_gray(&code, budget)?;
            if cfg.check {
                return gray_verdict(out, cfg, n, q, code.len() as u128, verify_gray(order));
            }
            let header = Header::new("diagonal-gray", n, q, order.len() as u64);
            write_listing(out, cfg.format, &header, order)?;
        }
    }
    Ok(EXIT_PASS)
}

fn write_listing(
    out: &mut dyn Write,
    format: Format,
    header: &Header,
    items: impl IntoIterator<Item = Word>,
) -> Result<()> {
    match format {
        Format::Jsonl => {
            jsonl::write_word_listing(out, header, items)?;
        }
        Format::Text => {
            writeln!(
                out,
                "# {} n={} q={} count={}",
                header.kind, header.n, header.q, header.count
            )?;
            for w in items {
                writeln!(out, "{w}")?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("bibifix").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn check_word_and_matrix() {
        let (code, out, _) = run_capture(&["check", "word", "100100100", "--format", "text"]);
        assert_eq!(code, 1);
        assert!(out.contains("not bifix-free"), "{out}");
        assert!(out.contains("[3, 6]"), "{out}");

        assert_eq!(run_capture(&["check", "word", "0"]).0, 0);
        assert_eq!(run_capture(&["check", "matrix", "10/00"]).0, 0);
        assert_eq!(run_capture(&["check", "matrix", "10/0"]).0, 2);
        assert_eq!(run_capture(&["check", "word", "1x"]).0, 2);
    }

    #[test]
    fn counts() {
        assert_eq!(
            run_capture(&["count", "bbf", "--n", "4", "--q", "2"]).1,
            "30720\n"
        );
        assert_eq!(
            run_capture(&["count", "bf", "--n", "9", "--q", "2"]).1,
            "148\n"
        );
        assert_eq!(
            run_capture(&["count", "bbf", "--n", "1", "--q", "3"]).1,
            "3\n"
        );
        assert_eq!(run_capture(&["count", "bbf", "--n", "1"]).0, 2);
        assert_eq!(run_capture(&["count", "bbf", "--n", "1", "--q", "11"]).0, 2);
    }

    #[test]
    fn budget_exit_code() {
        let (code, _, err) = run_capture(&[
            "generate", "--n", "4", "--q", "2", "--method", "brute", "--budget", "100",
        ]);
        assert_eq!(code, 3, "{err}");
        assert_eq!(
            run_capture(&["count", "bf", "--n", "3", "--q", "2", "--budget", "0"]).0,
            0
        );
        assert_eq!(
            run_capture(&["generate", "--n", "2", "--q", "2", "--budget", "0"]).0,
            2
        );
    }

    #[test]
    fn clap_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn unknown_subcommand_is_usage_error() {
        assert_eq!(run_capture(&["frobnicate"]).0, 2);
        assert_eq!(run_capture(&["--help"]).0, 0);
    }
}
