//! The command-line surface behind the `glc` binary.
//!
//! [`run`] drives the real process streams; [`run_captured`] runs the same
//! machinery against in-memory buffers so tests and examples can assert on
//! exit codes and output without spawning a process.
//!
//! Contract shared by every subcommand:
//! - stdout carries exactly one JSON object per input (batch mode reads one
//!   formula per line from stdin when `EXPR` is `-`),
//! - stderr carries usage text and diagnostics,
//! - the exit code is a function of the JSON result: 0 for an affirmative
//!   result or plain success, 1 for a negative result, 2 for usage or parse
//!   errors, 3 when a resource budget is exceeded,
//! - unknown flags are errors, not warnings,
//! - the environment variable `GLC_BUDGET_BITS` overrides the enumeration
//!   budgets of every decision procedure.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::time::Instant;

use glc_decider::{satisfiable_counted, valid_paper_strict_counted, valid_sound_counted};
use glc_formula_core::{f_len, generate, Formula, GenConfig};
use glc_measure_lab::{run_suite, Calculus};
use glc_parser_io::{
    parse_infix, parse_prefix, print_infix, DivergenceRecord, ErrorRecord, Mode, NormalizeRecord,
    ParseError, ResultRecord, TraceStepRecord,
};
use glc_reducer::{normalize_traced, ReductionStep, Strategy};
use glc_semantics::{
    brute_sat_counted, brute_valid_counted, SemanticsError, DEFAULT_BUDGET_BITS,
};
use glc_graph_variant::{
    variant_brute_sat_counted, variant_brute_valid_counted, variant_normalize_traced,
    VariantError, VariantStep, DEFAULT_VARIANT_BUDGET_BITS,
};

use crate::ast::ast_json;
use crate::selftest;

pub(crate) const EXIT_AFFIRMATIVE: i32 = 0;
pub(crate) const EXIT_NEGATIVE: i32 = 1;
pub(crate) const EXIT_USAGE: i32 = 2;
pub(crate) const EXIT_BUDGET: i32 = 3;

const USAGE: &str = "\
usage: glc <command> [flags]

  parse [--prefix] EXPR
      Print the abstract syntax tree as JSON, or a spanned error.
  normalize [--trace] [--strategy leftmost|random] [--seed N] EXPR
      Rewrite to unit-chain expansion; --trace includes every step.
  valid [--mode sound|paper-strict|oracle] [--report PATH] EXPR
      Decide validity. paper-strict is the verbatim level-wise procedure;
      with --report it writes strict-vs-oracle divergence records to PATH.
  sat [--mode sound|oracle] EXPR
      Decide satisfiability.
  equiv EXPR1 EXPR2
      Decide whether the two formulas imply each other.
  oracle [--sat] EXPR
      Brute-force enumeration over the formula's frame space.
  variant normalize|valid|sat [flags] EXPR
      The graph-chain calculus: rewrite to unit-graph expansion, or decide
      via the variant oracle. Accepts the normalize flags.
  measure suite --calculus base|variant [--seeds N] [--report PATH]
      Run the size-measure inequality suite; --report writes one JSON
      record per checked entry.
  gen --seed N --size K --pool P [--no-topbot] [--count C]
      Emit seeded formulas, one JSON object per line.
  selftest [--timing]
      Run the embedded golden vectors; --timing adds a frame-count
      scaling table.

Pass `-` as EXPR to read one formula per line from standard input.
Exit codes: 0 affirmative/success, 1 negative, 2 usage or parse error,
3 resource budget exceeded. GLC_BUDGET_BITS overrides decision budgets.";

/// Which rewrite-order flag was selected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum StrategyChoice {
    Leftmost,
    Random(u64),
}

impl StrategyChoice {
    fn to_strategy(&self) -> Strategy {
        match self {
            StrategyChoice::Leftmost => Strategy::LeftmostInnermost,
            StrategyChoice::Random(seed) => Strategy::SeededRandom(*seed),
        }
    }
}

/// A fully parsed command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Command {
    Parse {
        prefix: bool,
        expr: String,
    },
    Normalize {
        variant: bool,
        trace: bool,
        strategy: StrategyChoice,
        expr: String,
    },
    Valid {
        mode: Mode,
        report: Option<PathBuf>,
        expr: String,
    },
    Sat {
        mode: Mode,
        expr: String,
    },
    Equiv {
        left: String,
        right: String,
    },
    VariantValid {
        expr: String,
    },
    VariantSat {
        expr: String,
    },
    MeasureSuite {
        calculus: Calculus,
        seeds: u64,
        report: Option<PathBuf>,
    },
    Gen {
        seed: u64,
        size: u64,
        pool: u64,
        topbot: bool,
        count: u64,
    },
    Selftest {
        timing: bool,
    },
    Help,
}

/// Run against the live process streams. Returns the exit code; callers pass
/// it to `std::process::exit`.
pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let stdin = io::stdin();
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_io(
        &args,
        &mut stdin.lock(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    )
}

/// Run against in-memory buffers: `input` plays stdin, and the returned pair
/// of strings is (stdout, stderr). The exit code comes first.
pub fn run_captured<I, S>(args: I, input: &str) -> (i32, String, String)
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_io(&args, &mut input.as_bytes(), &mut out, &mut err);
    (
        code,
        String::from_utf8(out).expect("output is UTF-8"),
        String::from_utf8(err).expect("diagnostics are UTF-8"),
    )
}

fn run_io(
    args: &[String],
    input: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    match parse_args(args) {
        Ok(Command::Help) => {
            let _ = writeln!(out, "{USAGE}");
            EXIT_AFFIRMATIVE
        }
        Ok(cmd) => execute(&cmd, input, out, err),
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            let _ = writeln!(err, "{USAGE}");
            EXIT_USAGE
        }
    }
}

// ---------------------------------------------------------------------------
// Argument parsing
// ---------------------------------------------------------------------------

fn parse_args(args: &[String]) -> Result<Command, String> {
    let Some(command) = args.first() else {
        return Err("a command is required".to_string());
    };
    let rest = &args[1..];
    match command.as_str() {
        "help" | "--help" | "-h" => Ok(Command::Help),
        "parse" => parse_parse(rest),
        "normalize" => parse_normalize(rest, false),
        "valid" => parse_valid(rest),
        "sat" => parse_sat(rest),
        "equiv" => parse_equiv(rest),
        "oracle" => parse_oracle(rest),
        "variant" => parse_variant(rest),
        "measure" => parse_measure(rest),
        "gen" => parse_gen(rest),
        "selftest" => parse_selftest(rest),
        other => Err(format!("unknown command `{other}`")),
    }
}

/// Split `args` into flag occurrences and positionals. Flags listed in
/// `value_flags` consume the following argument as their value; flags listed
/// in `bool_flags` stand alone; anything else starting with `--` is an error.
fn split_flags(
    args: &[String],
    bool_flags: &[&str],
    value_flags: &[&str],
) -> Result<(BTreeMap<String, String>, Vec<String>, Vec<String>), String> {
    let mut values = BTreeMap::new();
    let mut switches = Vec::new();
    let mut positionals = Vec::new();
    let mut i = 0;
    while i < args.len() {
        let a = &args[i];
        if let Some(name) = a.strip_prefix("--") {
            if bool_flags.contains(&name) {
                switches.push(name.to_string());
            } else if value_flags.contains(&name) {
                let Some(v) = args.get(i + 1) else {
                    return Err(format!("flag --{name} needs a value"));
                };
                if values.insert(name.to_string(), v.clone()).is_some() {
                    return Err(format!("flag --{name} given twice"));
                }
                i += 1;
            } else {
                return Err(format!("unknown flag --{name}"));
            }
        } else {
            positionals.push(a.clone());
        }
        i += 1;
    }
    Ok((values, positionals, switches))
}

fn one_expr(positionals: Vec<String>, command: &str) -> Result<String, String> {
    match positionals.len() {
        0 => Err(format!("{command} needs a formula argument")),
        1 => Ok(positionals.into_iter().next().expect("checked length")),
        n => Err(format!("{command} takes one formula argument, got {n}")),
    }
}

fn parse_count(name: &str, value: &str) -> Result<u64, String> {
    value
        .parse::<u64>()
        .map_err(|_| format!("flag --{name} needs an unsigned integer, got `{value}`"))
}

fn parse_parse(args: &[String]) -> Result<Command, String> {
    let (values, positionals, switches) = split_flags(args, &["prefix"], &[])?;
    debug_assert!(values.is_empty());
    Ok(Command::Parse {
        prefix: switches.iter().any(|s| s == "prefix"),
        expr: one_expr(positionals, "parse")?,
    })
}

fn parse_normalize(args: &[String], variant: bool) -> Result<Command, String> {
    let (values, positionals, switches) =
        split_flags(args, &["trace"], &["strategy", "seed"])?;
    let seed = values
        .get("seed")
        .map(|v| parse_count("seed", v))
        .transpose()?;
    let strategy = match values.get("strategy").map(String::as_str) {
        None => {
            if seed.is_some() {
                return Err("--seed only makes sense with --strategy random".to_string());
            }
            StrategyChoice::Leftmost
        }
        Some("leftmost") => {
            if seed.is_some() {
                return Err("--seed only makes sense with --strategy random".to_string());
            }
            StrategyChoice::Leftmost
        }
        Some("random") => StrategyChoice::Random(seed.unwrap_or(0)),
        Some(other) => {
            return Err(format!(
                "unknown strategy `{other}` (expected leftmost or random)"
            ))
        }
    };
    Ok(Command::Normalize {
        variant,
        trace: switches.iter().any(|s| s == "trace"),
        strategy,
        expr: one_expr(positionals, "normalize")?,
    })
}

fn parse_valid(args: &[String]) -> Result<Command, String> {
    let (values, positionals, _) = split_flags(args, &[], &["mode", "report"])?;
    let mode = match values.get("mode").map(String::as_str) {
        None | Some("sound") => Mode::Sound,
        Some("paper-strict") => Mode::PaperStrict,
        Some("oracle") => Mode::Oracle,
        Some(other) => {
            return Err(format!(
                "unknown mode `{other}` (expected sound, paper-strict, or oracle)"
            ))
        }
    };
    let report = values.get("report").map(PathBuf::from);
    if report.is_some() && mode != Mode::PaperStrict {
        return Err("--report needs --mode paper-strict".to_string());
    }
    Ok(Command::Valid {
        mode,
        report,
        expr: one_expr(positionals, "valid")?,
    })
}

fn parse_sat(args: &[String]) -> Result<Command, String> {
    let (values, positionals, _) = split_flags(args, &[], &["mode"])?;
    let mode = match values.get("mode").map(String::as_str) {
        None | Some("sound") => Mode::Sound,
        Some("oracle") => Mode::Oracle,
        Some(other) => {
            return Err(format!("unknown mode `{other}` (expected sound or oracle)"))
        }
    };
    Ok(Command::Sat {
        mode,
        expr: one_expr(positionals, "sat")?,
    })
}

fn parse_equiv(args: &[String]) -> Result<Command, String> {
    let (_, positionals, _) = split_flags(args, &[], &[])?;
    if positionals.len() != 2 {
        return Err(format!(
            "equiv takes exactly two formula arguments, got {}",
            positionals.len()
        ));
    }
    let mut it = positionals.into_iter();
    Ok(Command::Equiv {
        left: it.next().expect("checked length"),
        right: it.next().expect("checked length"),
    })
}

fn parse_oracle(args: &[String]) -> Result<Command, String> {
    let (_, positionals, switches) = split_flags(args, &["sat"], &[])?;
    let expr = one_expr(positionals, "oracle")?;
    if switches.iter().any(|s| s == "sat") {
        Ok(Command::Sat {
            mode: Mode::Oracle,
            expr,
        })
    } else {
        Ok(Command::Valid {
            mode: Mode::Oracle,
            report: None,
            expr,
        })
    }
}

fn parse_variant(args: &[String]) -> Result<Command, String> {
    let Some(sub) = args.first() else {
        return Err("variant needs a subcommand: normalize, valid, or sat".to_string());
    };
    let rest = &args[1..];
    match sub.as_str() {
        "normalize" => parse_normalize(rest, true),
        "valid" => {
            let (_, positionals, _) = split_flags(rest, &[], &[])?;
            Ok(Command::VariantValid {
                expr: one_expr(positionals, "variant valid")?,
            })
        }
        "sat" => {
            let (_, positionals, _) = split_flags(rest, &[], &[])?;
            Ok(Command::VariantSat {
                expr: one_expr(positionals, "variant sat")?,
            })
        }
        other => Err(format!(
            "unknown variant subcommand `{other}` (expected normalize, valid, or sat)"
        )),
    }
}

fn parse_measure(args: &[String]) -> Result<Command, String> {
    let Some(sub) = args.first() else {
        return Err("measure needs the `suite` subcommand".to_string());
    };
    if sub != "suite" {
        return Err(format!("unknown measure subcommand `{sub}` (expected suite)"));
    }
    let (values, positionals, _) = split_flags(&args[1..], &[], &["calculus", "seeds", "report"])?;
    if !positionals.is_empty() {
        return Err("measure suite takes no positional arguments".to_string());
    }
    let calculus = match values.get("calculus").map(String::as_str) {
        Some("base") => Calculus::Base,
        Some("variant") => Calculus::Variant,
        Some(other) => {
            return Err(format!(
                "unknown calculus `{other}` (expected base or variant)"
            ))
        }
        None => return Err("measure suite needs --calculus base|variant".to_string()),
    };
    let seeds = values
        .get("seeds")
        .map(|v| parse_count("seeds", v))
        .transpose()?
        .unwrap_or(100);
    Ok(Command::MeasureSuite {
        calculus,
        seeds,
        report: values.get("report").map(PathBuf::from),
    })
}

fn parse_gen(args: &[String]) -> Result<Command, String> {
    let (values, positionals, switches) =
        split_flags(args, &["no-topbot"], &["seed", "size", "pool", "count"])?;
    if !positionals.is_empty() {
        return Err("gen takes no positional arguments".to_string());
    }
    let require = |name: &str| -> Result<u64, String> {
        values
            .get(name)
            .ok_or_else(|| format!("gen needs --{name}"))
            .and_then(|v| parse_count(name, v))
    };
    let pool = require("pool")?;
    if !(1..=26).contains(&pool) {
        return Err(format!("--pool must be between 1 and 26, got {pool}"));
    }
    let size = require("size")?;
    if size == 0 {
        return Err("--size must be at least 1".to_string());
    }
    Ok(Command::Gen {
        seed: require("seed")?,
        size,
        pool,
        topbot: !switches.iter().any(|s| s == "no-topbot"),
        count: values
            .get("count")
            .map(|v| parse_count("count", v))
            .transpose()?
            .unwrap_or(1),
    })
}

fn parse_selftest(args: &[String]) -> Result<Command, String> {
    let (_, positionals, switches) = split_flags(args, &["timing"], &[])?;
    if !positionals.is_empty() {
        return Err("selftest takes no positional arguments".to_string());
    }
    Ok(Command::Selftest {
        timing: switches.iter().any(|s| s == "timing"),
    })
}

// ---------------------------------------------------------------------------
// Execution
// ---------------------------------------------------------------------------

fn execute(
    cmd: &Command,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    match cmd {
        Command::Help => unreachable!("handled in run_io"),
        Command::Parse { prefix, expr } => cmd_parse(*prefix, expr, input, out),
        Command::Normalize {
            variant,
            trace,
            strategy,
            expr,
        } => cmd_normalize(*variant, *trace, strategy, expr, input, out),
        Command::Valid { mode, report, expr } => cmd_valid(*mode, report.as_deref(), expr, input, out, err),
        Command::Sat { mode, expr } => cmd_sat(*mode, expr, input, out, err),
        Command::Equiv { left, right } => cmd_equiv(left, right, out, err),
        Command::VariantValid { expr } => cmd_variant_decide(false, expr, input, out, err),
        Command::VariantSat { expr } => cmd_variant_decide(true, expr, input, out, err),
        Command::MeasureSuite {
            calculus,
            seeds,
            report,
        } => cmd_measure_suite(*calculus, *seeds, report.as_deref(), out, err),
        Command::Gen {
            seed,
            size,
            pool,
            topbot,
            count,
        } => cmd_gen(*seed, *size, *pool, *topbot, *count, out),
        Command::Selftest { timing } => cmd_selftest(*timing, out, err),
    }
}

/// Run `handle` on the single expression, or once per non-blank stdin line
/// when the expression is `-`. The exit code is the worst per-input code.
fn with_inputs(
    expr: &str,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
    mut handle: impl FnMut(&str, &mut dyn Write) -> i32,
) -> i32 {
    if expr != "-" {
        return handle(expr, out);
    }
    let mut worst = EXIT_AFFIRMATIVE;
    let mut line = String::new();
    loop {
        line.clear();
        match input.read_line(&mut line) {
            Ok(0) => break,
            Ok(_) => {
                let text = line.trim();
                if text.is_empty() {
                    continue;
                }
                worst = worst.max(handle(text, out));
            }
            Err(e) => {
                let rec = ErrorRecord::plain(format!("cannot read standard input: {e}"));
                let _ = writeln!(out, "{}", rec.to_json_line());
                worst = worst.max(EXIT_USAGE);
                break;
            }
        }
    }
    worst
}

fn emit_parse_error(out: &mut dyn Write, e: &ParseError) -> i32 {
    let rec = ErrorRecord::spanned(e.message.clone(), e.span.start, e.span.end);
    let _ = writeln!(out, "{}", rec.to_json_line());
    EXIT_USAGE
}

/// Resolve the enumeration budget: the `GLC_BUDGET_BITS` environment
/// variable when set, the given default otherwise.
fn budget_bits(default: u32) -> Result<u32, String> {
    match std::env::var("GLC_BUDGET_BITS") {
        Ok(v) => v
            .parse::<u32>()
            .map_err(|_| format!("GLC_BUDGET_BITS must be an unsigned integer, got `{v}`")),
        Err(std::env::VarError::NotPresent) => Ok(default),
        Err(e) => Err(format!("GLC_BUDGET_BITS is not readable: {e}")),
    }
}

fn emit_semantics_error(out: &mut dyn Write, e: &SemanticsError) -> i32 {
    let rec = ErrorRecord::plain(e.to_string());
    let _ = writeln!(out, "{}", rec.to_json_line());
    match e {
        SemanticsError::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_USAGE,
    }
}

fn emit_variant_error(out: &mut dyn Write, e: &VariantError) -> i32 {
    let rec = ErrorRecord::plain(e.to_string());
    let _ = writeln!(out, "{}", rec.to_json_line());
    match e {
        VariantError::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_USAGE,
    }
}

fn result_exit(result: u8) -> i32 {
    if result == 1 {
        EXIT_AFFIRMATIVE
    } else {
        EXIT_NEGATIVE
    }
}

fn base_trace_records(steps: &[ReductionStep]) -> Vec<TraceStepRecord> {
    steps
        .iter()
        .map(|s| TraceStepRecord {
            rule: s.rule.name().to_string(),
            position: s.position.iter().map(|d| d.as_str().to_string()).collect(),
            before: print_infix(&s.before),
            after: print_infix(&s.after),
        })
        .collect()
}

fn variant_trace_records(steps: &[VariantStep]) -> Vec<TraceStepRecord> {
    steps
        .iter()
        .map(|s| TraceStepRecord {
            rule: s.rule.name().to_string(),
            position: s.position.iter().map(|d| d.as_str().to_string()).collect(),
            before: print_infix(&s.before),
            after: print_infix(&s.after),
        })
        .collect()
}

fn cmd_parse(prefix: bool, expr: &str, input: &mut dyn BufRead, out: &mut dyn Write) -> i32 {
    with_inputs(expr, input, out, |text, out| {
        let parsed = if prefix {
            parse_prefix(text)
        } else {
            parse_infix(text)
        };
        match parsed {
            Ok(f) => {
                let _ = writeln!(out, "{}", ast_json(&f));
                EXIT_AFFIRMATIVE
            }
            Err(e) => emit_parse_error(out, &e),
        }
    })
}

fn cmd_normalize(
    variant: bool,
    trace: bool,
    strategy: &StrategyChoice,
    expr: &str,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
) -> i32 {
    let strat = strategy.to_strategy();
    with_inputs(expr, input, out, |text, out| {
        let f = match parse_infix(text) {
            Ok(f) => f,
            Err(e) => return emit_parse_error(out, &e),
        };
        let (normal_form, steps, trace_records) = if variant {
            match variant_normalize_traced(&f, &strat) {
                Ok((nf, steps)) => {
                    let recs = trace.then(|| variant_trace_records(&steps));
                    (nf, steps.len() as u64, recs)
                }
                Err(e) => return emit_variant_error(out, &e),
            }
        } else {
            let (nf, steps) = normalize_traced(&f, &strat);
            let recs = trace.then(|| base_trace_records(&steps));
            (nf, steps.len() as u64, recs)
        };
        let rec = NormalizeRecord {
            formula: print_infix(&f),
            normal_form: print_infix(&normal_form),
            steps,
            trace: trace_records,
        };
        let _ = writeln!(out, "{}", rec.to_json_line());
        EXIT_AFFIRMATIVE
    })
}

/// Shared body of `valid`, `sat`, and `oracle`: parse, decide, emit one
/// result record, map the result bit to the exit code.
fn decide_one(
    text: &str,
    mode: Mode,
    sat_query: bool,
    budget: u32,
    out: &mut dyn Write,
    mut divergence: Option<&mut Vec<DivergenceRecord>>,
) -> i32 {
    let f = match parse_infix(text) {
        Ok(f) => f,
        Err(e) => return emit_parse_error(out, &e),
    };
    let started = Instant::now();
    let decided: Result<(u8, u64), SemanticsError> = match (mode, sat_query) {
        (Mode::Sound, false) => {
            valid_sound_counted(&f, budget).map(|d| (d.result, d.stats.frames_checked))
        }
        (Mode::Sound, true) => {
            satisfiable_counted(&f, budget).map(|d| (d.result, d.stats.frames_checked))
        }
        (Mode::PaperStrict, false) => {
            valid_paper_strict_counted(&f, budget).map(|d| (d.result, d.stats.frames_checked))
        }
        (Mode::Oracle, false) => {
            brute_valid_counted(&f, budget).map(|r| (r.result, r.frames_checked))
        }
        (Mode::Oracle, true) => brute_sat_counted(&f, budget).map(|r| (r.result, r.frames_checked)),
        (Mode::PaperStrict, true) | (Mode::VariantOracle, _) => {
            unreachable!("rejected by the argument parser")
        }
    };
    let (result, frames_checked) = match decided {
        Ok(pair) => pair,
        Err(e) => return emit_semantics_error(out, &e),
    };
    if let Some(records) = divergence.as_mut() {
        // Divergence reporting runs the exhaustive oracle alongside the
        // verbatim procedure and files a record when the two disagree.
        match brute_valid_counted(&f, budget) {
            Ok(oracle) if oracle.result != result => records.push(DivergenceRecord {
                formula: print_infix(&f),
                strict_result: result,
                oracle_result: oracle.result,
            }),
            Ok(_) => {}
            Err(e) => return emit_semantics_error(out, &e),
        }
    }
    let rec = ResultRecord {
        formula: print_infix(&f),
        mode,
        result,
        frames_checked,
        elapsed_ms: started.elapsed().as_millis() as u64,
        trace: None,
    };
    let _ = writeln!(out, "{}", rec.to_json_line());
    result_exit(result)
}

fn cmd_valid(
    mode: Mode,
    report: Option<&std::path::Path>,
    expr: &str,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let budget = match budget_bits(DEFAULT_BUDGET_BITS) {
        Ok(b) => b,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    let mut divergences: Vec<DivergenceRecord> = Vec::new();
    let code = with_inputs(expr, input, out, |text, out| {
        let collector = report.is_some().then_some(&mut divergences);
        decide_one(text, mode, false, budget, out, collector)
    });
    if let Some(path) = report {
        let mut file = match File::create(path) {
            Ok(f) => f,
            Err(e) => {
                let _ = writeln!(err, "error: cannot write report {}: {e}", path.display());
                return EXIT_USAGE.max(code);
            }
        };
        for rec in &divergences {
            let _ = writeln!(file, "{}", rec.to_json_line());
        }
    }
    code
}

fn cmd_sat(
    mode: Mode,
    expr: &str,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let budget = match budget_bits(DEFAULT_BUDGET_BITS) {
        Ok(b) => b,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    with_inputs(expr, input, out, |text, out| {
        decide_one(text, mode, true, budget, out, None)
    })
}

fn cmd_equiv(left: &str, right: &str, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let budget = match budget_bits(DEFAULT_BUDGET_BITS) {
        Ok(b) => b,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    let f1 = match parse_infix(left) {
        Ok(f) => f,
        Err(e) => return emit_parse_error(out, &e),
    };
    let f2 = match parse_infix(right) {
        Ok(f) => f,
        Err(e) => return emit_parse_error(out, &e),
    };
    // Mutual implication, spelled with the connectives at hand:
    // (¬F1 ∨ F2) ∧ (¬F2 ∨ F1) is valid exactly when the two formulas take
    // the same value on every frame.
    let mutual = Formula::and(
        Formula::or(Formula::not(f1.clone()), f2.clone()),
        Formula::or(Formula::not(f2), f1),
    );
    let started = Instant::now();
    match valid_sound_counted(&mutual, budget) {
        Ok(d) => {
            let rec = ResultRecord {
                formula: print_infix(&mutual),
                mode: Mode::Sound,
                result: d.result,
                frames_checked: d.stats.frames_checked,
                elapsed_ms: started.elapsed().as_millis() as u64,
                trace: None,
            };
            let _ = writeln!(out, "{}", rec.to_json_line());
            result_exit(d.result)
        }
        Err(e) => emit_semantics_error(out, &e),
    }
}

fn cmd_variant_decide(
    sat_query: bool,
    expr: &str,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let budget = match budget_bits(DEFAULT_VARIANT_BUDGET_BITS) {
        Ok(b) => b,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    with_inputs(expr, input, out, |text, out| {
        let f = match parse_infix(text) {
            Ok(f) => f,
            Err(e) => return emit_parse_error(out, &e),
        };
        let started = Instant::now();
        let run = if sat_query {
            variant_brute_sat_counted(&f, budget)
        } else {
            variant_brute_valid_counted(&f, budget)
        };
        match run {
            Ok(r) => {
                let rec = ResultRecord {
                    formula: print_infix(&f),
                    mode: Mode::VariantOracle,
                    result: r.result,
                    frames_checked: r.frames_checked,
                    elapsed_ms: started.elapsed().as_millis() as u64,
                    trace: None,
                };
                let _ = writeln!(out, "{}", rec.to_json_line());
                result_exit(r.result)
            }
            Err(e) => emit_variant_error(out, &e),
        }
    })
}

fn cmd_measure_suite(
    calculus: Calculus,
    seeds: u64,
    report: Option<&std::path::Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let report_run = run_suite(calculus, seeds);
    if let Some(path) = report {
        match File::create(path) {
            Ok(mut file) => {
                let _ = file.write_all(report_run.to_json_lines().as_bytes());
            }
            Err(e) => {
                let _ = writeln!(err, "error: cannot write report {}: {e}", path.display());
                return EXIT_USAGE;
            }
        }
    }
    let failures = report_run.failures();
    let summary = serde_json::json!({
        "calculus": calculus.as_str(),
        "seeds": seeds,
        "records": report_run.records.len(),
        "failures": failures.len(),
        "pass": failures.is_empty(),
    });
    let _ = writeln!(out, "{summary}");
    for failure in failures {
        let line = serde_json::to_string(failure).expect("records serialize");
        let _ = writeln!(err, "measure FAIL: {line}");
    }
    if report_run.all_pass() {
        EXIT_AFFIRMATIVE
    } else {
        EXIT_NEGATIVE
    }
}

fn cmd_gen(seed: u64, size: u64, pool: u64, topbot: bool, count: u64, out: &mut dyn Write) -> i32 {
    let cfg = GenConfig::new(size, pool as usize, topbot);
    for i in 0..count {
        let s = seed.wrapping_add(i);
        let f = generate(s, &cfg);
        let line = serde_json::json!({
            "seed": s,
            "formula": print_infix(&f),
            "f_len": f_len(&f),
        });
        let _ = writeln!(out, "{line}");
    }
    EXIT_AFFIRMATIVE
}

fn cmd_selftest(timing: bool, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut failed = 0usize;
    let vectors = selftest::vectors();
    let total = vectors.len();
    for (name, check) in vectors {
        if let Err(detail) = check() {
            failed += 1;
            let _ = writeln!(err, "selftest FAIL {name}: {detail}");
        }
    }
    let mut summary = serde_json::json!({
        "vectors": total,
        "failed": failed,
        "pass": failed == 0,
    });
    if timing {
        match selftest::timing_table() {
            Ok(rows) => {
                summary["timing"] = serde_json::Value::Array(rows);
            }
            Err(detail) => {
                failed += 1;
                summary["failed"] = serde_json::json!(failed);
                summary["pass"] = serde_json::json!(false);
                let _ = writeln!(err, "selftest FAIL timing_scaling: {detail}");
            }
        }
    }
    let _ = writeln!(out, "{summary}");
    if failed == 0 {
        EXIT_AFFIRMATIVE
    } else {
        EXIT_NEGATIVE
    }
}
