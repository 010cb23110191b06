//! Driving the command line in-process: batch input, reports, exit codes.
//!
//! `run_captured` runs any command line against in-memory streams and
//! returns (exit code, stdout, stderr) — the same entry point the `glc`
//! binary wraps. This example pipes a batch of formulas through `valid -`,
//! inspects the one-JSON-object-per-line output, and collects a
//! divergence report from the verbatim decision mode.
//!
//! Run with: cargo run -p glc --example batch_pipeline

use glc::run_captured;
use serde_json::Value;

fn main() {
    // Batch mode: one formula per stdin line, one JSON record per line
    // out, and the exit code is the worst line's code.
    let batch = "a | a'\nbot > a\nhat > yellow'\n";
    let (code, out, _) = run_captured(["valid", "-"], batch);
    println!("valid - < batch  (exit {code})");
    for line in out.lines() {
        let rec: Value = serde_json::from_str(line).unwrap();
        println!(
            "  {:14} -> {} ({} frames)",
            rec["formula"].as_str().unwrap(),
            rec["result"],
            rec["frames_checked"]
        );
    }
    assert_eq!(code, 1, "the invalid lines dominate the exit code");

    // A parse failure in the batch turns into an error record and a usage
    // exit code, without aborting the rest of the batch.
    println!();
    let (code, out, _) = run_captured(["sat", "-"], "a & a'\noops &\nbot'\n");
    println!("sat - < batch-with-a-typo  (exit {code})");
    for line in out.lines() {
        println!("  {line}");
    }
    assert_eq!(code, 2);

    // The verbatim decision mode writes divergence records next to its
    // answers; the report file is created even when nothing diverges.
    println!();
    let report = std::env::temp_dir().join(format!("glc-batch-demo-{}", std::process::id()));
    let witness_batch = "a | a' | (b > c)\na | a'\nw | w' | (x > y > z)\n";
    let (code, _, _) = run_captured(
        [
            "valid",
            "--mode",
            "paper-strict",
            "--report",
            report.to_str().unwrap(),
            "-",
        ],
        witness_batch,
    );
    let body = std::fs::read_to_string(&report).unwrap();
    println!("paper-strict over three inputs (exit {code}); divergence report:");
    for line in body.lines() {
        println!("  {line}");
    }
    assert_eq!(body.lines().count(), 2, "two of the three inputs diverge");
    let _ = std::fs::remove_file(&report);

    // Everything the toolkit pins as a golden vector is replayable from
    // the command line, too.
    println!();
    let (code, out, _) = run_captured(["selftest"], "");
    println!("selftest: {out}");
    assert_eq!(code, 0);
}
