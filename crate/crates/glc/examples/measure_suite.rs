//! The inequality lab: size measures across rewrites.
//!
//! Every rewrite rule (and a few landmark identities) is packaged as a
//! template pair. The lab instantiates each pair's placeholders with
//! seeded random formulas, computes the recursive size measure of both
//! sides at several parameter entries, and checks the expected inequality
//! or equality. The measure weighs a formula by replication depth `d`,
//! level `l`, and whether the canonical entry is taken, so a rewrite that
//! looks bigger syntactically can still shrink measure-wise.
//!
//! Run with: cargo run -p glc --example measure_suite

use std::collections::BTreeMap;

use glc::{
    builtin_pairs, instantiation_for, pair_sizes, parse_infix, render_counters, render_size,
    run_suite, Calculus, GRID,
};

fn main() {
    // The worked single-pair entries: sizes of a negated literal and its
    // reduct at the replication entry, and a counter line.
    let base = builtin_pairs(Calculus::Base);
    let first = base.iter().find(|p| p.id == 1).unwrap();
    let empty = BTreeMap::new();
    let (left, right) = pair_sizes(first, &empty, 1, 1, false);
    println!(
        "pair {:3} at (d=1, l=1): {} vs {}",
        first.id,
        render_size(&left),
        render_size(&right)
    );
    let f = parse_infix("~(a & b)").unwrap();
    println!("counters of ~(a & b): {}", render_counters(&f));

    // One pair in detail across the whole grid, with a seeded instantiation.
    println!();
    let chain_pair = base.iter().find(|p| p.id == 9).unwrap();
    let inst = instantiation_for(chain_pair, 42);
    println!("pair {} instantiated with seed 42:", chain_pair.id);
    for (d, l) in GRID {
        for flag in [false, true] {
            let (lhs, rhs) = pair_sizes(chain_pair, &inst, d, l, flag);
            println!(
                "  d={d} l={l} canonical={flag:5}  {} vs {}",
                render_size(&lhs),
                render_size(&rhs)
            );
        }
    }

    // The full sweep: both calculi, every pair, several seeds per pair,
    // every grid entry. all_pass() is what the acceptance gate pins.
    println!();
    for calculus in [Calculus::Base, Calculus::Variant] {
        let report = run_suite(calculus, 5);
        let failures = report.failures();
        println!(
            "{:7}: {} records, {} failures",
            calculus.as_str(),
            report.records.len(),
            failures.len()
        );
        assert!(report.all_pass());
    }
}
