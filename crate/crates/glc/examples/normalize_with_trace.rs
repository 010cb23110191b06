//! Rewriting a formula to unit-chain expansion, step by step.
//!
//! The reduction calculus pushes negations inward and flattens compound
//! objects and attributes until only disjunctions/conjunctions of unit
//! chains remain. Any redex order reaches a normal form; different orders
//! may produce syntactically different — but always value-equal — results.
//!
//! Run with: cargo run -p glc --example normalize_with_trace

use glc::{
    is_unit_chain_expansion, normalize_traced, parse_infix, print_infix, redexes, value_equal,
    Strategy, DEFAULT_BUDGET_BITS,
};

fn main() {
    let source = "~((hat & brooch) > green)";
    let f = parse_infix(source).unwrap();

    // Enumerate the redexes of the starting formula: each is a position
    // (a path of left/right/child moves) plus the rule that fires there.
    println!("redexes of {source}:");
    for (position, rule) in redexes(&f) {
        let path: Vec<&str> = position.iter().map(|d| d.as_str()).collect();
        println!("  {:8} at [{}]", rule.name(), path.join(", "));
    }

    // The deterministic strategy always picks the leftmost-innermost redex.
    let (normal, steps) = normalize_traced(&f, &Strategy::LeftmostInnermost);
    println!();
    println!("leftmost-innermost walk ({} steps):", steps.len());
    for s in &steps {
        let path: Vec<&str> = s.position.iter().map(|d| d.as_str()).collect();
        println!(
            "  {:8} at [{:12}] {}  ==>  {}",
            s.rule.name(),
            path.join(","),
            print_infix(&s.before),
            print_infix(&s.after),
        );
    }
    println!("normal form: {}", print_infix(&normal));
    assert!(is_unit_chain_expansion(&normal));

    // A seeded random walk may take another route to another spelling...
    let (scrambled, _) = normalize_traced(&f, &Strategy::SeededRandom(7));
    println!();
    println!("seeded-random normal form: {}", print_infix(&scrambled));

    // ...but the value on every frame is the same.
    let same = value_equal(&normal, &scrambled, DEFAULT_BUDGET_BITS).unwrap();
    assert!(same);
    println!("both normal forms agree on every frame: {same}");
}
