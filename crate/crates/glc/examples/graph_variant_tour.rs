//! The graph-chain variant: bundled objects as first-class citizens.
//!
//! The variant calculus keeps conjunctive heads like `(hat & brooch)`
//! intact instead of splitting them pointwise, and fans disjunctive heads
//! out over every non-empty subset. Valuations assign bits to (context,
//! pair) query points, where a context is the compressed graph term of the
//! chain prefix — so "green, given the hat-and-brooch bundle" is a
//! different bit from "green, given hat" and "green, given brooch".
//!
//! Run with: cargo run -p glc --example graph_variant_tour

use glc::{
    parse_infix, print_infix, query_points_json, recursive_reduce2, render_context,
    variant_brute_valid, variant_normalize_traced, variant_value_equal, variant_query_points,
    Strategy, DEFAULT_VARIANT_BUDGET_BITS,
};

fn main() {
    // A disjunctive head fans out over subsets: the two singletons, then
    // the bundle of both.
    let fan = parse_infix("(hat | brooch) > green").unwrap();
    let (reduct, steps) = variant_normalize_traced(&fan, &Strategy::LeftmostInnermost).unwrap();
    println!("{}", print_infix(&fan));
    for s in &steps {
        println!(
            "  {:8} {}  ==>  {}",
            s.rule.name(),
            print_infix(&s.before),
            print_infix(&s.after)
        );
    }
    println!("  reduct: {}", print_infix(&reduct));

    // Complementing a bundled chain keeps the bundle in the residual chain.
    println!();
    let bundled = parse_infix("(hat & brooch) > green").unwrap();
    let complement = recursive_reduce2(&bundled).unwrap();
    println!(
        "not({}) expands to {}",
        print_infix(&bundled),
        print_infix(&complement)
    );

    // The query points of the bundled chain: two root-context pairs plus
    // one pair behind the bundle context.
    println!();
    println!("query points of {}:", print_infix(&bundled));
    let points = variant_query_points(&bundled).unwrap();
    for (context, pair) in &points {
        println!("  ({}, {pair})", render_context(context));
    }
    println!("as JSON: {}", query_points_json(&points));

    // The calculi disagree exactly where bundles matter: pointwise
    // attribution no longer implies the bundled chain.
    println!();
    let pointwise = parse_infix("(hat > green) & (brooch > green)").unwrap();
    let same = variant_value_equal(&pointwise, &bundled, DEFAULT_VARIANT_BUDGET_BITS).unwrap();
    println!(
        "variant: pointwise and bundled interchangeable? {same} (a frame can \
         grant green to each singleton and refuse it to the bundle)"
    );

    // But subset fan-out is sound: a reduct never changes the value.
    let kept = variant_value_equal(&fan, &reduct, DEFAULT_VARIANT_BUDGET_BITS).unwrap();
    println!("variant: fan-out reduct keeps its source's value? {kept}");

    // And complement pairs still cover all cases in the variant semantics.
    let tauto = parse_infix("a | a'").unwrap();
    println!(
        "variant oracle on a | a': {}",
        variant_brute_valid(&tauto).unwrap()
    );
}
