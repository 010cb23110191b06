//! Complementing whole formulas with the recursive expansion.
//!
//! For a unit chain, "not F" unfolds into a disjunction over the chain's
//! prefixes: the head fails, or the head holds but the next element fails
//! there, and so on down the levels. `recursive_reduce` builds exactly
//! that expansion; `negate_normalize` reaches the same place by rewriting
//! the negated formula. The two routes are checked against each other and
//! against the frame semantics.
//!
//! Run with: cargo run -p glc --example negate_and_reduce

use glc::{
    brute_sat, brute_valid, negate_normalize, normalize, parse_infix, print_infix,
    recursive_reduce, Formula, Strategy,
};

fn main() {
    for source in ["a", "a > b", "a > b > c", "(hat & shirt) > yellow"] {
        // The expansion is defined on rewritten formulas, so compound
        // objects (like the bundled head in the last sample) are flattened
        // into unit chains first.
        let f = normalize(&parse_infix(source).unwrap(), &Strategy::LeftmostInnermost);
        let complement = recursive_reduce(&f).unwrap();
        println!("not({source})");
        println!("  expands to {}", print_infix(&complement));

        // The rewrite route: normalize ~F directly.
        let via_rules = negate_normalize(&f);
        assert_eq!(via_rules, complement, "both routes build the same tree");

        // Semantic sanity: F | not(F) holds everywhere, F & not(F) nowhere.
        let covers = Formula::or(f.clone(), complement.clone());
        let clashes = Formula::and(f.clone(), complement.clone());
        assert_eq!(brute_valid(&covers).unwrap(), 1);
        assert_eq!(brute_sat(&clashes).unwrap(), 0);
        println!("  F | not(F) is valid, F & not(F) is unsatisfiable");
    }

    // Double complementation returns to the start, up to normalization.
    println!();
    let f = parse_infix("hat > yellow").unwrap();
    let once = recursive_reduce(&f).unwrap();
    let twice = recursive_reduce(&once).unwrap();
    let back = normalize(&twice, &Strategy::LeftmostInnermost);
    println!("not(not(hat > yellow)) normalizes to {}", print_infix(&back));
    assert_eq!(
        brute_valid(&Formula::or(
            Formula::and(f.clone(), back.clone()),
            Formula::and(Formula::not(f), Formula::not(back)),
        ))
        .unwrap(),
        1,
        "double complement keeps the value on every frame"
    );
}
