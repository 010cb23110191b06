//! Deciding validity and satisfiability, three ways.
//!
//! The exhaustive oracle enumerates every valuation frame the formula can
//! see. The level-wise sound procedure substitutes one level's assignment
//! at a time and recurses on what remains — same verdicts, far fewer
//! frames on deep chains. Both are capped by a bit budget so nothing
//! enumerates forever.
//!
//! Run with: cargo run -p glc --example decide_validity

use glc::{
    brute_valid_counted, frame_space, parse_infix, satisfiable, valid_sound_counted,
    SemanticsError, DEFAULT_BUDGET_BITS,
};

fn main() {
    let tour = [
        "a | a'",                                  // a complement pair covers all cases
        "hat > yellow",                            // contingent
        "bot > a",                                 // nothing can be attributed to nothing
        "~((hat & shirt) > yellow) | ((hat > yellow) & (shirt > yellow))", // pointwise split
        "a | a' | (b > c)",                        // valid with an irrelevant chain
    ];

    println!(
        "{:66} {:>6} {:>8} {:>8}",
        "formula", "valid", "oracle", "sound"
    );
    for source in tour {
        let f = parse_infix(source).unwrap();
        let oracle = brute_valid_counted(&f, DEFAULT_BUDGET_BITS).unwrap();
        let sound = valid_sound_counted(&f, DEFAULT_BUDGET_BITS).unwrap();
        assert_eq!(oracle.result, sound.result, "the two routes agree");
        println!(
            "{:66} {:>6} {:>8} {:>8}",
            source,
            oracle.result,
            format!("{}f", oracle.frames_checked),
            format!("{}f", sound.stats.frames_checked),
        );
    }

    // Satisfiability is validity's dual: F is satisfiable exactly when
    // ~F is not valid.
    println!();
    for source in ["a & a'", "hat > yellow'", "bot > bot"] {
        let f = parse_infix(source).unwrap();
        println!("satisfiable({source}) = {}", satisfiable(&f).unwrap());
    }

    // The frame space tells you the cost before you pay it: pairs × levels
    // bits, one frame per bit pattern.
    println!();
    let deep = parse_infix("a > b > c > d > e").unwrap();
    let space = frame_space(&deep);
    println!(
        "a > b > c > d > e needs {} bits ({} frames)",
        space.bits(),
        space.frame_count()
    );

    // Budgets turn runaway searches into errors instead of hangs.
    match brute_valid_counted(&deep, 8) {
        Err(SemanticsError::BudgetExceeded {
            bits_needed,
            budget_bits,
        }) => println!("with an 8-bit budget: refused ({bits_needed} bits needed, {budget_bits} allowed)"),
        other => panic!("expected a budget refusal, got {other:?}"),
    }
}
