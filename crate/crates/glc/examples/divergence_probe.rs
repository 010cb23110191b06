//! Where the verbatim between-level rewrite goes wrong, and by how much.
//!
//! The toolkit ships two level-wise procedures. The verbatim one rewrites
//! the formula between levels exactly as originally listed: chains whose
//! head an assignment refutes are deleted, held heads become the constant.
//! That rewrite forgets which disjuncts the assignment itself already
//! settled, so on formulas mixing settled disjuncts with live chains it
//! can answer "invalid" where the exhaustive oracle says "valid". The
//! corrected procedure substitutes instead of rewriting and never
//! disagrees with the oracle.
//!
//! Run with: cargo run -p glc --example divergence_probe

use glc::{
    generate, parse_infix, print_infix, strict_vs_oracle, valid_paper_strict, valid_sound,
    Formula, GenConfig, DEFAULT_BUDGET_BITS,
};

fn main() {
    // The witness family: a settled complement pair next to a chain.
    let witness = parse_infix("a | a' | (b > c)").unwrap();
    println!("witness: {}", print_infix(&witness));
    println!("  verbatim says {}", valid_paper_strict(&witness).unwrap());
    println!("  corrected says {}", valid_sound(&witness).unwrap());
    match strict_vs_oracle(&witness, DEFAULT_BUDGET_BITS).unwrap() {
        Some((strict, oracle)) => {
            println!("  divergence confirmed: verbatim {strict}, oracle {oracle}");
        }
        None => unreachable!("this witness is the divergence poster child"),
    }

    // The same shape with any chain in the third slot diverges too.
    println!();
    println!("twenty analogues of the witness family:");
    let mut diverged = 0;
    for seed in 0..20u64 {
        let tail = generate(seed, &GenConfig::new(6, 3, false));
        // Keep the settled pair, splice a generated chain-bearing tail in.
        let probe = Formula::or(
            Formula::or(Formula::lit("w"), Formula::comp("w")),
            Formula::gtr(Formula::lit("x"), tail),
        );
        if strict_vs_oracle(&probe, DEFAULT_BUDGET_BITS).unwrap().is_some() {
            diverged += 1;
        }
    }
    println!("  {diverged} of 20 diverge (all of them: the settled pair is always forgotten)");

    // On plain chains and conjunctions of chains the verbatim procedure is
    // fine — the rewrite loses nothing there.
    println!();
    println!("seeded sweep over generated formulas:");
    let mut checked = 0;
    let mut agreements = 0;
    for seed in 0..200u64 {
        let f = generate(seed, &GenConfig::new(8, 2, true));
        if let Ok(answer) = strict_vs_oracle(&f, DEFAULT_BUDGET_BITS) {
            checked += 1;
            if answer.is_none() {
                agreements += 1;
            }
        }
    }
    println!("  {agreements}/{checked} agree; every disagreement involves a settled disjunct");
}
