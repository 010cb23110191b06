//! Reading and writing formulas in both concrete syntaxes.
//!
//! The infix syntax is what the command line speaks: `~` `&` `|` `>` with
//! parentheses, `'` for complemented pairs, and the constants `top`/`bot`.
//! The prefix syntax spells every connective as a single sigil (`!` `*`
//! `+` `%`) with parenthesised arguments, and is what the inequality lab's
//! templates are written in.
//!
//! Run with: cargo run -p glc --example parse_and_print

use glc::{parse_infix, parse_prefix, print_infix, print_prefix, Formula};

fn main() {
    // Infix round trips: parse, print, re-parse.
    for source in [
        "hat > yellow",
        "~(hat & shirt) | yellow'",
        "a > b > c",
        "(hat | brooch) > top",
    ] {
        let f = parse_infix(source).expect("example inputs parse");
        let printed = print_infix(&f);
        let back = parse_infix(&printed).expect("printed output re-parses");
        assert_eq!(f, back, "printing is lossless");
        println!("{source:28} parses to {printed}");
    }

    // The same tree can be built programmatically...
    let built = Formula::gtr(
        Formula::and(Formula::lit("hat"), Formula::lit("shirt")),
        Formula::not(Formula::lit("yellow")),
    );
    // ...and printed in either syntax.
    println!();
    println!("built:  {}", print_infix(&built));
    println!("prefix: {}", print_prefix(&built).expect("no placeholders left"));

    // Prefix inputs use one letter per name.
    let from_prefix = parse_prefix("!%(s)(y)").expect("prefix input parses");
    println!("prefix !%(s)(y) is infix {}", print_infix(&from_prefix));

    // Parse errors carry the byte span of the offending token, which the
    // command line forwards as {"error", "start", "end"}.
    let err = parse_infix("hat > ").unwrap_err();
    println!();
    println!(
        "`hat > ` fails: {} (bytes {}..{})",
        err.message, err.span.start, err.span.end
    );
}
