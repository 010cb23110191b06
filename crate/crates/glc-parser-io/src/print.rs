//! Printers that are exact inverses of the parsers.

use glc_formula_core::{Formula, SElem};
use thiserror::Error;

/// Which concrete syntax to print.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Syntax {
    Infix,
    Prefix,
}

/// Printing failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrintError {
    #[error("the prefix syntax has no spelling for top/bot")]
    ConstantsUnsupported,
}

/// Print in the requested syntax. Infix printing is total; prefix printing
/// fails on constants, which that syntax cannot spell.
pub fn print(f: &Formula, syntax: Syntax) -> Result<String, PrintError> {
    match syntax {
        Syntax::Infix => Ok(print_infix(f)),
        Syntax::Prefix => print_prefix(f),
    }
}

/// Minimal-parenthesis infix rendering; `parse_infix(print_infix(f)) == f`.
///
/// Left-nested `&`/`|` chains print flat (that is how the parser folds
/// them); every other place where re-parsing would change the tree gets
/// parentheses.
pub fn print_infix(f: &Formula) -> String {
    let mut out = String::new();
    go_infix(f, &mut out);
    out
}

fn atom_str(s: &SElem) -> String {
    s.to_string()
}

fn go_infix(f: &Formula, out: &mut String) {
    match f {
        Formula::Atom(s) => out.push_str(&atom_str(s)),
        Formula::Not(g) => {
            out.push('~');
            match g.as_ref() {
                Formula::Atom(_) | Formula::Not(_) => go_infix(g, out),
                _ => {
                    out.push('(');
                    go_infix(g, out);
                    out.push(')');
                }
            }
        }
        Formula::And(l, r) => {
            junction_child(l, out, JunctionOp::And, Side::Left);
            out.push_str(" & ");
            junction_child(r, out, JunctionOp::And, Side::Right);
        }
        Formula::Or(l, r) => {
            junction_child(l, out, JunctionOp::Or, Side::Left);
            out.push_str(" | ");
            junction_child(r, out, JunctionOp::Or, Side::Right);
        }
        Formula::Gtr(l, r) => {
            // Left attribution arguments re-associate on re-parse; wrap them.
            if matches!(l.as_ref(), Formula::Gtr(..)) {
                out.push('(');
                go_infix(l, out);
                out.push(')');
            } else {
                go_infix(l, out);
            }
            out.push_str(" > ");
            go_infix(r, out);
        }
    }
}

#[derive(PartialEq, Clone, Copy)]
enum JunctionOp {
    And,
    Or,
}

#[derive(PartialEq, Clone, Copy)]
enum Side {
    Left,
    Right,
}

fn junction_child(f: &Formula, out: &mut String, op: JunctionOp, side: Side) {
    let bare = match f {
        Formula::Atom(_) | Formula::Not(_) => true,
        // Same operator on the left prints flat; anything else would
        // re-parse differently (mixed junctions are even a parse error).
        Formula::And(..) => op == JunctionOp::And && side == Side::Left,
        Formula::Or(..) => op == JunctionOp::Or && side == Side::Left,
        Formula::Gtr(..) => false,
    };
    if bare {
        go_infix(f, out);
    } else {
        out.push('(');
        go_infix(f, out);
        out.push(')');
    }
}

/// Prefix rendering; `parse_prefix(print_prefix(f)?) == f`. Errors on
/// constants.
pub fn print_prefix(f: &Formula) -> Result<String, PrintError> {
    let mut out = String::new();
    go_prefix(f, &mut out)?;
    Ok(out)
}

fn go_prefix(f: &Formula, out: &mut String) -> Result<(), PrintError> {
    match f {
        Formula::Atom(SElem::Top) | Formula::Atom(SElem::Bot) => {
            Err(PrintError::ConstantsUnsupported)
        }
        Formula::Atom(s) => {
            out.push_str(&atom_str(s));
            Ok(())
        }
        Formula::Not(g) => {
            out.push('!');
            go_prefix(g, out)
        }
        Formula::And(l, r) => bin_prefix('*', l, r, out),
        Formula::Or(l, r) => bin_prefix('+', l, r, out),
        Formula::Gtr(l, r) => bin_prefix('%', l, r, out),
    }
}

fn bin_prefix(op: char, l: &Formula, r: &Formula, out: &mut String) -> Result<(), PrintError> {
    out.push(op);
    out.push('(');
    go_prefix(l, out)?;
    out.push(')');
    out.push('(');
    go_prefix(r, out)?;
    out.push(')');
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{parse_infix, parse_prefix};

    #[test]
    fn flat_left_chains_and_wrapped_right_nests() {
        let left = Formula::or(
            Formula::or(Formula::lit("a"), Formula::lit("b")),
            Formula::lit("c"),
        );
        assert_eq!(print_infix(&left), "a | b | c");
        let right = Formula::or(
            Formula::lit("a"),
            Formula::or(Formula::lit("b"), Formula::lit("c")),
        );
        assert_eq!(print_infix(&right), "a | (b | c)");
        for f in [left, right] {
            assert_eq!(parse_infix(&print_infix(&f)).unwrap(), f);
        }
    }

    #[test]
    fn junctions_inside_attribution_print_bare() {
        let f = Formula::gtr(
            Formula::and(Formula::lit("hat"), Formula::lit("brooch")),
            Formula::lit("green"),
        );
        assert_eq!(print_infix(&f), "hat & brooch > green");
        let g = Formula::gtr(
            Formula::lit("hat"),
            Formula::or(Formula::lit("green"), Formula::lit("brooch")),
        );
        assert_eq!(print_infix(&g), "hat > green | brooch");
    }

    #[test]
    fn attribution_inside_junctions_is_wrapped() {
        let f = Formula::or(
            Formula::gtr(Formula::lit("a"), Formula::lit("b")),
            Formula::lit("c"),
        );
        assert_eq!(print_infix(&f), "(a > b) | c");
    }

    #[test]
    fn left_nested_attribution_is_wrapped() {
        let f = Formula::gtr(
            Formula::gtr(Formula::lit("a"), Formula::lit("b")),
            Formula::gtr(Formula::lit("c"), Formula::lit("d")),
        );
        assert_eq!(print_infix(&f), "(a > b) > c > d");
        assert_eq!(parse_infix(&print_infix(&f)).unwrap(), f);
    }

    #[test]
    fn negation_wraps_compound_bodies_only() {
        let f = Formula::not(Formula::not(Formula::comp("a")));
        assert_eq!(print_infix(&f), "~~a'");
        let g = Formula::not(Formula::and(Formula::lit("a"), Formula::lit("b")));
        assert_eq!(print_infix(&g), "~(a & b)");
    }

    #[test]
    fn prefix_round_trips_and_rejects_constants() {
        let f = Formula::not(Formula::gtr(
            Formula::and(Formula::lit("a"), Formula::comp("b")),
            Formula::lit("c"),
        ));
        let s = print_prefix(&f).unwrap();
        assert_eq!(s, "!%(*(a)(b'))(c)");
        assert_eq!(parse_prefix(&s).unwrap(), f);

        assert_eq!(
            print_prefix(&Formula::top()),
            Err(PrintError::ConstantsUnsupported)
        );
        assert_eq!(
            print(&Formula::top(), Syntax::Infix).unwrap(),
            "top"
        );
    }
}
