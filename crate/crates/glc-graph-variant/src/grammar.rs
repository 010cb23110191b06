//! Recognizers for the graph-chain normal form.
//!
//! A *unit graph chain* generalizes the unit chain: the left operand of `>`
//! may be a conjunction. Precisely, `l > r` is a unit graph chain when
//!
//! * `r` is a named literal or itself a unit graph chain, and
//! * `l` is a *head*: a named literal, a unit graph chain, or an `&`-tree
//!   whose flattened components are each a literal or a unit graph chain
//!   (conjunction grouping inside a head carries no meaning).
//!
//! Constants (`top` / `bot`) have no place in this calculus, so any formula
//! containing them is rejected outright.

use glc_formula_core::{Formula, SElem};

/// True for a named literal of either polarity (never a constant).
pub(crate) fn is_literal_atom(f: &Formula) -> bool {
    matches!(f, Formula::Atom(SElem::Lit { .. }))
}

/// True when `f` can serve as one conjunct of a chain head: a literal, a
/// unit graph chain, or an `&`-tree of such.
pub(crate) fn is_head(f: &Formula) -> bool {
    match f {
        Formula::And(l, r) => is_head(l) && is_head(r),
        _ => is_literal_atom(f) || is_unit_graph_chain(f),
    }
}

/// Recognize a unit graph chain.
///
/// Examples: `a > b`, `(a & b) > c`, `(a > b) > c`, and `x > ((a & b) > c)`
/// all qualify; `a > (b & c)` does not (the tail must be a literal or a
/// chain), and nothing containing `top`/`bot` or `~` does.
pub fn is_unit_graph_chain(f: &Formula) -> bool {
    match f {
        Formula::Gtr(l, r) => {
            is_head(l) && (is_literal_atom(r) || is_unit_graph_chain(r))
        }
        _ => false,
    }
}

/// Recognize the rewriting normal form: no negation, no constants, and every
/// `>`-subformula is a unit graph chain. `&`/`|` may combine such leaves
/// freely.
pub fn is_unit_graph_expansion(f: &Formula) -> bool {
    if f.contains_constants() {
        return false;
    }
    fn rec(f: &Formula) -> bool {
        match f {
            Formula::Atom(_) => true,
            Formula::And(l, r) | Formula::Or(l, r) => rec(l) && rec(r),
            Formula::Gtr(..) => is_unit_graph_chain(f),
            Formula::Not(_) => false,
        }
    }
    rec(f)
}

/// In-order leaves of a maximal `|`-tree (every nested grouping collapsed).
pub(crate) fn flatten_or(f: &Formula) -> Vec<&Formula> {
    fn rec<'a>(f: &'a Formula, out: &mut Vec<&'a Formula>) {
        match f {
            Formula::Or(l, r) => {
                rec(l, out);
                rec(r, out);
            }
            other => out.push(other),
        }
    }
    let mut out = Vec::new();
    rec(f, &mut out);
    out
}
