//! One-pass complementation of a formula in unit graph expansion.
//!
//! [`recursive_reduce2`] computes, without general rewriting, the normal
//! form that `~F` reduces to. It swaps the junctions outside chains, swaps
//! every non-chain literal with its complement, and replaces each maximal
//! chain `H > T` with `recursive_reduce2(H) | (H > recursive_reduce2(T))`,
//! distributing the shared head over the junctions of the rewritten tail so
//! that the result is itself in unit graph expansion.

use glc_formula_core::Formula;

use crate::grammar::is_unit_graph_expansion;
use crate::VariantError;

fn rr2(f: &Formula) -> Formula {
    match f {
        Formula::Atom(s) => Formula::Atom(s.complement()),
        Formula::And(l, r) => Formula::or(rr2(l), rr2(r)),
        Formula::Or(l, r) => Formula::and(rr2(l), rr2(r)),
        Formula::Gtr(h, t) => Formula::or(rr2(h), push_gtr(h, rr2(t))),
        Formula::Not(_) => unreachable!("input checked to be negation-free"),
    }
}

/// Attach head `h` to every junction leaf of the rewritten tail, keeping the
/// result in unit graph expansion.
fn push_gtr(h: &Formula, t: Formula) -> Formula {
    match t {
        Formula::Or(l, r) => Formula::or(push_gtr(h, *l), push_gtr(h, *r)),
        Formula::And(l, r) => Formula::and(push_gtr(h, *l), push_gtr(h, *r)),
        leaf => Formula::gtr(h.clone(), leaf),
    }
}

/// Complement a formula in unit graph expansion in one structural pass.
///
/// Equals `variant_normalize(~F)`: the rewrite system sends a negated
/// expansion to exactly this formula, whatever the strategy.
pub fn recursive_reduce2(f: &Formula) -> Result<Formula, VariantError> {
    if f.contains_constants() {
        return Err(VariantError::ConstantsUnsupported);
    }
    if !is_unit_graph_expansion(f) {
        return Err(VariantError::NotUnitGraphExpansion);
    }
    Ok(rr2(f))
}
