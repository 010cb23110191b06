//! Recognition of unit chains and of fully expanded formulas.
//!
//! A *unit chain* is a right-nested attribution spine whose elements are all
//! atoms: `s0 > (s1 > (... > sk))` with `k >= 1`. A formula is in
//! *unit-chain expansion* when no negation remains and every attribution
//! subformula is a unit chain; that is the canonical form the rewrite system
//! drives toward, and the only shape the frame semantics evaluates.

use thiserror::Error;

use crate::formula::Formula;
use crate::selem::SElem;

/// Errors for operations that require an already-expanded formula.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("formula is not in unit-chain expansion")]
    NotUnitChainExpansion,
}

/// The element list of a unit chain, or `None` if `f` is not one.
///
/// Only `Gtr` nodes qualify, so the result always has at least two elements.
pub fn as_unit_chain(f: &Formula) -> Option<Vec<SElem>> {
    fn spine(f: &Formula, out: &mut Vec<SElem>) -> bool {
        match f {
            Formula::Gtr(l, r) => match l.as_ref() {
                Formula::Atom(s) => {
                    out.push(s.clone());
                    spine(r, out)
                }
                _ => false,
            },
            Formula::Atom(s) => {
                out.push(s.clone());
                true
            }
            _ => false,
        }
    }
    match f {
        Formula::Gtr(..) => {
            let mut out = Vec::new();
            if spine(f, &mut out) {
                Some(out)
            } else {
                None
            }
        }
        _ => None,
    }
}

/// True iff `f` is a right-nested attribution spine of atoms.
pub fn is_unit_chain(f: &Formula) -> bool {
    as_unit_chain(f).is_some()
}

/// Rebuild a right-nested chain from its elements.
///
/// A single element yields a bare atom; an empty slice is not a formula.
///
/// # Panics
///
/// Panics on an empty slice.
pub fn chain_from_elems(elems: &[SElem]) -> Formula {
    match elems {
        [] => panic!("a chain needs at least one element"),
        [only] => Formula::Atom(only.clone()),
        [head, rest @ ..] => Formula::gtr(Formula::Atom(head.clone()), chain_from_elems(rest)),
    }
}

/// True iff no negation remains and every attribution subformula is a unit
/// chain — the canonical evaluable form.
pub fn is_unit_chain_expansion(f: &Formula) -> bool {
    match f {
        Formula::Atom(_) => true,
        Formula::Not(_) => false,
        Formula::And(l, r) | Formula::Or(l, r) => {
            is_unit_chain_expansion(l) && is_unit_chain_expansion(r)
        }
        Formula::Gtr(..) => is_unit_chain(f),
    }
}

/// The largest attribute index reached by any chain: a chain of `k + 1`
/// elements attributes down to level `k`, and a formula without chains
/// stays at level 0.
///
/// Requires unit-chain expansion, because partially rewritten attribution
/// trees have no well-defined levels yet.
pub fn max_object_level(f: &Formula) -> Result<u64, CoreError> {
    match f {
        Formula::Atom(_) => Ok(0),
        Formula::Not(_) => Err(CoreError::NotUnitChainExpansion),
        Formula::And(l, r) | Formula::Or(l, r) => {
            Ok(max_object_level(l)?.max(max_object_level(r)?))
        }
        Formula::Gtr(..) => {
            let elems = as_unit_chain(f).ok_or(CoreError::NotUnitChainExpansion)?;
            Ok(elems.len() as u64 - 1)
        }
    }
}
