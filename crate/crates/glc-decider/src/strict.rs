use std::collections::BTreeMap;

use glc_formula_core::{as_unit_chain, chain_from_elems, is_unit_chain_expansion, Formula, SElem};
use glc_reducer::{normalize, Strategy};
use glc_semantics::{evaluate, Frame, SemanticsError};

use crate::interp::{level_interps, LevelInterp};
use crate::{check_level_budget, Decision, DecisionStats};

/// Truncates every chain reaching past the given level to its prefix of
/// elements 0..=level (a level-0 truncation leaves a bare element).
/// Shorter chains and non-chain leaves are untouched.
pub fn squash(formula: &Formula, level: u64) -> Result<Formula, SemanticsError> {
    if !is_unit_chain_expansion(formula) {
        return Err(SemanticsError::NotUnitChainExpansion);
    }
    Ok(squash_expanded(formula, level))
}

fn squash_expanded(formula: &Formula, level: u64) -> Formula {
    match formula {
        Formula::Atom(_) => formula.clone(),
        Formula::And(l, r) => Formula::and(squash_expanded(l, level), squash_expanded(r, level)),
        Formula::Or(l, r) => Formula::or(squash_expanded(l, level), squash_expanded(r, level)),
        Formula::Gtr(..) => {
            let elems = as_unit_chain(formula).expect("expansion checked on entry");
            let max_index = (elems.len() - 1) as u64;
            if max_index >= level {
                chain_from_elems(&elems[..=level as usize])
            } else {
                formula.clone()
            }
        }
        Formula::Not(_) => unreachable!("expansion checked on entry"),
    }
}

/// Number of distinct literal pairs occurring in the formula; constants
/// do not count. One pair is one degree of freedom for the level loop.
pub fn count_distinct(formula: &Formula) -> usize {
    formula.pair_names().len()
}

/// True iff the (already squashed) formula evaluates to 0 when the given
/// assignment is installed at its level: true signals "falsified here".
pub fn sat_check(squashed: &Formula, interp: &LevelInterp) -> bool {
    let mut levels = vec![BTreeMap::new(); interp.level as usize];
    levels.push(interp.bits.clone());
    let frame = Frame::new(levels);
    evaluate(&frame, squashed).expect("squashing preserves expansion") == 0
}

/// The verbatim between-level rewrite: every non-chain leaf and every
/// chain not reaching past the level is dropped (a dropped junction arm
/// yields the other arm); each surviving chain either disappears — its
/// element at the level reads 0 — or has that element replaced by ⊤.
/// `None` means nothing survived.
pub fn rewrite_strict(
    formula: &Formula,
    interp: &LevelInterp,
    level: u64,
) -> Result<Option<Formula>, SemanticsError> {
    if !is_unit_chain_expansion(formula) {
        return Err(SemanticsError::NotUnitChainExpansion);
    }
    Ok(rewrite_expanded(formula, interp, level))
}

fn rewrite_expanded(formula: &Formula, interp: &LevelInterp, level: u64) -> Option<Formula> {
    match formula {
        Formula::Atom(_) => None,
        Formula::And(l, r) => match (
            rewrite_expanded(l, interp, level),
            rewrite_expanded(r, interp, level),
        ) {
            (None, None) => None,
            (Some(x), None) | (None, Some(x)) => Some(x),
            (Some(x), Some(y)) => Some(Formula::and(x, y)),
        },
        Formula::Or(l, r) => match (
            rewrite_expanded(l, interp, level),
            rewrite_expanded(r, interp, level),
        ) {
            (None, None) => None,
            (Some(x), None) | (None, Some(x)) => Some(x),
            (Some(x), Some(y)) => Some(Formula::or(x, y)),
        },
        Formula::Gtr(..) => {
            let mut elems = as_unit_chain(formula).expect("expansion checked on entry");
            let max_index = (elems.len() - 1) as u64;
            if max_index <= level {
                return None;
            }
            if interp.value_of(&elems[level as usize]) == 0 {
                None
            } else {
                elems[level as usize] = SElem::Top;
                Some(chain_from_elems(&elems))
            }
        }
        Formula::Not(_) => unreachable!("expansion checked on entry"),
    }
}

fn strict_rec(f_a: &Formula, level: u64, stats: &mut DecisionStats) -> u8 {
    stats.max_level_entered = stats.max_level_entered.max(level + 1);
    let f_b = squash_expanded(f_a, level);
    let pairs = f_b.pair_names();
    for interp in level_interps(level, &pairs) {
        stats.frames_checked += 1;
        if sat_check(&f_b, &interp) {
            return 0;
        }
        match rewrite_expanded(f_a, &interp, level) {
            None => stats.empty_rewrites += 1,
            Some(next) => {
                if strict_rec(&next, level + 1, stats) == 0 {
                    return 0;
                }
            }
        }
    }
    1
}

/// The level-wise validity check, transcribed as listed: per level it
/// snapshots the formula up to that level, tries every assignment there,
/// fails on a falsified snapshot, and otherwise recurses on the rewritten
/// remainder (an empty remainder skips the recursion). The verbatim
/// rewrite forgets which junction arms an assignment already satisfied,
/// so this mode can reject formulas the exhaustive oracle accepts;
/// callers compare against [`glc_semantics::brute_valid`] and record
/// divergences rather than trust it blindly.
pub fn valid_paper_strict_counted(
    formula: &Formula,
    budget_bits: u32,
) -> Result<Decision, SemanticsError> {
    let n = normalize(formula, &Strategy::LeftmostInnermost);
    let mut stats = check_level_budget(&n, budget_bits)?;
    let result = strict_rec(&n, 0, &mut stats);
    Ok(Decision { result, stats })
}

pub fn valid_paper_strict(formula: &Formula) -> Result<u8, SemanticsError> {
    valid_paper_strict_counted(formula, glc_semantics::DEFAULT_BUDGET_BITS).map(|d| d.result)
}
