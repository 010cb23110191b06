use std::collections::BTreeSet;

use glc_formula_core::Formula;
use glc_reducer::{normalize, Strategy};
use glc_semantics::{brute_valid_counted, SemanticsError};

use crate::interp::{level_interps, LevelInterp};
use crate::{check_level_budget, Decision, DecisionStats};

/// What is left of a formula once one level's assignment is substituted.
enum Residual {
    Zero,
    One,
    Remainder(Formula),
}

fn current_level_pairs(f: &Formula, out: &mut BTreeSet<String>) {
    match f {
        Formula::Atom(s) => {
            if let Some(p) = s.pair_name() {
                out.insert(p.to_string());
            }
        }
        Formula::And(l, r) | Formula::Or(l, r) => {
            current_level_pairs(l, out);
            current_level_pairs(r, out);
        }
        Formula::Gtr(l, _) => {
            if let Formula::Atom(s) = &**l {
                if let Some(p) = s.pair_name() {
                    out.insert(p.to_string());
                }
            }
        }
        Formula::Not(_) => unreachable!("the sound procedure walks expanded formulas"),
    }
}

/// Substitutes one level: bare elements become their bits, a chain whose
/// first element reads 0 becomes 0 and otherwise sheds that element, and
/// junctions fold constants away on the spot.
fn residual(f: &Formula, interp: &LevelInterp) -> Residual {
    match f {
        Formula::Atom(s) => {
            if interp.value_of(s) == 1 {
                Residual::One
            } else {
                Residual::Zero
            }
        }
        Formula::Gtr(l, r) => {
            let head = match &**l {
                Formula::Atom(s) => s,
                _ => unreachable!("the sound procedure walks expanded formulas"),
            };
            if interp.value_of(head) == 0 {
                Residual::Zero
            } else {
                Residual::Remainder((**r).clone())
            }
        }
        Formula::And(l, r) => match (residual(l, interp), residual(r, interp)) {
            (Residual::Zero, _) | (_, Residual::Zero) => Residual::Zero,
            (Residual::One, x) | (x, Residual::One) => x,
            (Residual::Remainder(a), Residual::Remainder(b)) => {
                Residual::Remainder(Formula::and(a, b))
            }
        },
        Formula::Or(l, r) => match (residual(l, interp), residual(r, interp)) {
            (Residual::One, _) | (_, Residual::One) => Residual::One,
            (Residual::Zero, x) | (x, Residual::Zero) => x,
            (Residual::Remainder(a), Residual::Remainder(b)) => {
                Residual::Remainder(Formula::or(a, b))
            }
        },
        Formula::Not(_) => unreachable!("the sound procedure walks expanded formulas"),
    }
}

fn sound_rec(f: &Formula, level: u64, stats: &mut DecisionStats) -> u8 {
    stats.max_level_entered = stats.max_level_entered.max(level + 1);
    let mut pairs = BTreeSet::new();
    current_level_pairs(f, &mut pairs);
    for interp in level_interps(level, &pairs) {
        stats.frames_checked += 1;
        match residual(f, &interp) {
            Residual::Zero => return 0,
            Residual::One => {}
            Residual::Remainder(next) => {
                if sound_rec(&next, level + 1, stats) == 0 {
                    return 0;
                }
            }
        }
    }
    1
}

/// Sound-and-complete level-wise validity: for every assignment at the
/// current level, substitute it, fold constants, and fail on a residual
/// 0, accept the assignment on a residual 1, or recurse one level deeper
/// on the remainder. Unlike the verbatim rewrite, substitution keeps the
/// junction structure, so nothing an assignment has already settled is
/// forgotten; the result matches the exhaustive oracle on every input
/// within budget.
pub fn valid_sound_counted(formula: &Formula, budget_bits: u32) -> Result<Decision, SemanticsError> {
    let n = normalize(formula, &Strategy::LeftmostInnermost);
    let mut stats = check_level_budget(&n, budget_bits)?;
    let result = sound_rec(&n, 0, &mut stats);
    Ok(Decision { result, stats })
}

pub fn valid_sound(formula: &Formula) -> Result<u8, SemanticsError> {
    valid_sound_counted(formula, glc_semantics::DEFAULT_BUDGET_BITS).map(|d| d.result)
}

/// Satisfiability through the validity of the negation: per-frame values
/// are total and complementary, so F has a satisfying frame exactly when
/// ¬F is not valid.
pub fn satisfiable_counted(formula: &Formula, budget_bits: u32) -> Result<Decision, SemanticsError> {
    let negated = Formula::not(formula.clone());
    let d = valid_sound_counted(&negated, budget_bits)?;
    Ok(Decision {
        result: 1 - d.result,
        stats: d.stats,
    })
}

pub fn satisfiable(formula: &Formula) -> Result<u8, SemanticsError> {
    satisfiable_counted(formula, glc_semantics::DEFAULT_BUDGET_BITS).map(|d| d.result)
}

/// Runs the verbatim mode and the exhaustive oracle side by side;
/// `Some((strict, oracle))` reports a disagreement worth recording.
pub fn strict_vs_oracle(
    formula: &Formula,
    budget_bits: u32,
) -> Result<Option<(u8, u8)>, SemanticsError> {
    let strict = crate::valid_paper_strict_counted(formula, budget_bits)?.result;
    let oracle = brute_valid_counted(formula, budget_bits)?.result;
    Ok(if strict == oracle {
        None
    } else {
        Some((strict, oracle))
    })
}
