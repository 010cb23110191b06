use glc_formula_core::{max_object_level, Formula};
use glc_reducer::{normalize, Strategy};

use crate::eval::{evaluate, space_of_expanded};
use crate::frame::{Frame, FrameSpace, SemanticsError};

/// Default ceiling on the frame-space size: pairs × depth may claim at
/// most this many independent bits before the oracle refuses to
/// enumerate.
pub const DEFAULT_BUDGET_BITS: u32 = 24;

/// Outcome of one exhaustive enumeration: the decided bit plus how many
/// frames were actually evaluated (early exit stops the count).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleRun {
    pub result: u8,
    pub frames_checked: u64,
}

fn check_budget(space: &FrameSpace, budget_bits: u32) -> Result<(), SemanticsError> {
    let bits = space.bits();
    if bits > u64::from(budget_bits) {
        return Err(SemanticsError::BudgetExceeded {
            bits_needed: bits,
            budget_bits,
        });
    }
    Ok(())
}

/// Exhaustively checks the formula over its frame space; 1 means no frame
/// refutes it. Stops at the first refuting frame.
pub fn brute_valid_counted(
    formula: &Formula,
    budget_bits: u32,
) -> Result<OracleRun, SemanticsError> {
    let n = normalize(formula, &Strategy::LeftmostInnermost);
    let space = space_of_expanded(&n);
    check_budget(&space, budget_bits)?;
    let mut checked = 0u64;
    for fr in space {
        checked += 1;
        if evaluate(&fr, &n)? == 0 {
            return Ok(OracleRun {
                result: 0,
                frames_checked: checked,
            });
        }
    }
    Ok(OracleRun {
        result: 1,
        frames_checked: checked,
    })
}

/// Exhaustively searches the formula's frame space for a satisfying
/// frame; 1 means one exists. Stops at the first hit.
pub fn brute_sat_counted(formula: &Formula, budget_bits: u32) -> Result<OracleRun, SemanticsError> {
    let n = normalize(formula, &Strategy::LeftmostInnermost);
    let space = space_of_expanded(&n);
    check_budget(&space, budget_bits)?;
    let mut checked = 0u64;
    for fr in space {
        checked += 1;
        if evaluate(&fr, &n)? == 1 {
            return Ok(OracleRun {
                result: 1,
                frames_checked: checked,
            });
        }
    }
    Ok(OracleRun {
        result: 0,
        frames_checked: checked,
    })
}

pub fn brute_valid(formula: &Formula) -> Result<u8, SemanticsError> {
    brute_valid_counted(formula, DEFAULT_BUDGET_BITS).map(|r| r.result)
}

pub fn brute_sat(formula: &Formula) -> Result<u8, SemanticsError> {
    brute_sat_counted(formula, DEFAULT_BUDGET_BITS).map(|r| r.result)
}

/// First frame (in enumeration order) where the formula evaluates to 0,
/// if any — the reportable refutation.
pub fn first_countermodel(
    formula: &Formula,
    budget_bits: u32,
) -> Result<Option<Frame>, SemanticsError> {
    let n = normalize(formula, &Strategy::LeftmostInnermost);
    let space = space_of_expanded(&n);
    check_budget(&space, budget_bits)?;
    for fr in space {
        if evaluate(&fr, &n)? == 0 {
            return Ok(Some(fr));
        }
    }
    Ok(None)
}

/// True iff the two formulas take the same value on every frame of their
/// joint space (union of pair sets, max of depths). This is the oracle
/// behind equivalence checking and behind cross-strategy comparisons.
pub fn value_equal(f1: &Formula, f2: &Formula, budget_bits: u32) -> Result<bool, SemanticsError> {
    let n1 = normalize(f1, &Strategy::LeftmostInnermost);
    let n2 = normalize(f2, &Strategy::LeftmostInnermost);
    let mut pairs = n1.pair_names();
    pairs.extend(n2.pair_names());
    let d1 = max_object_level(&n1).expect("rewriting yields an expansion") as usize + 1;
    let d2 = max_object_level(&n2).expect("rewriting yields an expansion") as usize + 1;
    let space = FrameSpace::over(&pairs, d1.max(d2));
    check_budget(&space, budget_bits)?;
    for fr in space {
        if evaluate(&fr, &n1)? != evaluate(&fr, &n2)? {
            return Ok(false);
        }
    }
    Ok(true)
}
