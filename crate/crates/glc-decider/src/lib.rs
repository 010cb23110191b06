//! Level-wise validity decision procedures.
//!
//! Both procedures rewrite the query to unit chain expansion and then
//! walk the object levels, enumerating the 2^pairs assignments of each
//! level in turn — the shape that keeps the whole search exponential in
//! pairs × depth rather than in the formula.
//!
//! Two modes ship side by side. [`valid_paper_strict`] transcribes the
//! listed procedure as written: it snapshots each level, discards
//! non-chain material between levels, and ⊤-marks the consumed element
//! of every surviving chain. That between-level rewrite forgets which
//! junction arms the current assignment already satisfied (only
//! equisatisfiability of the pieces survives, not equivalence of the
//! whole), so the mode rejects some formulas that mix object levels
//! disjunctively. [`valid_sound`] keeps the same skeleton but substitutes
//! each level's assignment into the formula and folds constants, which
//! preserves exactly the information the rewrite loses; it agrees with
//! the exhaustive oracle everywhere. [`strict_vs_oracle`] hunts for the
//! disagreements so they can be recorded rather than argued about.

mod interp;
mod sound;
mod strict;

pub use interp::{level_interps, LevelInterp};
pub use sound::{
    satisfiable, satisfiable_counted, strict_vs_oracle, valid_sound, valid_sound_counted,
};
pub use strict::{
    count_distinct, rewrite_strict, sat_check, squash, valid_paper_strict,
    valid_paper_strict_counted,
};

use glc_formula_core::{max_object_level, Formula};
use glc_semantics::SemanticsError;

/// Counters reported by one decision run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct DecisionStats {
    /// Object levels the normalized query spans (max chain index + 1).
    pub levels: u64,
    /// Deepest level the recursion actually entered, 1-based; never
    /// exceeds `levels`.
    pub max_level_entered: u64,
    /// Level assignments tested, summed over all levels entered.
    pub frames_checked: u64,
    /// How often the between-level rewrite left nothing behind (verbatim
    /// mode only; the listing does not define a recursion on nothing, so
    /// these spots skip it).
    pub empty_rewrites: u64,
}

/// A decided bit plus the counters of the run that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Decision {
    pub result: u8,
    pub stats: DecisionStats,
}

/// Shared admission check: the level-wise search of a normalized formula
/// touches at most pairs × levels independent bits; refuse anything past
/// the budget and seed the stats otherwise.
fn check_level_budget(
    normal: &Formula,
    budget_bits: u32,
) -> Result<DecisionStats, SemanticsError> {
    let levels = max_object_level(normal).expect("callers normalize first") + 1;
    let bits = normal.pair_names().len() as u64 * levels;
    if bits > u64::from(budget_bits) {
        return Err(SemanticsError::BudgetExceeded {
            bits_needed: bits,
            budget_bits,
        });
    }
    Ok(DecisionStats {
        levels,
        ..DecisionStats::default()
    })
}
