//! Coupling live reduction traces back to the template pairs.
//!
//! Every step a reducer records names the rule it fired and the local
//! redex/contractum pair. These helpers map the rule to its template pair
//! and re-check the pair's size relation on the live subformulas.
//!
//! Checks run at the true-flag entries `(0, 0, true)` and `(1, 1, true)`.
//! The false-flag entries do not bound live steps: a rule fired over a
//! subterm that still contains negations can grow the size there (see the
//! boundary tests in `check`), whereas at the true-flag entries every
//! junction on the contractum side pushes its children a level deeper,
//! which restores the margin for innermost-first traces and for every
//! graph-calculus rule.

use crate::check::render_size;
use crate::pairs::{builtin_pairs, Calculus, Relation};
use glc_formula_core::f_size;
use glc_graph_variant::{VariantRule, VariantStep};
use glc_reducer::{ReductionStep, Rule};
use thiserror::Error;

/// The entries trace coupling checks: canonical and worked-example, both
/// with the flag on.
pub const TRACE_ENTRIES: [(u32, u32, bool); 2] = [(0, 0, true), (1, 1, true)];

/// The template pair a chain-calculus rule instantiates.
pub fn base_pair_id(rule: Rule) -> u32 {
    match rule {
        Rule::Neg1 => 1,
        Rule::Neg2 => 2,
        Rule::Neg3 => 3,
        Rule::Neg4 => 4,
        Rule::Gtr1 => 5,
        Rule::Gtr2 => 6,
        Rule::Gtr3 => 7,
        Rule::Gtr4 => 8,
        Rule::Gtr5 => 9,
    }
}

/// The template pair a graph-calculus rule instantiates.
pub fn variant_pair_id(rule: VariantRule) -> u32 {
    match rule {
        VariantRule::Neg1 => 1,
        VariantRule::Neg2 => 2,
        VariantRule::Neg3 => 3,
        VariantRule::Neg4 => 400,
        VariantRule::Gtr3 => 500,
        VariantRule::Gtr4 => 8,
        VariantRule::Gtr5 => 9,
        VariantRule::ObjDist1 => 800,
        VariantRule::ObjDist2 => 900,
    }
}

/// A live step that broke its pair's size relation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error(
    "step {rule} (pair {pair_id}, {calculus}) broke {relation} at entry \
     (d={d}, l={l}, flag={flag}): {left_size} vs {right_size}"
)]
pub struct TraceViolation {
    pub rule: &'static str,
    pub pair_id: u32,
    pub calculus: Calculus,
    pub relation: &'static str,
    pub d: u32,
    pub l: u32,
    pub flag: bool,
    pub left_size: String,
    pub right_size: String,
}

fn relation_of(calculus: Calculus, pair_id: u32) -> Relation {
    builtin_pairs(calculus)
        .into_iter()
        .find(|p| p.id == pair_id)
        .map(|p| p.relation)
        .expect("every rule maps to a built-in pair")
}

fn check_step(
    calculus: Calculus,
    pair_id: u32,
    rule: &'static str,
    before: &glc_formula_core::Formula,
    after: &glc_formula_core::Formula,
) -> Result<(), TraceViolation> {
    let relation = relation_of(calculus, pair_id);
    for (d, l, flag) in TRACE_ENTRIES {
        let left = f_size(d, l, flag, before);
        let right = f_size(d, l, flag, after);
        if !relation.holds(&left, &right) {
            return Err(TraceViolation {
                rule,
                pair_id,
                calculus,
                relation: relation.symbol(),
                d,
                l,
                flag,
                left_size: render_size(&left),
                right_size: render_size(&right),
            });
        }
    }
    Ok(())
}

/// Re-checks every chain-calculus step against its pair's relation.
pub fn check_base_trace(steps: &[ReductionStep]) -> Result<(), TraceViolation> {
    for st in steps {
        check_step(
            Calculus::Base,
            base_pair_id(st.rule),
            st.rule.name(),
            &st.before,
            &st.after,
        )?;
    }
    Ok(())
}

/// Re-checks every graph-calculus step against its pair's relation.
pub fn check_variant_trace(steps: &[VariantStep]) -> Result<(), TraceViolation> {
    for st in steps {
        check_step(
            Calculus::Variant,
            variant_pair_id(st.rule),
            st.rule.name(),
            &st.before,
            &st.after,
        )?;
    }
    Ok(())
}
