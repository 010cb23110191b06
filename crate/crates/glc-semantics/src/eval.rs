use glc_formula_core::{as_unit_chain, is_unit_chain_expansion, max_object_level, Formula};
use glc_reducer::{normalize, Strategy};

use crate::frame::{Frame, FrameSpace, SemanticsError};

/// Evaluates an expanded formula against a frame: bare elements read the
/// level-0 assignment, chains conjoin levelwise bits, and the junctions
/// are the usual bit operations. Input that is not in unit chain
/// expansion is rejected; `evaluate_full` rewrites first.
pub fn evaluate(frame: &Frame, formula: &Formula) -> Result<u8, SemanticsError> {
    if !is_unit_chain_expansion(formula) {
        return Err(SemanticsError::NotUnitChainExpansion);
    }
    eval_node(frame, formula)
}

fn eval_node(frame: &Frame, node: &Formula) -> Result<u8, SemanticsError> {
    match node {
        Formula::Atom(s) => Ok(frame.local_i(0, s)),
        Formula::And(l, r) => Ok(eval_node(frame, l)? & eval_node(frame, r)?),
        Formula::Or(l, r) => Ok(eval_node(frame, l)? | eval_node(frame, r)?),
        Formula::Gtr(..) => {
            let elems =
                as_unit_chain(node).expect("expansion guarantees every chain is a unit chain");
            frame.global_j(&elems)
        }
        Formula::Not(_) => Err(SemanticsError::NotUnitChainExpansion),
    }
}

/// Rewrites the formula to unit chain expansion and evaluates the result.
/// The value is independent of the rewrite strategy, so the deterministic
/// one is used.
pub fn evaluate_full(frame: &Frame, formula: &Formula) -> Result<u8, SemanticsError> {
    let n = normalize(formula, &Strategy::LeftmostInnermost);
    evaluate(frame, &n)
}

/// The space of frames that can influence an expanded formula: all
/// assignments over exactly the pairs it mentions, one level per chain
/// index it can reach.
pub fn space_of_expanded(normal: &Formula) -> FrameSpace {
    let pairs = normal.pair_names();
    let depth = max_object_level(normal).expect("caller passes an expanded formula") as usize + 1;
    FrameSpace::over(&pairs, depth)
}

/// Rewrites the formula and returns the frame space sufficient to decide
/// its validity and satisfiability.
pub fn frame_space(formula: &Formula) -> FrameSpace {
    let n = normalize(formula, &Strategy::LeftmostInnermost);
    space_of_expanded(&n)
}
