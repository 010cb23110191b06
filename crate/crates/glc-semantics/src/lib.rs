//! Valuation frames and evaluation for the attribution logic.
//!
//! A frame assigns one bit per literal pair at every object level; a
//! chain holds when each of its elements holds at the element's own
//! level. The level assignment depends only on the level index, never on
//! which chain prefix reaches it, so a formula's value is decided by a
//! finite frame space: every assignment over the pairs it mentions, one
//! level per chain index it can reach. [`brute_valid`] and [`brute_sat`]
//! enumerate that space exhaustively and serve as the reference oracle
//! for the decision procedures.

mod eval;
mod frame;
mod oracle;

pub use eval::{evaluate, evaluate_full, frame_space, space_of_expanded};
pub use frame::{Frame, FrameSpace, SemanticsError};
pub use oracle::{
    brute_sat, brute_sat_counted, brute_valid, brute_valid_counted, first_countermodel,
    value_equal, OracleRun, DEFAULT_BUDGET_BITS,
};
