//! Inequality lab for the rewrite measures.
//!
//! Every rewrite rule of the chain calculus and of the graph calculus comes
//! with a bound: the size function never grows across the rule, and the pure
//! algebra identities (commutativity, associativity) keep it exactly. This
//! crate packages each rule as a [`TestPair`] — a prefix-syntax template of
//! the redex and the contractum with schematic letters — and checks the
//! claimed relation numerically:
//!
//! * [`builtin_pairs`] lists the 13 chain-calculus and 13 graph-calculus
//!   pairs;
//! * [`check_pair`] instantiates the letters and compares exact rational
//!   sizes at a chosen entry point `(d, l, flag)`;
//! * [`run_suite`] sweeps every pair over seeded random instantiations and
//!   the full entry-point grid, producing a JSON-lines report;
//! * [`check_base_trace`] / [`check_variant_trace`] re-verify live reduction
//!   traces step by step, coupling each fired rule back to its pair.
//!
//! Instantiations drawn by the suite are negation-free (complement marks on
//! literals are fine). That is the domain on which the inequalities hold at
//! every grid entry: a negation's weight `1/4^d` depends on its nesting
//! depth, and several rules move subterms to a shallower depth, so a buried
//! negation can make the contractum larger at shallow entry points. The
//! boundary is pinned by unit tests rather than papered over.

mod check;
mod pairs;
mod suite;
mod trace;

pub use check::{
    check_pair, instantiation_for, pair_sizes, render_counters, render_size, template_letters,
    GRID,
};
pub use pairs::{builtin_pairs, Calculus, Relation, TestPair};
pub use suite::{run_suite, SuiteRecord, SuiteReport};
pub use trace::{
    base_pair_id, check_base_trace, check_variant_trace, variant_pair_id, TraceViolation,
    TRACE_ENTRIES,
};
