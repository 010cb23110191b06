//! One-stop facade for the gradual-attribution logic toolkit.
//!
//! Everything the individual crates provide is re-exported here under one
//! namespace, so a downstream user can depend on `glc` alone:
//!
//! - formula construction, metrics, and seeded generation
//!   ([`Formula`], [`f_size`], [`generate`]),
//! - infix/prefix parsing and printing ([`parse_infix`], [`print_infix`]),
//! - the rewrite system to unit-chain expansion ([`normalize`], [`step`]),
//! - frame semantics and brute-force deciders ([`evaluate`], [`brute_valid`]),
//! - the level-wise decision procedures, both the verbatim transcription and
//!   the corrected one ([`valid_paper_strict`], [`valid_sound`]),
//! - the graph-chain variant calculus ([`variant_normalize`],
//!   [`variant_brute_valid`], [`recursive_reduce2`]),
//! - the size-measure inequality lab ([`run_suite`], [`check_pair`]).
//!
//! The crate also ships the `glc` binary. Its entire implementation lives in
//! [`run`]/[`run_captured`], so scripted callers and tests can drive the
//! command surface in-process; see the `examples/` directory for one runnable
//! program per major capability.

mod ast;
mod cli;
mod selftest;

pub use ast::ast_json;
pub use cli::{run, run_captured};

// Formula construction, metrics, chain predicates, seeded generation.
pub use glc_formula_core::{
    as_unit_chain, canonical_size, chain_from_elems, decreases_base_triple,
    decreases_variant_quad, f_len, f_size, generate, gtr_path_depth, is_unit_chain,
    is_unit_chain_expansion, max_object_level, neg_max, occurrence_counts, CoreError, Dir,
    Formula, GenConfig, Measure, OccurrenceCounts, SElem,
};

// Concrete syntax in and out, plus the shared JSON record shapes.
pub use glc_parser_io::{
    parse_infix, parse_prefix, parse_prefix_with, print, print_infix, print_prefix,
    DivergenceRecord, ErrorRecord, Mode, NormalizeRecord, ParseError, PrintError, ResultRecord,
    SourceSpan, Syntax, TraceStepRecord,
};

// The base rewrite system.
pub use glc_reducer::{
    negate_normalize, normalize, normalize_traced, recursive_reduce, redexes, step, ReduceError,
    ReductionStep, Rule, Strategy,
};

// Valuation frames, evaluation, and the brute-force oracles.
pub use glc_semantics::{
    brute_sat, brute_sat_counted, brute_valid, brute_valid_counted, evaluate, evaluate_full,
    first_countermodel, frame_space, space_of_expanded, value_equal, Frame, FrameSpace,
    OracleRun, SemanticsError, DEFAULT_BUDGET_BITS,
};

// Level-wise decision procedures: verbatim and corrected.
pub use glc_decider::{
    count_distinct, level_interps, rewrite_strict, sat_check, satisfiable, satisfiable_counted,
    squash, strict_vs_oracle, valid_paper_strict, valid_paper_strict_counted, valid_sound,
    valid_sound_counted, Decision, DecisionStats, LevelInterp,
};

// The graph-chain variant calculus.
pub use glc_graph_variant::{
    compress, is_unit_graph_chain, is_unit_graph_expansion, map_term, query_points_json,
    query_points_of_expansion, recursive_reduce2, render_context, render_term,
    variant_brute_sat, variant_brute_sat_counted, variant_brute_valid,
    variant_brute_valid_counted, variant_evaluate, variant_normalize, variant_normalize_traced,
    variant_query_points, variant_redexes, variant_step, variant_value_equal,
    variant_value_equal_witness, Context, GraphTerm, VariantError, VariantFrame,
    VariantOracleRun, VariantRule, VariantStep, DEFAULT_VARIANT_BUDGET_BITS,
};

// The size-measure inequality lab.
pub use glc_measure_lab::{
    builtin_pairs, check_base_trace, check_pair, check_variant_trace, instantiation_for,
    pair_sizes, render_counters, render_size, run_suite, template_letters, Calculus, Relation,
    SuiteRecord, SuiteReport, TestPair, TraceViolation, GRID, TRACE_ENTRIES,
};
