//! Core representation for a propositional logic extended with an
//! attribution connective (written `≳` in math notation, `>` in the ASCII
//! syntax) that chains an object to its attributes.
//!
//! This crate owns the syntax tree ([`Formula`] over atomic [`SElem`]s),
//! exact size and occurrence metrics, the lexicographic rewrite [`Measure`],
//! unit-chain recognition, and a deterministic seeded generator used by test
//! corpora throughout the workspace. It has no opinion on parsing, rewriting,
//! or evaluation — sibling crates build those on top of these types.

pub mod chains;
pub mod formula;
pub mod generate;
pub mod metrics;
pub mod selem;

pub use chains::{
    as_unit_chain, chain_from_elems, is_unit_chain, is_unit_chain_expansion, max_object_level,
    CoreError,
};
pub use formula::{Dir, Formula};
pub use generate::{generate, GenConfig};
pub use metrics::{
    canonical_size, decreases_base_triple, decreases_variant_quad, f_len, f_size, gtr_path_depth,
    neg_max, occurrence_counts, Measure, OccurrenceCounts,
};
pub use selem::SElem;
