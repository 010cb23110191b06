//! A graph-chain reading of the attribution connective `>`.
//!
//! In the base calculus a chain head is a single element; here a head may be
//! a *conjunction* of literals and chains, read as one bundled observation.
//! `(hat & brooch) > green` asks whether green attaches to the hat and the
//! brooch taken together — which is deliberately weaker than the pair of
//! chains `(hat > green) & (brooch > green)`: the two sides query different
//! points of a valuation and neither implies the other.
//!
//! The crate provides:
//!
//! * recognizers for unit graph chains and unit graph expansion
//!   ([`is_unit_graph_chain`], [`is_unit_graph_expansion`]);
//! * the nine-rule rewrite system driving any constant-free formula into
//!   that form ([`variant_normalize`], with redex enumeration and traced
//!   stepping), including the head-splitting rule that expands a
//!   disjunctive head over every nonempty subset of its disjuncts and the
//!   two in-place head distribution rules;
//! * one-pass complementation of an expansion ([`recursive_reduce2`]),
//!   which agrees with normalizing the negation;
//! * canonical terms ([`GraphTerm`], [`map_term`], [`compress`]) and
//!   context-indexed valuations ([`VariantFrame`], [`variant_evaluate`]);
//! * a brute-force oracle over the finitely many query points a formula can
//!   read ([`variant_brute_valid`], [`variant_brute_sat`],
//!   [`variant_value_equal`]).
//!
//! Constants (`top`/`bot`) are not part of this calculus; every entry point
//! rejects them.

use thiserror::Error;

mod grammar;
mod reduce2;
mod rules;
mod term;
mod valuation;

pub use grammar::{is_unit_graph_chain, is_unit_graph_expansion};
pub use reduce2::recursive_reduce2;
pub use rules::{
    variant_normalize, variant_normalize_traced, variant_redexes, variant_step, VariantRule,
    VariantStep,
};
pub use term::{compress, map_term, render_term, GraphTerm};
pub use valuation::{
    query_points_json, query_points_of_expansion, render_context, variant_brute_sat,
    variant_brute_sat_counted, variant_brute_valid, variant_brute_valid_counted,
    variant_evaluate, variant_query_points, variant_value_equal, variant_value_equal_witness,
    Context, VariantFrame, VariantOracleRun, DEFAULT_VARIANT_BUDGET_BITS,
};

/// Errors of the graph-chain calculus.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VariantError {
    #[error("top/bot have no graph-chain reading")]
    ConstantsUnsupported,
    #[error("input must be in unit graph expansion")]
    NotUnitGraphExpansion,
    #[error("frame has no bit for pair {pair} in context {context}")]
    MissingQueryPoint { context: String, pair: String },
    #[error("formula needs {bits_needed} query-point bits, budget is {budget_bits}")]
    BudgetExceeded { bits_needed: u64, budget_bits: u32 },
    #[error("no subformula at the given position")]
    InvalidPosition,
    #[error("rule {0} does not match at the given position")]
    RuleDoesNotMatch(&'static str),
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use glc_formula_core::{Formula, SElem};
    use glc_reducer::Strategy;

    use super::*;

    fn lit(n: &str) -> Formula {
        Formula::lit(n)
    }

    fn norm(f: &Formula) -> Formula {
        variant_normalize(f, &Strategy::LeftmostInnermost).expect("normalizes")
    }

    #[test]
    fn chain_recognition_follows_the_head_and_tail_grammar() {
        let cases = [
            ("plain chain", Formula::gtr(lit("a"), lit("b")), true),
            (
                "conjunctive head",
                Formula::gtr(Formula::and(lit("a"), lit("b")), lit("c")),
                true,
            ),
            (
                "left extension",
                Formula::gtr(Formula::gtr(lit("a"), lit("b")), lit("c")),
                true,
            ),
            (
                "chain tail with conjunctive head",
                Formula::gtr(
                    lit("x"),
                    Formula::gtr(Formula::and(lit("a"), lit("b")), lit("c")),
                ),
                true,
            ),
            (
                "deep head conjunction",
                Formula::gtr(
                    Formula::and(Formula::and(lit("a"), lit("b")), lit("c")),
                    lit("d"),
                ),
                true,
            ),
            (
                "conjunctive tail",
                Formula::gtr(lit("a"), Formula::and(lit("b"), lit("c"))),
                false,
            ),
            (
                "disjunctive head",
                Formula::gtr(Formula::or(lit("a"), lit("b")), lit("c")),
                false,
            ),
            ("constant head", Formula::gtr(Formula::top(), lit("a")), false),
            ("bare literal", lit("a"), false),
        ];
        for (name, f, expect) in cases {
            assert_eq!(is_unit_graph_chain(&f), expect, "{name}");
        }

        assert!(is_unit_graph_expansion(&Formula::or(
            Formula::gtr(Formula::and(lit("a"), lit("b")), lit("c")),
            lit("d"),
        )));
        assert!(!is_unit_graph_expansion(&Formula::gtr(
            lit("a"),
            Formula::and(lit("b"), lit("c")),
        )));
        assert!(!is_unit_graph_expansion(&Formula::not(lit("a"))));
        assert!(!is_unit_graph_expansion(&Formula::top()));
    }

    #[test]
    fn disjunctive_head_splits_over_every_nonempty_subset() {
        // (hat | brooch) > green fans out to the three ways the head can hold.
        let f = Formula::gtr(Formula::or(lit("hat"), lit("brooch")), lit("green"));
        let expect = Formula::or(
            Formula::or(
                Formula::gtr(lit("hat"), lit("green")),
                Formula::gtr(lit("brooch"), lit("green")),
            ),
            Formula::gtr(Formula::and(lit("hat"), lit("brooch")), lit("green")),
        );
        assert_eq!(norm(&f), expect);

        // Three disjuncts: 7 subsets ordered by size then lexicographically.
        let g = Formula::gtr(
            Formula::or(Formula::or(lit("a"), lit("b")), lit("c")),
            lit("d"),
        );
        let (nf, steps) =
            variant_normalize_traced(&g, &Strategy::LeftmostInnermost).expect("normalizes");
        assert_eq!(steps.len(), 1);
        assert_eq!(steps[0].rule, VariantRule::Gtr3);
        let chain =
            |head: Formula| Formula::gtr(head, lit("d"));
        let parts = vec![
            chain(lit("a")),
            chain(lit("b")),
            chain(lit("c")),
            chain(Formula::and(lit("a"), lit("b"))),
            chain(Formula::and(lit("a"), lit("c"))),
            chain(Formula::and(lit("b"), lit("c"))),
            chain(Formula::and(Formula::and(lit("a"), lit("b")), lit("c"))),
        ];
        let expect7 = parts
            .into_iter()
            .reduce(Formula::or)
            .expect("nonempty");
        assert_eq!(nf, expect7);
    }

    #[test]
    fn negated_chain_mirrors_its_head_shape() {
        // ~((a & (b & c)) > d) opens to the head's mirrored negations plus
        // the chain with a negated tail.
        let head = Formula::and(lit("a"), Formula::and(lit("b"), lit("c")));
        let f = Formula::not(Formula::gtr(head.clone(), lit("d")));
        let (_, steps) =
            variant_normalize_traced(&f, &Strategy::LeftmostInnermost).expect("normalizes");
        assert_eq!(steps[0].rule, VariantRule::Neg4);
        let expect_first = Formula::or(
            Formula::or(
                Formula::not(lit("a")),
                Formula::or(Formula::not(lit("b")), Formula::not(lit("c"))),
            ),
            Formula::gtr(head, Formula::not(lit("d"))),
        );
        assert_eq!(steps[0].after, expect_first);
    }

    #[test]
    fn negated_bundled_chain_normalizes_to_the_worked_answer() {
        // ~((hat & brooch) > green) -> hat' | brooch' | ((hat & brooch) > green')
        let head = Formula::and(lit("hat"), lit("brooch"));
        let f = Formula::not(Formula::gtr(head.clone(), lit("green")));
        let expect = Formula::or(
            Formula::or(Formula::comp("hat"), Formula::comp("brooch")),
            Formula::gtr(head, Formula::comp("green")),
        );
        assert_eq!(norm(&f), expect);
    }

    #[test]
    fn head_distribution_fires_in_place_as_the_first_step() {
        // (a & (b | c)) > d distributes the | up through the head.
        let f = Formula::gtr(
            Formula::and(lit("a"), Formula::or(lit("b"), lit("c"))),
            lit("d"),
        );
        let (_, steps) =
            variant_normalize_traced(&f, &Strategy::LeftmostInnermost).expect("normalizes");
        assert_eq!(steps[0].rule, VariantRule::ObjDist1);
        assert_eq!(
            steps[0].after,
            Formula::gtr(
                Formula::or(
                    Formula::and(lit("a"), lit("b")),
                    Formula::and(lit("a"), lit("c")),
                ),
                lit("d"),
            ),
        );

        let g = Formula::gtr(
            Formula::and(Formula::or(lit("a"), lit("b")), lit("c")),
            lit("d"),
        );
        let (_, steps2) =
            variant_normalize_traced(&g, &Strategy::LeftmostInnermost).expect("normalizes");
        assert_eq!(steps2[0].rule, VariantRule::ObjDist2);
        assert_eq!(
            steps2[0].after,
            Formula::gtr(
                Formula::or(
                    Formula::and(lit("a"), lit("c")),
                    Formula::and(lit("b"), lit("c")),
                ),
                lit("d"),
            ),
        );

        // Deeper in the head, the rewrite keeps the surrounding tree intact.
        let deep = Formula::gtr(
            Formula::and(
                Formula::and(lit("x"), Formula::or(lit("b"), lit("c"))),
                lit("y"),
            ),
            lit("d"),
        );
        let (_, steps3) =
            variant_normalize_traced(&deep, &Strategy::LeftmostInnermost).expect("normalizes");
        assert_eq!(steps3[0].rule, VariantRule::ObjDist1);
        assert_eq!(
            steps3[0].after,
            Formula::gtr(
                Formula::and(
                    Formula::or(
                        Formula::and(lit("x"), lit("b")),
                        Formula::and(lit("x"), lit("c")),
                    ),
                    lit("y"),
                ),
                lit("d"),
            ),
        );
    }

    #[test]
    fn junction_tails_split_pointwise() {
        let f = Formula::gtr(lit("a"), Formula::and(lit("b"), lit("c")));
        assert_eq!(
            norm(&f),
            Formula::and(
                Formula::gtr(lit("a"), lit("b")),
                Formula::gtr(lit("a"), lit("c")),
            ),
        );
        let g = Formula::gtr(lit("a"), Formula::or(lit("b"), lit("c")));
        assert_eq!(
            norm(&g),
            Formula::or(
                Formula::gtr(lit("a"), lit("b")),
                Formula::gtr(lit("a"), lit("c")),
            ),
        );
    }

    #[test]
    fn normalization_rejects_constants() {
        let f = Formula::or(lit("a"), Formula::top());
        assert_eq!(
            variant_normalize(&f, &Strategy::LeftmostInnermost),
            Err(VariantError::ConstantsUnsupported),
        );
    }

    #[test]
    fn one_pass_complementation_matches_the_worked_cases() {
        assert_eq!(recursive_reduce2(&lit("a")), Ok(Formula::comp("a")));

        let chain = Formula::gtr(lit("a"), lit("b"));
        assert_eq!(
            recursive_reduce2(&chain),
            Ok(Formula::or(
                Formula::comp("a"),
                Formula::gtr(lit("a"), Formula::comp("b")),
            )),
        );

        let bundled = Formula::gtr(Formula::and(lit("a"), lit("b")), lit("c"));
        assert_eq!(
            recursive_reduce2(&bundled),
            Ok(Formula::or(
                Formula::or(Formula::comp("a"), Formula::comp("b")),
                Formula::gtr(
                    Formula::and(lit("a"), lit("b")),
                    Formula::comp("c"),
                ),
            )),
        );

        // Right-nested chains distribute the shared head over the rewritten
        // tail's disjunction.
        let nested = Formula::gtr(lit("a"), Formula::gtr(lit("b"), lit("c")));
        assert_eq!(
            recursive_reduce2(&nested),
            Ok(Formula::or(
                Formula::comp("a"),
                Formula::or(
                    Formula::gtr(lit("a"), Formula::comp("b")),
                    Formula::gtr(lit("a"), Formula::gtr(lit("b"), Formula::comp("c"))),
                ),
            )),
        );

        assert_eq!(
            recursive_reduce2(&Formula::gtr(lit("a"), Formula::and(lit("b"), lit("c")))),
            Err(VariantError::NotUnitGraphExpansion),
        );
    }

    #[test]
    fn complementation_agrees_with_normalizing_the_negation() {
        let samples = [
            lit("a"),
            Formula::gtr(lit("a"), lit("b")),
            Formula::gtr(Formula::and(lit("a"), lit("b")), lit("c")),
            Formula::gtr(lit("x"), Formula::gtr(Formula::and(lit("a"), lit("b")), lit("c"))),
            Formula::or(
                Formula::and(lit("a"), Formula::gtr(lit("b"), lit("c"))),
                Formula::comp("d"),
            ),
        ];
        for f in samples {
            let direct = recursive_reduce2(&f).expect("expansion input");
            assert_eq!(direct, norm(&Formula::not(f.clone())), "input {f:?}");
        }
    }

    #[test]
    fn terms_compress_to_the_worked_canonical_forms() {
        // map(a) is the one-element sequence holding the literal.
        assert_eq!(
            map_term(&lit("a")),
            GraphTerm::Seq(vec![GraphTerm::Lit(SElem::lit("a"))]),
        );

        // Nested sequences splice.
        let doubled = GraphTerm::Seq(vec![GraphTerm::Seq(vec![GraphTerm::Lit(SElem::lit(
            "t",
        ))])]);
        assert_eq!(
            compress(&doubled),
            GraphTerm::Seq(vec![GraphTerm::Lit(SElem::lit("t"))]),
        );

        // (a & b) > c: the bundled head stays a set, the tail literal joins
        // the sequence bare.
        let bundled = Formula::gtr(Formula::and(lit("a"), lit("b")), lit("c"));
        let seq_a = GraphTerm::Seq(vec![GraphTerm::Lit(SElem::lit("a"))]);
        let seq_b = GraphTerm::Seq(vec![GraphTerm::Lit(SElem::lit("b"))]);
        let expect = GraphTerm::Seq(vec![
            GraphTerm::Set(vec![seq_a.clone(), seq_b.clone()]),
            GraphTerm::Lit(SElem::lit("c")),
        ]);
        assert_eq!(compress(&map_term(&bundled)), expect);

        // Set members sort, deduplicate, and a one-member set collapses.
        let dup = GraphTerm::Set(vec![seq_b.clone(), seq_a.clone(), seq_b.clone()]);
        assert_eq!(compress(&dup), GraphTerm::Set(vec![seq_a.clone(), seq_b]));
        let single = GraphTerm::Set(vec![seq_a.clone(), seq_a.clone()]);
        assert_eq!(compress(&single), seq_a);

        // Conjunction grouping in heads is invisible after compression.
        let left = Formula::gtr(
            Formula::and(Formula::and(lit("a"), lit("b")), lit("c")),
            lit("d"),
        );
        let right = Formula::gtr(
            Formula::and(lit("a"), Formula::and(lit("b"), lit("c"))),
            lit("d"),
        );
        assert_eq!(compress(&map_term(&left)), compress(&map_term(&right)));

        // So is chain association.
        let l = Formula::gtr(Formula::gtr(lit("a"), lit("b")), lit("c"));
        let r = Formula::gtr(lit("a"), Formula::gtr(lit("b"), lit("c")));
        assert_eq!(compress(&map_term(&l)), compress(&map_term(&r)));

        assert_eq!(
            render_term(&expect),
            "seq[set{seq[a], seq[b]}, c]",
        );
    }

    #[test]
    fn compress_is_idempotent_on_worked_terms() {
        let bundled = Formula::gtr(
            Formula::and(
                Formula::gtr(lit("a"), lit("b")),
                Formula::and(lit("c"), lit("c")),
            ),
            lit("d"),
        );
        let once = compress(&map_term(&bundled));
        assert_eq!(compress(&once), once);
    }

    fn frame_of(points: &[(&[GraphTerm], &str, bool)]) -> VariantFrame {
        let mut bits = BTreeMap::new();
        for (ctx, pair, bit) in points {
            bits.insert((ctx.to_vec(), pair.to_string()), *bit);
        }
        VariantFrame::new(bits)
    }

    #[test]
    fn evaluation_reads_prefix_contexts() {
        // (a & b) > c reads a and b at the empty context and c in the
        // context of the bundled head.
        let bundled = Formula::gtr(Formula::and(lit("a"), lit("b")), lit("c"));
        let head_term = GraphTerm::Set(vec![
            GraphTerm::Seq(vec![GraphTerm::Lit(SElem::lit("a"))]),
            GraphTerm::Seq(vec![GraphTerm::Lit(SElem::lit("b"))]),
        ]);
        let points = query_points_of_expansion(&bundled);
        let expect: Vec<(Context, String)> = vec![
            (vec![], "a".to_string()),
            (vec![], "b".to_string()),
            (vec![head_term.clone()], "c".to_string()),
        ];
        assert_eq!(points.into_iter().collect::<Vec<_>>(), expect);

        let frame = frame_of(&[
            (&[], "a", true),
            (&[], "b", true),
            (std::slice::from_ref(&head_term), "c", true),
        ]);
        assert_eq!(variant_evaluate(&frame, &bundled), Ok(1));

        // Flipping the bundled bit kills the chain but not the conjuncts.
        let frame0 = frame_of(&[
            (&[], "a", true),
            (&[], "b", true),
            (std::slice::from_ref(&head_term), "c", false),
        ]);
        assert_eq!(variant_evaluate(&frame0, &bundled), Ok(0));

        // A complemented literal reads the opposite bit.
        let comp_chain = Formula::gtr(Formula::and(lit("a"), lit("b")), Formula::comp("c"));
        assert_eq!(variant_evaluate(&frame0, &comp_chain), Ok(1));

        // Bare literals read the empty context.
        assert_eq!(variant_evaluate(&frame, &lit("a")), Ok(1));

        // Missing points are an error, not a default.
        let sparse = frame_of(&[(&[], "a", true)]);
        assert!(matches!(
            variant_evaluate(&sparse, &bundled),
            Err(VariantError::MissingQueryPoint { .. }),
        ));
    }

    #[test]
    fn bundled_heads_refuse_pointwise_distribution() {
        // The worked witness: both plain chains hold, the bundled chain does
        // not, so (hat > green) & (brooch > green) is strictly weaker than
        // (hat & brooch) > green.
        let hat = GraphTerm::Lit(SElem::lit("hat"));
        let brooch = GraphTerm::Lit(SElem::lit("brooch"));
        let bundle = GraphTerm::Set(vec![
            GraphTerm::Seq(vec![brooch.clone()]),
            GraphTerm::Seq(vec![hat.clone()]),
        ]);
        let bundle = compress(&bundle);
        let frame = frame_of(&[
            (&[], "hat", true),
            (&[], "brooch", true),
            (std::slice::from_ref(&hat), "green", true),
            (std::slice::from_ref(&brooch), "green", true),
            (std::slice::from_ref(&bundle), "green", false),
        ]);

        let pointwise = Formula::and(
            Formula::gtr(lit("hat"), lit("green")),
            Formula::gtr(lit("brooch"), lit("green")),
        );
        let bundled = Formula::gtr(Formula::and(lit("hat"), lit("brooch")), lit("green"));
        assert_eq!(variant_evaluate(&frame, &pointwise), Ok(1));
        assert_eq!(variant_evaluate(&frame, &bundled), Ok(0));

        // And the oracle agrees the two sides are not interchangeable.
        assert_eq!(
            variant_value_equal(&pointwise, &bundled, DEFAULT_VARIANT_BUDGET_BITS),
            Ok(false),
        );
        let biimp = Formula::or(
            Formula::and(pointwise.clone(), bundled.clone()),
            Formula::and(Formula::not(pointwise), Formula::not(bundled)),
        );
        assert_eq!(variant_brute_valid(&biimp), Ok(0));
    }

    #[test]
    fn oracle_decides_small_verdicts() {
        assert_eq!(
            variant_brute_valid(&Formula::or(lit("a"), Formula::comp("a"))),
            Ok(1),
        );
        assert_eq!(
            variant_brute_sat(&Formula::and(lit("a"), Formula::comp("a"))),
            Ok(0),
        );
        assert_eq!(variant_brute_valid(&lit("a")), Ok(0));
        assert_eq!(variant_brute_sat(&lit("a")), Ok(1));

        // The head-splitting rule preserves values.
        let f = Formula::gtr(Formula::or(lit("hat"), lit("brooch")), lit("green"));
        assert_eq!(
            variant_value_equal(&f, &norm(&f), DEFAULT_VARIANT_BUDGET_BITS),
            Ok(true),
        );

        // Query-point counting drives the budget.
        let wide = Formula::gtr(
            Formula::or(Formula::or(lit("a"), lit("b")), lit("c")),
            lit("d"),
        );
        let pts = variant_query_points(&wide).expect("normalizes");
        assert!(pts.len() > 8, "subset heads multiply contexts: {}", pts.len());
        let err = variant_brute_valid_counted(&wide, 8).unwrap_err();
        assert_eq!(
            err,
            VariantError::BudgetExceeded {
                bits_needed: pts.len() as u64,
                budget_bits: 8,
            },
        );
    }

    #[test]
    fn json_dumps_use_the_ascii_term_notation() {
        let bundled = Formula::gtr(Formula::and(lit("a"), lit("b")), lit("c"));
        let points = query_points_of_expansion(&bundled);
        let json = query_points_json(&points);
        assert_eq!(
            json,
            serde_json::json!([
                {"context": [], "pair": "a"},
                {"context": [], "pair": "b"},
                {"context": ["set{seq[a], seq[b]}"], "pair": "c"},
            ]),
        );

        let frame = frame_of(&[(&[], "a", true)]);
        assert_eq!(
            frame.to_json(),
            serde_json::json!({"points": [{"context": [], "pair": "a", "bit": 1}]}),
        );
    }
}
