//! Embedded golden vectors behind `glc selftest`.
//!
//! Every vector re-checks one of the worked results the toolkit is built
//! around — closed-form sizes, printed counter lines, landmark verdicts,
//! the divergence witness, the graph-calculus worked rewrites, and the
//! command-line exit-code contract. Each one is small enough to run on
//! every invocation; a failure names the vector and prints what diverged.

use std::collections::BTreeMap;

use glc_decider::{
    count_distinct, rewrite_strict, sat_check, satisfiable, squash, valid_paper_strict,
    valid_sound, valid_sound_counted, LevelInterp,
};
use glc_formula_core::{
    chain_from_elems, f_len, f_size, generate, is_unit_chain, is_unit_chain_expansion,
    max_object_level, neg_max, occurrence_counts, Dir, Formula, GenConfig, SElem,
};
use glc_measure_lab::{
    builtin_pairs, check_pair, pair_sizes, render_counters, render_size, run_suite, Calculus,
};
use glc_parser_io::{
    parse_infix, parse_prefix, parse_prefix_with, print_infix, print_prefix,
};
use glc_reducer::{
    negate_normalize, normalize, recursive_reduce, redexes, step, Rule, Strategy,
};
use glc_semantics::{
    brute_sat, brute_valid, brute_valid_counted, evaluate, evaluate_full, frame_space,
    value_equal, Frame, DEFAULT_BUDGET_BITS,
};
use glc_graph_variant::{
    compress, is_unit_graph_chain, map_term, query_points_of_expansion, recursive_reduce2,
    variant_evaluate, variant_normalize, variant_step, variant_value_equal, Context, GraphTerm,
    VariantFrame, VariantRule, DEFAULT_VARIANT_BUDGET_BITS,
};

type Check = fn() -> Result<(), String>;

/// The full vector list: `(name, check)` pairs, run in order.
pub(crate) fn vectors() -> Vec<(&'static str, Check)> {
    vec![
        ("complement_swaps_constants_and_pairs", complement_swaps_constants_and_pairs),
        ("formula_length_counts_symbols", formula_length_counts_symbols),
        ("negation_nesting_tracks_the_deepest_stack", negation_nesting_tracks_the_deepest_stack),
        ("size_recursion_matches_the_closed_forms", size_recursion_matches_the_closed_forms),
        ("occurrence_counters_print_as_inverses", occurrence_counters_print_as_inverses),
        ("unit_chain_predicates_accept_the_normal_shapes", unit_chain_predicates_accept_the_normal_shapes),
        ("object_levels_count_chain_positions", object_levels_count_chain_positions),
        ("generator_is_deterministic_and_respects_its_pool", generator_is_deterministic_and_respects_its_pool),
        ("infix_parser_follows_the_precedence_rules", infix_parser_follows_the_precedence_rules),
        ("prefix_parser_reads_the_listing_grammar", prefix_parser_reads_the_listing_grammar),
        ("printers_round_trip_both_syntaxes", printers_round_trip_both_syntaxes),
        ("redex_enumeration_respects_rule_guards", redex_enumeration_respects_rule_guards),
        ("single_steps_match_the_worked_rewrites", single_steps_match_the_worked_rewrites),
        ("normalization_reaches_the_worked_normal_forms", normalization_reaches_the_worked_normal_forms),
        ("chain_complementation_expands_level_by_level", chain_complementation_expands_level_by_level),
        ("negating_a_normal_form_equals_direct_complementation", negating_a_normal_form_equals_direct_complementation),
        ("frame_lookups_read_pair_bits", frame_lookups_read_pair_bits),
        ("chain_valuation_conjoins_the_levels", chain_valuation_conjoins_the_levels),
        ("expansion_valuation_handles_constants", expansion_valuation_handles_constants),
        ("full_valuation_normalizes_first", full_valuation_normalizes_first),
        ("frame_spaces_have_the_predicted_sizes", frame_spaces_have_the_predicted_sizes),
        ("oracle_verdicts_on_landmark_formulas", oracle_verdicts_on_landmark_formulas),
        ("level_truncation_keeps_lower_levels", level_truncation_keeps_lower_levels),
        ("distinct_pair_counting_ignores_polarity", distinct_pair_counting_ignores_polarity),
        ("level_assignments_falsify_what_they_should", level_assignments_falsify_what_they_should),
        ("verbatim_between_level_rewrite_follows_the_listing", verbatim_between_level_rewrite_follows_the_listing),
        ("verbatim_procedure_keeps_its_recorded_divergence", verbatim_procedure_keeps_its_recorded_divergence),
        ("corrected_procedure_matches_the_oracle_on_landmarks", corrected_procedure_matches_the_oracle_on_landmarks),
        ("satisfiability_landmarks_hold", satisfiability_landmarks_hold),
        ("graph_chain_grammar_accepts_bundled_heads", graph_chain_grammar_accepts_bundled_heads),
        ("graph_rewrites_match_the_worked_examples", graph_rewrites_match_the_worked_examples),
        ("graph_complementation_matches_the_worked_cases", graph_complementation_matches_the_worked_cases),
        ("terms_compress_to_canonical_forms", terms_compress_to_canonical_forms),
        ("graph_valuation_reads_prefix_contexts", graph_valuation_reads_prefix_contexts),
        ("bundled_heads_defeat_pointwise_distribution", bundled_heads_defeat_pointwise_distribution),
        ("inequality_lab_replicates_its_goldens", inequality_lab_replicates_its_goldens),
        ("command_line_goldens_keep_their_exit_codes", command_line_goldens_keep_their_exit_codes),
    ]
}

// ---------------------------------------------------------------------------
// Small assertion helpers
// ---------------------------------------------------------------------------

fn eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, want {want:?}"))
    }
}

fn ensure(cond: bool, what: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

fn lit(name: &str) -> Formula {
    Formula::lit(name)
}

fn comp(name: &str) -> Formula {
    Formula::comp(name)
}

fn pf(src: &str) -> Result<Formula, String> {
    parse_infix(src).map_err(|e| format!("cannot parse `{src}`: {e}"))
}

// ---------------------------------------------------------------------------
// Formula core
// ---------------------------------------------------------------------------

fn complement_swaps_constants_and_pairs() -> Result<(), String> {
    eq("top flips", SElem::Top.complement(), SElem::Bot)?;
    eq("bot flips", SElem::Bot.complement(), SElem::Top)?;
    eq("pair forward", SElem::lit("a").complement(), SElem::comp("a"))?;
    eq("pair back", SElem::comp("a").complement(), SElem::lit("a"))
}

fn formula_length_counts_symbols() -> Result<(), String> {
    eq("atom", f_len(&lit("a")), 1)?;
    eq("conjunction", f_len(&Formula::and(lit("a"), lit("b"))), 3)?;
    eq(
        "negated chain",
        f_len(&Formula::not(Formula::gtr(lit("a"), lit("b")))),
        4,
    )
}

fn negation_nesting_tracks_the_deepest_stack() -> Result<(), String> {
    eq("atom", neg_max(&lit("a")), 0)?;
    eq("double", neg_max(&Formula::not(Formula::not(lit("a")))), 2)?;
    let mixed = Formula::and(
        Formula::not(lit("a")),
        Formula::not(Formula::not(lit("b"))),
    );
    eq("max over branches", neg_max(&mixed), 2)
}

fn size_recursion_matches_the_closed_forms() -> Result<(), String> {
    eq(
        "negated literal at the replication entry",
        render_size(&f_size(1, 1, false, &Formula::not(lit("a")))),
        "1/2".to_string(),
    )?;
    eq(
        "bare literal at the replication entry",
        render_size(&f_size(1, 1, false, &lit("a"))),
        "1/4".to_string(),
    )?;
    eq(
        "two-element chain at the canonical entry",
        render_size(&f_size(0, 0, true, &Formula::gtr(lit("a"), lit("b")))),
        "2/1".to_string(),
    )
}

fn occurrence_counters_print_as_inverses() -> Result<(), String> {
    eq(
        "negated conjunction",
        render_counters(&Formula::not(Formula::and(lit("a"), lit("b")))),
        "1/2,1/1,1/2".to_string(),
    )?;
    eq("atom", render_counters(&lit("a")), "1/1,1/1,1/1".to_string())?;
    let left_chain = Formula::gtr(Formula::gtr(lit("a"), lit("b")), lit("c"));
    let counts = occurrence_counts(&left_chain);
    eq(
        "left-leaning chain counts",
        (counts.neg, counts.gtr, counts.and),
        (0, 2, 0),
    )
}

fn unit_chain_predicates_accept_the_normal_shapes() -> Result<(), String> {
    ensure(
        is_unit_chain(&Formula::gtr(lit("a"), Formula::gtr(lit("b"), lit("c")))),
        "right-nested atom chain should be a unit chain",
    )?;
    ensure(
        !is_unit_chain(&Formula::gtr(Formula::and(lit("a"), lit("b")), lit("c"))),
        "a bundled head is not a unit chain",
    )?;
    ensure(
        is_unit_chain_expansion(&Formula::or(comp("a"), Formula::gtr(lit("a"), comp("b")))),
        "disjunction of unit chains should be an expansion",
    )
}

fn object_levels_count_chain_positions() -> Result<(), String> {
    let level = |f: &Formula| max_object_level(f).map_err(|e| e.to_string());
    eq("no chains", level(&Formula::or(lit("a"), lit("b")))?, 0)?;
    eq(
        "three elements",
        level(&Formula::gtr(lit("a"), Formula::gtr(lit("b"), lit("c"))))?,
        2,
    )?;
    eq(
        "chain beside an atom",
        level(&Formula::and(Formula::gtr(lit("a"), lit("b")), lit("c")))?,
        1,
    )
}

fn generator_is_deterministic_and_respects_its_pool() -> Result<(), String> {
    fn has_constants(f: &Formula) -> bool {
        match f {
            Formula::Atom(SElem::Top) | Formula::Atom(SElem::Bot) => true,
            Formula::Atom(_) => false,
            Formula::Not(c) => has_constants(c),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Gtr(l, r) => {
                has_constants(l) || has_constants(r)
            }
        }
    }
    let tiny = generate(1, &GenConfig::new(1, 1, true));
    eq("unit budget forces a leaf", f_len(&tiny), 1)?;
    let cfg = GenConfig::new(8, 3, false);
    eq("same seed, same formula", generate(7, &cfg), generate(7, &cfg))?;
    ensure(
        !has_constants(&generate(7, &cfg)),
        "constant-free configuration must not emit constants",
    )
}

// ---------------------------------------------------------------------------
// Parsing and printing
// ---------------------------------------------------------------------------

fn infix_parser_follows_the_precedence_rules() -> Result<(), String> {
    eq(
        "negation binds the attribute",
        pf("hat > ~yellow")?,
        Formula::gtr(lit("hat"), Formula::not(lit("yellow"))),
    )?;
    ensure(
        parse_infix("a & b | c").is_err(),
        "mixing & and | without parentheses must fail",
    )?;
    eq(
        "chains associate to the right",
        pf("a > b > c")?,
        Formula::gtr(lit("a"), Formula::gtr(lit("b"), lit("c"))),
    )
}

fn prefix_parser_reads_the_listing_grammar() -> Result<(), String> {
    eq(
        "bare negation",
        parse_prefix("!s").map_err(|e| e.to_string())?,
        Formula::not(lit("s")),
    )?;
    let mut subst = BTreeMap::new();
    subst.insert('A', lit("a"));
    subst.insert('B', lit("b"));
    subst.insert('C', lit("c"));
    eq(
        "placeholder conjunction",
        parse_prefix_with("*(A)(B)", &subst).map_err(|e| e.to_string())?,
        Formula::and(lit("a"), lit("b")),
    )?;
    eq(
        "left-leaning chain template",
        parse_prefix_with("%(%(A)(B))(C)", &subst).map_err(|e| e.to_string())?,
        Formula::gtr(Formula::gtr(lit("a"), lit("b")), lit("c")),
    )
}

fn printers_round_trip_both_syntaxes() -> Result<(), String> {
    eq(
        "chain with negated attribute",
        print_infix(&Formula::gtr(lit("a"), Formula::not(lit("b")))),
        "a > ~b".to_string(),
    )?;
    eq(
        "prefix negated conjunction",
        print_prefix(&Formula::not(Formula::and(lit("a"), lit("b"))))
            .map_err(|e| e.to_string())?,
        "!*(a)(b)".to_string(),
    )?;
    eq("complement mark", print_infix(&comp("a")), "a'".to_string())
}

// ---------------------------------------------------------------------------
// The base rewrite system
// ---------------------------------------------------------------------------

fn redex_enumeration_respects_rule_guards() -> Result<(), String> {
    eq(
        "negated conjunction has one root redex",
        redexes(&Formula::not(Formula::and(lit("a"), lit("b")))),
        vec![(vec![], Rule::Neg2)],
    )?;
    ensure(
        redexes(&Formula::or(comp("a"), Formula::gtr(lit("a"), comp("b")))).is_empty(),
        "an expansion has no redexes",
    )?;
    eq(
        "bundled head fires inside the negation first",
        redexes(&Formula::not(Formula::gtr(
            Formula::and(lit("a"), lit("b")),
            lit("c"),
        ))),
        vec![(vec![Dir::Child], Rule::Gtr2)],
    )
}

fn single_steps_match_the_worked_rewrites() -> Result<(), String> {
    let run = |f: &Formula, rule: Rule| -> Result<Formula, String> {
        step(f, &[], rule)
            .map(|(after, _)| after)
            .map_err(|e| e.to_string())
    };
    eq(
        "negated chain opens into the two readings",
        run(&Formula::not(Formula::gtr(lit("hat"), lit("yellow"))), Rule::Neg4)?,
        Formula::or(
            comp("hat"),
            Formula::gtr(lit("hat"), Formula::not(lit("yellow"))),
        ),
    )?;
    eq(
        "conjunctive object splits pointwise",
        run(
            &Formula::gtr(Formula::and(lit("hat"), lit("shirt")), lit("yellow")),
            Rule::Gtr2,
        )?,
        Formula::and(
            Formula::gtr(lit("hat"), lit("yellow")),
            Formula::gtr(lit("shirt"), lit("yellow")),
        ),
    )?;
    eq(
        "nested object unrolls into the three readings",
        run(
            &Formula::gtr(Formula::gtr(lit("hat"), lit("brooch")), lit("green")),
            Rule::Gtr1,
        )?,
        Formula::and(
            Formula::gtr(lit("hat"), lit("green")),
            Formula::or(
                Formula::gtr(lit("hat"), lit("brooch")),
                Formula::gtr(lit("hat"), Formula::gtr(lit("brooch"), lit("green"))),
            ),
        ),
    )
}

fn normalization_reaches_the_worked_normal_forms() -> Result<(), String> {
    let norm = |f: &Formula| normalize(f, &Strategy::LeftmostInnermost);
    eq(
        "negated conjunction",
        norm(&Formula::not(Formula::and(lit("a"), lit("b")))),
        Formula::or(comp("a"), comp("b")),
    )?;
    eq(
        "negated chain",
        norm(&Formula::not(Formula::gtr(lit("hat"), lit("yellow")))),
        Formula::or(
            comp("hat"),
            Formula::gtr(lit("hat"), comp("yellow")),
        ),
    )
}

fn chain_complementation_expands_level_by_level() -> Result<(), String> {
    let rr = |f: &Formula| recursive_reduce(f).map_err(|e| e.to_string());
    eq("atom", rr(&lit("a"))?, comp("a"))?;
    eq(
        "two-element chain",
        rr(&Formula::gtr(lit("a"), lit("b")))?,
        Formula::or(comp("a"), Formula::gtr(lit("a"), comp("b"))),
    )?;
    // Three elements: the expansion walks every prefix; associations may
    // differ, so the check is value equality against the spelled-out form.
    let chain3 = Formula::gtr(lit("a"), Formula::gtr(lit("b"), lit("c")));
    let spelled = Formula::or(
        comp("a"),
        Formula::or(
            Formula::gtr(lit("a"), comp("b")),
            Formula::gtr(lit("a"), Formula::gtr(lit("b"), comp("c"))),
        ),
    );
    let equal = value_equal(&rr(&chain3)?, &spelled, DEFAULT_BUDGET_BITS)
        .map_err(|e| e.to_string())?;
    ensure(equal, "three-element complement must equal the prefix expansion")
}

fn negating_a_normal_form_equals_direct_complementation() -> Result<(), String> {
    let samples = [
        lit("a"),
        Formula::gtr(lit("a"), lit("b")),
        Formula::gtr(lit("a"), Formula::gtr(lit("b"), lit("c"))),
        Formula::or(comp("a"), Formula::gtr(lit("a"), comp("b"))),
    ];
    for f in &samples {
        let direct = recursive_reduce(f).map_err(|e| e.to_string())?;
        eq(
            &format!("negation route for {}", print_infix(f)),
            negate_normalize(f),
            direct,
        )?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Frames, evaluation, oracles
// ---------------------------------------------------------------------------

fn level(bits: &[(&str, bool)]) -> BTreeMap<String, bool> {
    bits.iter().map(|(n, b)| (n.to_string(), *b)).collect()
}

fn frame_lookups_read_pair_bits() -> Result<(), String> {
    let f = Frame::new(vec![level(&[("a", true)])]);
    eq("plain literal", f.local_i(0, &SElem::lit("a")), 1)?;
    eq("complement flips", f.local_i(0, &SElem::comp("a")), 0)?;
    eq("always-true constant", f.local_i(0, &SElem::Top), 1)?;
    eq("always-false constant", f.local_i(0, &SElem::Bot), 0)
}

fn chain_valuation_conjoins_the_levels() -> Result<(), String> {
    let ones = Frame::new(vec![level(&[("a", true), ("b", true)]); 2]);
    eq(
        "all-ones chain",
        ones.global_j(&[SElem::lit("a"), SElem::lit("b")])
            .map_err(|e| e.to_string())?,
        1,
    )?;
    let broken = Frame::new(vec![level(&[("hat", true)]), level(&[("yellow", false)])]);
    eq(
        "level one breaks the chain",
        broken
            .global_j(&[SElem::lit("hat"), SElem::lit("yellow")])
            .map_err(|e| e.to_string())?,
        0,
    )?;
    eq(
        "a bottom head never holds",
        ones.global_j(&[SElem::Bot, SElem::lit("a")])
            .map_err(|e| e.to_string())?,
        0,
    )
}

fn expansion_valuation_handles_constants() -> Result<(), String> {
    let f = Frame::new(vec![level(&[("hat", true)]), level(&[])]);
    let hat_top = Formula::gtr(lit("hat"), Formula::top());
    eq(
        "a top attribute is the bare object claim",
        evaluate(&f, &hat_top).map_err(|e| e.to_string())?,
        evaluate(&f, &lit("hat")).map_err(|e| e.to_string())?,
    )?;
    let bot_bot = Formula::gtr(Formula::bot(), Formula::bot());
    for fr in frame_space(&bot_bot) {
        eq(
            "nothing attributed to nothing",
            evaluate(&fr, &bot_bot).map_err(|e| e.to_string())?,
            0,
        )?;
    }
    let tauto = Formula::or(lit("a"), comp("a"));
    for fr in frame_space(&tauto) {
        eq(
            "a pair always covers both cases",
            evaluate(&fr, &tauto).map_err(|e| e.to_string())?,
            1,
        )?;
    }
    Ok(())
}

fn full_valuation_normalizes_first() -> Result<(), String> {
    let f = Formula::gtr(Formula::and(lit("hat"), lit("shirt")), lit("yellow"));
    let doubled = Formula::not(Formula::not(f.clone()));
    for fr in frame_space(&f) {
        eq(
            "double negation is invisible",
            evaluate_full(&fr, &doubled).map_err(|e| e.to_string())?,
            evaluate_full(&fr, &f).map_err(|e| e.to_string())?,
        )?;
    }
    let chain = Formula::gtr(lit("a"), lit("b"));
    let negated = Formula::not(chain.clone());
    for fr in frame_space(&chain) {
        let expect = u8::from(
            fr.local_i(0, &SElem::lit("a")) == 0 || fr.local_i(1, &SElem::lit("b")) == 0,
        );
        eq(
            "negated chain truth table",
            evaluate_full(&fr, &negated).map_err(|e| e.to_string())?,
            expect,
        )?;
        eq(
            "a top conjunct is invisible",
            evaluate_full(&fr, &Formula::and(Formula::top(), chain.clone()))
                .map_err(|e| e.to_string())?,
            evaluate_full(&fr, &chain).map_err(|e| e.to_string())?,
        )?;
    }
    Ok(())
}

fn frame_spaces_have_the_predicted_sizes() -> Result<(), String> {
    eq(
        "one pair, one level",
        frame_space(&lit("a")).into_iter().count(),
        2,
    )?;
    eq(
        "two pairs over two levels",
        frame_space(&Formula::gtr(lit("a"), lit("b"))).into_iter().count(),
        16,
    )?;
    let tauto = Formula::or(lit("a"), comp("a"));
    let frames: Vec<Frame> = frame_space(&tauto).into_iter().collect();
    eq("complement pair needs two frames", frames.len(), 2)?;
    for fr in &frames {
        eq(
            "tautology on every frame",
            evaluate_full(fr, &tauto).map_err(|e| e.to_string())?,
            1,
        )?;
    }
    Ok(())
}

fn mutual_implication(f1: &Formula, f2: &Formula) -> Formula {
    Formula::and(
        Formula::or(Formula::not(f1.clone()), f2.clone()),
        Formula::or(Formula::not(f2.clone()), f1.clone()),
    )
}

fn oracle_verdicts_on_landmark_formulas() -> Result<(), String> {
    eq(
        "complement disjunction is valid",
        brute_valid(&Formula::or(lit("a"), comp("a"))).map_err(|e| e.to_string())?,
        1,
    )?;
    eq(
        "attributing to nothingness is unsatisfiable",
        brute_sat(&Formula::gtr(Formula::bot(), lit("a"))).map_err(|e| e.to_string())?,
        0,
    )?;
    let bundled = Formula::gtr(lit("hat"), Formula::and(lit("green"), lit("brooch")));
    let pointwise = Formula::and(
        Formula::gtr(lit("hat"), lit("green")),
        Formula::gtr(lit("hat"), lit("brooch")),
    );
    eq(
        "conjunctive attributes split pointwise",
        brute_valid(&mutual_implication(&bundled, &pointwise)).map_err(|e| e.to_string())?,
        1,
    )
}

// ---------------------------------------------------------------------------
// Level-wise decision procedures
// ---------------------------------------------------------------------------

fn level_truncation_keeps_lower_levels() -> Result<(), String> {
    let sq = |f: &Formula, l: u64| squash(f, l).map_err(|e| e.to_string());
    let f = Formula::or(
        lit("a"),
        Formula::gtr(lit("b"), Formula::gtr(lit("c"), lit("d"))),
    );
    eq("cut at the head", sq(&f, 0)?, Formula::or(lit("a"), lit("b")))?;
    eq(
        "cut after one link",
        sq(&f, 1)?,
        Formula::or(lit("a"), Formula::gtr(lit("b"), lit("c"))),
    )?;
    let flat = Formula::or(lit("a"), lit("b"));
    eq("nothing to cut", sq(&flat, 0)?, flat.clone())
}

fn distinct_pair_counting_ignores_polarity() -> Result<(), String> {
    eq(
        "a pair and its complement count once",
        count_distinct(&Formula::and(Formula::and(lit("a"), comp("a")), lit("b"))),
        2,
    )?;
    eq(
        "constants are not pairs",
        count_distinct(&Formula::or(Formula::top(), Formula::bot())),
        0,
    )?;
    eq(
        "repeats along a chain count once",
        count_distinct(&Formula::gtr(lit("a"), Formula::gtr(lit("b"), lit("a")))),
        2,
    )
}

fn level_assignments_falsify_what_they_should() -> Result<(), String> {
    let zero = LevelInterp::new(0, level(&[("a", false)]));
    ensure(sat_check(&lit("a"), &zero), "a is falsified when its bit is 0")?;
    let tauto = Formula::or(lit("a"), comp("a"));
    ensure(
        !sat_check(&tauto, &zero),
        "a complement pair survives the zero assignment",
    )?;
    ensure(
        !sat_check(&tauto, &LevelInterp::new(0, level(&[("a", true)]))),
        "a complement pair survives the one assignment",
    )?;
    ensure(
        !sat_check(
            &Formula::or(lit("a"), lit("b")),
            &LevelInterp::new(0, level(&[("a", false), ("b", true)])),
        ),
        "one live disjunct keeps the formula alive",
    )
}

fn verbatim_between_level_rewrite_follows_the_listing() -> Result<(), String> {
    let f = Formula::or(lit("a"), Formula::gtr(lit("b"), lit("c")));
    let live = LevelInterp::new(0, level(&[("a", false), ("b", true)]));
    eq(
        "a held head is replaced by the constant",
        rewrite_strict(&f, &live, 0).map_err(|e| e.to_string())?,
        Some(Formula::gtr(Formula::top(), lit("c"))),
    )?;
    let dead = LevelInterp::new(0, level(&[("a", false), ("b", false)]));
    eq(
        "a refuted head deletes the chain",
        rewrite_strict(&f, &dead, 0).map_err(|e| e.to_string())?,
        None,
    )?;
    let bare = Formula::gtr(lit("a"), lit("b"));
    eq(
        "head replacement on a bare chain",
        rewrite_strict(&bare, &LevelInterp::new(0, level(&[("a", true)])), 0)
            .map_err(|e| e.to_string())?,
        Some(Formula::gtr(Formula::top(), lit("b"))),
    )
}

fn verbatim_procedure_keeps_its_recorded_divergence() -> Result<(), String> {
    let strict = |f: &Formula| valid_paper_strict(f).map_err(|e| e.to_string());
    eq("a bare chain is invalid", strict(&Formula::gtr(lit("a"), lit("b")))?, 0)?;
    eq(
        "a complement pair is valid",
        strict(&Formula::or(lit("a"), comp("a")))?,
        1,
    )?;
    // The witness family: the verbatim rewrite forgets that the complement
    // pair already settled every assignment, so it under-approximates here.
    let witness = Formula::or(
        Formula::or(lit("a"), comp("a")),
        Formula::gtr(lit("b"), lit("c")),
    );
    eq("verbatim verdict on the witness", strict(&witness)?, 0)?;
    eq(
        "oracle verdict on the witness",
        brute_valid(&witness).map_err(|e| e.to_string())?,
        1,
    )
}

fn corrected_procedure_matches_the_oracle_on_landmarks() -> Result<(), String> {
    let sound = |f: &Formula| valid_sound(f).map_err(|e| e.to_string());
    let witness = Formula::or(
        Formula::or(lit("a"), comp("a")),
        Formula::gtr(lit("b"), lit("c")),
    );
    eq("mixed-level disjunction is valid", sound(&witness)?, 1)?;
    eq(
        "attributing to nothingness is invalid",
        sound(&Formula::gtr(Formula::bot(), lit("a")))?,
        0,
    )?;
    let bundled = Formula::gtr(Formula::and(lit("hat"), lit("shirt")), lit("yellow"));
    let pointwise = Formula::and(
        Formula::gtr(lit("hat"), lit("yellow")),
        Formula::gtr(lit("shirt"), lit("yellow")),
    );
    eq(
        "conjunctive objects split pointwise",
        sound(&mutual_implication(&bundled, &pointwise))?,
        1,
    )
}

fn satisfiability_landmarks_hold() -> Result<(), String> {
    let sat = |f: &Formula| satisfiable(f).map_err(|e| e.to_string());
    eq("contradiction", sat(&Formula::and(lit("a"), comp("a")))?, 0)?;
    eq(
        "complemented attribute",
        sat(&Formula::gtr(lit("hat"), comp("yellow")))?,
        1,
    )?;
    eq(
        "nothing attributed to nothing",
        sat(&Formula::gtr(Formula::bot(), Formula::bot()))?,
        0,
    )
}

// ---------------------------------------------------------------------------
// The graph-chain variant calculus
// ---------------------------------------------------------------------------

fn graph_chain_grammar_accepts_bundled_heads() -> Result<(), String> {
    ensure(
        is_unit_graph_chain(&Formula::gtr(Formula::and(lit("a"), lit("b")), lit("c"))),
        "a conjunctive head extends to a graph chain",
    )?;
    ensure(
        !is_unit_graph_chain(&Formula::gtr(lit("a"), Formula::and(lit("b"), lit("c")))),
        "a conjunctive tail is not a graph chain",
    )?;
    ensure(
        is_unit_graph_chain(&Formula::gtr(Formula::gtr(lit("a"), lit("b")), lit("c"))),
        "extending a chain by a literal stays a graph chain",
    )
}

fn graph_rewrites_match_the_worked_examples() -> Result<(), String> {
    let norm = |f: &Formula| {
        variant_normalize(f, &Strategy::LeftmostInnermost).map_err(|e| e.to_string())
    };
    eq(
        "a disjunctive head fans out over the subsets",
        norm(&Formula::gtr(Formula::or(lit("hat"), lit("brooch")), lit("green")))?,
        Formula::or(
            Formula::or(
                Formula::gtr(lit("hat"), lit("green")),
                Formula::gtr(lit("brooch"), lit("green")),
            ),
            Formula::gtr(Formula::and(lit("hat"), lit("brooch")), lit("green")),
        ),
    )?;
    let head = Formula::and(lit("hat"), lit("brooch"));
    eq(
        "a negated bundled chain mirrors its head",
        norm(&Formula::not(Formula::gtr(head.clone(), lit("green"))))?,
        Formula::or(
            Formula::or(comp("hat"), comp("brooch")),
            Formula::gtr(head, comp("green")),
        ),
    )?;
    let mixed = Formula::gtr(
        Formula::and(lit("a"), Formula::or(lit("b"), lit("c"))),
        lit("d"),
    );
    let (after, _) = variant_step(&mixed, &[], VariantRule::ObjDist1).map_err(|e| e.to_string())?;
    eq(
        "the head distributes in place as the first step",
        after,
        Formula::gtr(
            Formula::or(
                Formula::and(lit("a"), lit("b")),
                Formula::and(lit("a"), lit("c")),
            ),
            lit("d"),
        ),
    )
}

fn graph_complementation_matches_the_worked_cases() -> Result<(), String> {
    let rr2 = |f: &Formula| recursive_reduce2(f).map_err(|e| e.to_string());
    eq("atom", rr2(&lit("a"))?, comp("a"))?;
    eq(
        "plain chain",
        rr2(&Formula::gtr(lit("a"), lit("b")))?,
        Formula::or(comp("a"), Formula::gtr(lit("a"), comp("b"))),
    )?;
    let bundled = Formula::gtr(Formula::and(lit("a"), lit("b")), lit("c"));
    eq(
        "bundled chain",
        rr2(&bundled)?,
        Formula::or(
            Formula::or(comp("a"), comp("b")),
            Formula::gtr(Formula::and(lit("a"), lit("b")), comp("c")),
        ),
    )
}

fn terms_compress_to_canonical_forms() -> Result<(), String> {
    eq(
        "a literal maps to a one-element sequence",
        map_term(&lit("a")),
        GraphTerm::Seq(vec![GraphTerm::Lit(SElem::lit("a"))]),
    )?;
    let doubled = GraphTerm::Seq(vec![GraphTerm::Seq(vec![GraphTerm::Lit(SElem::lit("t"))])]);
    eq(
        "nested sequences splice",
        compress(&doubled),
        GraphTerm::Seq(vec![GraphTerm::Lit(SElem::lit("t"))]),
    )?;
    let bundled = Formula::gtr(Formula::and(lit("a"), lit("b")), lit("c"));
    eq(
        "a bundled head compresses to a set before the tail",
        compress(&map_term(&bundled)),
        GraphTerm::Seq(vec![
            GraphTerm::Set(vec![
                GraphTerm::Seq(vec![GraphTerm::Lit(SElem::lit("a"))]),
                GraphTerm::Seq(vec![GraphTerm::Lit(SElem::lit("b"))]),
            ]),
            GraphTerm::Lit(SElem::lit("c")),
        ]),
    )
}

fn variant_frame_of(points: &[(&[GraphTerm], &str, bool)]) -> VariantFrame {
    let mut bits: BTreeMap<(Context, String), bool> = BTreeMap::new();
    for (ctx, pair, bit) in points {
        bits.insert((ctx.to_vec(), pair.to_string()), *bit);
    }
    VariantFrame::new(bits)
}

fn graph_valuation_reads_prefix_contexts() -> Result<(), String> {
    let bundled = Formula::gtr(Formula::and(lit("a"), lit("b")), lit("c"));
    let head_term = GraphTerm::Set(vec![
        GraphTerm::Seq(vec![GraphTerm::Lit(SElem::lit("a"))]),
        GraphTerm::Seq(vec![GraphTerm::Lit(SElem::lit("b"))]),
    ]);
    let points: Vec<(Context, String)> =
        query_points_of_expansion(&bundled).into_iter().collect();
    let expect: Vec<(Context, String)> = vec![
        (vec![], "a".to_string()),
        (vec![], "b".to_string()),
        (vec![head_term.clone()], "c".to_string()),
    ];
    eq("query points of the bundled chain", points, expect)?;
    let all_on = variant_frame_of(&[
        (&[], "a", true),
        (&[], "b", true),
        (std::slice::from_ref(&head_term), "c", true),
    ]);
    eq(
        "all query points on",
        variant_evaluate(&all_on, &bundled).map_err(|e| e.to_string())?,
        1,
    )?;
    let tail_off = variant_frame_of(&[
        (&[], "a", true),
        (&[], "b", true),
        (std::slice::from_ref(&head_term), "c", false),
    ]);
    eq(
        "the bundled bit alone kills the chain",
        variant_evaluate(&tail_off, &bundled).map_err(|e| e.to_string())?,
        0,
    )
}

fn bundled_heads_defeat_pointwise_distribution() -> Result<(), String> {
    let hat = GraphTerm::Lit(SElem::lit("hat"));
    let brooch = GraphTerm::Lit(SElem::lit("brooch"));
    let bundle = compress(&GraphTerm::Set(vec![
        GraphTerm::Seq(vec![brooch.clone()]),
        GraphTerm::Seq(vec![hat.clone()]),
    ]));
    let frame = variant_frame_of(&[
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
    eq(
        "both plain chains hold",
        variant_evaluate(&frame, &pointwise).map_err(|e| e.to_string())?,
        1,
    )?;
    eq(
        "the bundled chain fails",
        variant_evaluate(&frame, &bundled).map_err(|e| e.to_string())?,
        0,
    )?;
    let interchangeable =
        variant_value_equal(&pointwise, &bundled, DEFAULT_VARIANT_BUDGET_BITS)
            .map_err(|e| e.to_string())?;
    ensure(!interchangeable, "the two spellings must stay distinguishable")?;
    // The fan-out golden stays interchangeable with its source.
    let fanned = Formula::gtr(Formula::or(lit("hat"), lit("brooch")), lit("green"));
    let reduct =
        variant_normalize(&fanned, &Strategy::LeftmostInnermost).map_err(|e| e.to_string())?;
    let same = variant_value_equal(&fanned, &reduct, DEFAULT_VARIANT_BUDGET_BITS)
        .map_err(|e| e.to_string())?;
    ensure(same, "the subset fan-out keeps the original value")
}

// ---------------------------------------------------------------------------
// The inequality lab
// ---------------------------------------------------------------------------

fn inequality_lab_replicates_its_goldens() -> Result<(), String> {
    let base = builtin_pairs(Calculus::Base);
    let first = base
        .iter()
        .find(|p| p.id == 1)
        .ok_or("pair 1 missing from the base suite")?;
    let empty = BTreeMap::new();
    let (left, right) = pair_sizes(first, &empty, 1, 1, false);
    eq("negated literal size line", render_size(&left), "1/2".to_string())?;
    eq("reduced literal size line", render_size(&right), "1/4".to_string())?;
    eq(
        "counter line of the negated conjunction",
        render_counters(&Formula::not(Formula::and(lit("a"), lit("b")))),
        "1/2,1/1,1/2".to_string(),
    )?;
    let assoc = base
        .iter()
        .find(|p| p.id == 12)
        .ok_or("pair 12 missing from the base suite")?;
    let mut inst = BTreeMap::new();
    inst.insert('A', lit("a"));
    inst.insert('B', lit("b"));
    inst.insert('C', lit("c"));
    ensure(
        check_pair(assoc, &inst, 0, 0, true),
        "associativity pair must hold with equality",
    )?;
    for calculus in [Calculus::Base, Calculus::Variant] {
        let once = run_suite(calculus, 2);
        ensure(once.all_pass(), "a two-seed sweep must pass")?;
        let again = run_suite(calculus, 2);
        eq(
            "sweeps are deterministic",
            once.to_json_lines(),
            again.to_json_lines(),
        )?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Command-line goldens
// ---------------------------------------------------------------------------

fn command_line_goldens_keep_their_exit_codes() -> Result<(), String> {
    let (code, out, _) = crate::cli::run_captured(["valid", "a | a'"], "");
    eq("complement disjunction exit code", code, 0)?;
    let parsed: serde_json::Value =
        serde_json::from_str(out.trim()).map_err(|e| e.to_string())?;
    eq("complement disjunction result bit", parsed["result"].as_u64(), Some(1))?;

    let (code, out, _) = crate::cli::run_captured(["sat", "bot > a"], "");
    eq("nothingness attribution exit code", code, 1)?;
    let parsed: serde_json::Value =
        serde_json::from_str(out.trim()).map_err(|e| e.to_string())?;
    eq("nothingness attribution result bit", parsed["result"].as_u64(), Some(0))?;

    let (code, _, _) = crate::cli::run_captured(
        [
            "equiv",
            "(hat & shirt) > yellow",
            "(hat > yellow) & (shirt > yellow)",
        ],
        "",
    );
    eq("pointwise split equivalence exit code", code, 0)
}

// ---------------------------------------------------------------------------
// The scaling table behind `selftest --timing`
// ---------------------------------------------------------------------------

/// One row per (pairs, depth) entry: a valid formula over exactly that many
/// pairs and levels forces the oracle to visit its whole frame space, so the
/// visited count must equal the space's predicted 2^(pairs·depth).
pub(crate) fn timing_table() -> Result<Vec<serde_json::Value>, String> {
    let names = ["a", "b", "c"];
    let mut rows = Vec::new();
    for pairs in 1..=3usize {
        for depth in 1..=3usize {
            // a ∨ a' keeps the formula valid; a depth-long chain over `a`
            // sets the level count; bare extra literals widen the pair set.
            let mut f = Formula::or(lit(names[0]), comp(names[0]));
            f = Formula::or(f, chain_from_elems(&vec![SElem::lit(names[0]); depth]));
            for name in names.iter().take(pairs).skip(1) {
                f = Formula::or(f, lit(name));
            }
            let started = std::time::Instant::now();
            let run = brute_valid_counted(&f, DEFAULT_BUDGET_BITS)
                .map_err(|e| e.to_string())?;
            let elapsed_ms = started.elapsed().as_millis() as u64;
            let predicted = frame_space(&f).frame_count();
            let expected = 1u128 << (pairs * depth);
            if run.result != 1 {
                return Err(format!(
                    "scaling formula for pairs={pairs} depth={depth} should be valid"
                ));
            }
            if predicted != expected || u128::from(run.frames_checked) != expected {
                return Err(format!(
                    "scaling mismatch at pairs={pairs} depth={depth}: \
                     checked {} frames, space predicts {predicted}, formula predicts {expected}",
                    run.frames_checked
                ));
            }
            // The corrected procedure stays within the same level count.
            let sound = valid_sound_counted(&f, DEFAULT_BUDGET_BITS)
                .map_err(|e| e.to_string())?;
            if sound.stats.levels != depth as u64 {
                return Err(format!(
                    "level count mismatch at pairs={pairs} depth={depth}: {}",
                    sound.stats.levels
                ));
            }
            rows.push(serde_json::json!({
                "pairs": pairs,
                "depth": depth,
                "frames_checked": run.frames_checked,
                "predicted": predicted as u64,
                "elapsed_ms": elapsed_ms,
            }));
        }
    }
    Ok(rows)
}
