//! Instantiating templates and evaluating the claimed size relations.

use crate::pairs::{Calculus, TestPair};
use glc_formula_core::{f_size, occurrence_counts, Formula, SElem};
use glc_parser_io::parse_prefix_with;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::{rand_core::SeedableRng, ChaCha20Rng};
use std::collections::BTreeMap;

/// The entry points the suite sweeps, besides both flag values: the
/// canonical entry (0, 0), the worked-example entry (1, 1), and a deeper
/// off-diagonal probe (2, 3).
pub const GRID: [(u32, u32); 3] = [(0, 0), (1, 1), (2, 3)];

/// The schematic letters a template draws on, sorted and deduplicated.
pub fn template_letters(template: &str) -> Vec<char> {
    let mut letters: Vec<char> = template
        .chars()
        .filter(|c| c.is_ascii_uppercase())
        .collect();
    letters.sort_unstable();
    letters.dedup();
    letters
}

fn instantiate(template: &str, instantiation: &BTreeMap<char, Formula>) -> Formula {
    parse_prefix_with(template, instantiation)
        .expect("template must parse with every schematic letter covered")
}

/// Exact sizes of the instantiated left and right templates at one entry
/// point.
///
/// Panics if the instantiation misses a letter the pair uses; the built-in
/// templates themselves always parse.
pub fn pair_sizes(
    pair: &TestPair,
    instantiation: &BTreeMap<char, Formula>,
    d: u32,
    l: u32,
    flag: bool,
) -> (BigRational, BigRational) {
    let left = instantiate(pair.left, instantiation);
    let right = instantiate(pair.right, instantiation);
    (f_size(d, l, flag, &left), f_size(d, l, flag, &right))
}

/// Does the pair's claimed relation hold at this entry point, for this
/// instantiation?
pub fn check_pair(
    pair: &TestPair,
    instantiation: &BTreeMap<char, Formula>,
    d: u32,
    l: u32,
    flag: bool,
) -> bool {
    let (left, right) = pair_sizes(pair, instantiation, d, l, flag);
    pair.relation.holds(&left, &right)
}

/// Renders an exact rational as `p/q`, keeping the denominator even when it
/// is one so report fields stay uniformly shaped.
pub fn render_size(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Renders the occurrence-count inverses of a formula as three `1/n`
/// fields: negations, attributions, conjunctions — each `1/(count+1)`.
pub fn render_counters(f: &Formula) -> String {
    let c = occurrence_counts(f);
    format!("1/{},1/{},1/{}", c.neg + 1, c.gtr + 1, c.and + 1)
}

/// The deterministic random instantiation the suite uses for a pair and
/// seed: every schematic letter gets an independently drawn negation-free
/// formula (literals may carry complement marks; the base suite may draw
/// the constants).
///
/// Negation-free is the domain on which the claimed relations hold at every
/// grid entry. A negation's weight is `1/4^d` for its nesting depth `d`,
/// and several rules move slots to a shallower depth, where a contained
/// negation weighs more; without negations, sizes do not depend on the
/// depth at all and the junction level shifts only ever shrink the right
/// side. See the boundary tests below.
pub fn instantiation_for(pair: &TestPair, seed: u64) -> BTreeMap<char, Formula> {
    let mix = seed
        .wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add((pair.id as u64) << 17)
        .wrapping_add(match pair.calculus {
            Calculus::Base => 0,
            Calculus::Variant => 1,
        });
    let mut rng = ChaCha20Rng::seed_from_u64(mix);
    let allow_constants = pair.calculus == Calculus::Base;
    let mut letters = template_letters(pair.left);
    for c in template_letters(pair.right) {
        if !letters.contains(&c) {
            letters.push(c);
        }
    }
    letters.sort_unstable();
    letters
        .into_iter()
        .map(|c| {
            let budget = rng.gen_range(1..=5);
            (c, negation_free(&mut rng, budget, allow_constants))
        })
        .collect()
}

fn leaf(rng: &mut ChaCha20Rng, allow_constants: bool) -> Formula {
    if allow_constants && rng.gen_range(0..8) == 0 {
        if rng.gen::<bool>() {
            Formula::Atom(SElem::Top)
        } else {
            Formula::Atom(SElem::Bot)
        }
    } else {
        let name = ["a", "b", "c"][rng.gen_range(0..3)];
        if rng.gen::<bool>() {
            Formula::comp(name)
        } else {
            Formula::lit(name)
        }
    }
}

fn negation_free(rng: &mut ChaCha20Rng, budget: u32, allow_constants: bool) -> Formula {
    if budget <= 1 || rng.gen_range(0..4) == 0 {
        return leaf(rng, allow_constants);
    }
    let left_budget = rng.gen_range(1..=budget.max(2) - 1);
    let l = negation_free(rng, left_budget, allow_constants);
    let r = negation_free(rng, budget - left_budget, allow_constants);
    match rng.gen_range(0..3) {
        0 => Formula::and(l, r),
        1 => Formula::or(l, r),
        _ => Formula::gtr(l, r),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pairs::builtin_pairs;

    fn pair(calculus: Calculus, id: u32) -> TestPair {
        builtin_pairs(calculus)
            .into_iter()
            .find(|p| p.id == id)
            .expect("builtin id")
    }

    fn lits(letters: &[char]) -> BTreeMap<char, Formula> {
        let names = ["p", "q", "r", "t"];
        letters
            .iter()
            .enumerate()
            .map(|(i, c)| (*c, Formula::lit(names[i])))
            .collect()
    }

    #[test]
    fn negated_literal_sizes_replicate_the_worked_closed_forms() {
        // At entry (1, 1), either flag: the negated literal weighs
        // 1/4 + 1/4 = 1/2 and its complement weighs 1/4.
        let p = pair(Calculus::Base, 1);
        for flag in [false, true] {
            let (left, right) = pair_sizes(&p, &BTreeMap::new(), 1, 1, flag);
            assert_eq!(render_size(&left), "1/2");
            assert_eq!(render_size(&right), "1/4");
            assert!(check_pair(&p, &BTreeMap::new(), 1, 1, flag));
        }
    }

    #[test]
    fn literal_head_negation_sizes_match_the_worked_entries() {
        // Worked entry (1, 1), flag false: left 3/4, right max(1/4, 9/16).
        // Flag true moves the split's pieces one junction level deeper:
        // right becomes max(1/16, 1/16 + 1/64 + 1/16) = 9/64.
        let p = pair(Calculus::Base, 4);
        let inst = lits(&['A']);
        let (left, right) = pair_sizes(&p, &inst, 1, 1, false);
        assert_eq!(render_size(&left), "3/4");
        assert_eq!(render_size(&right), "9/16");
        let (left, right) = pair_sizes(&p, &inst, 1, 1, true);
        assert_eq!(render_size(&left), "3/4");
        assert_eq!(render_size(&right), "9/64");
    }

    #[test]
    fn subset_split_sizes_match_the_worked_entries() {
        // Literal slots, entry (1, 1): flag false gives 1/2 on both sides
        // (every subset chain ties with the whole); flag true pushes the
        // right side's pieces one junction level deeper: 5/16 vs 1/8.
        let p = pair(Calculus::Variant, 500);
        let inst = lits(&['A', 'B', 'C', 'D']);
        let (left, right) = pair_sizes(&p, &inst, 1, 1, false);
        assert_eq!(render_size(&left), "1/2");
        assert_eq!(render_size(&right), "1/2");
        let (left, right) = pair_sizes(&p, &inst, 1, 1, true);
        assert_eq!(render_size(&left), "5/16");
        assert_eq!(render_size(&right), "1/8");
        for flag in [false, true] {
            assert!(check_pair(&p, &inst, 1, 1, flag));
        }
    }

    #[test]
    fn counter_fields_replicate_every_bundled_line() {
        // The printed counter lines of the bundled suites, one per pair,
        // identical for both flags: negations, attributions, conjunctions,
        // each as 1/(count+1), for single-literal instantiations.
        let base_expect: &[(u32, &str, &str)] = &[
            (1, "1/2,1/1,1/1", "1/1,1/1,1/1"),
            (2, "1/2,1/1,1/2", "1/3,1/1,1/1"),
            (3, "1/2,1/1,1/1", "1/3,1/1,1/2"),
            (4, "1/2,1/2,1/1", "1/2,1/2,1/1"),
            (5, "1/1,1/3,1/1", "1/1,1/5,1/2"),
            (6, "1/1,1/2,1/2", "1/1,1/3,1/2"),
            (7, "1/1,1/2,1/1", "1/1,1/3,1/1"),
            (8, "1/1,1/2,1/2", "1/1,1/3,1/2"),
            (9, "1/1,1/2,1/1", "1/1,1/3,1/1"),
            (10, "1/1,1/1,1/2", "1/1,1/1,1/2"),
            (11, "1/1,1/1,1/1", "1/1,1/1,1/1"),
            (12, "1/1,1/1,1/3", "1/1,1/1,1/3"),
            (13, "1/1,1/1,1/1", "1/1,1/1,1/1"),
        ];
        let variant_expect: &[(u32, &str, &str)] = &[
            (1, "1/2,1/1,1/1", "1/1,1/1,1/1"),
            (2, "1/2,1/1,1/2", "1/3,1/1,1/1"),
            (3, "1/2,1/1,1/1", "1/3,1/1,1/2"),
            (400, "1/2,1/2,1/3", "1/5,1/2,1/3"),
            (500, "1/1,1/2,1/1", "1/1,1/8,1/6"),
            (8, "1/1,1/2,1/2", "1/1,1/3,1/2"),
            (9, "1/1,1/2,1/1", "1/1,1/3,1/1"),
            (800, "1/1,1/2,1/2", "1/1,1/2,1/3"),
            (900, "1/1,1/2,1/2", "1/1,1/2,1/3"),
            (10, "1/1,1/1,1/2", "1/1,1/1,1/2"),
            (11, "1/1,1/1,1/1", "1/1,1/1,1/1"),
            (12, "1/1,1/1,1/3", "1/1,1/1,1/3"),
            (13, "1/1,1/1,1/1", "1/1,1/1,1/1"),
        ];
        for (calc, table) in [
            (Calculus::Base, base_expect),
            (Calculus::Variant, variant_expect),
        ] {
            for &(id, left_line, right_line) in table {
                let p = pair(calc, id);
                let mut letters = template_letters(p.left);
                for c in template_letters(p.right) {
                    if !letters.contains(&c) {
                        letters.push(c);
                    }
                }
                letters.sort_unstable();
                let inst = lits(&letters);
                let left = parse_prefix_with(p.left, &inst).unwrap();
                let right = parse_prefix_with(p.right, &inst).unwrap();
                assert_eq!(render_counters(&left), left_line, "{calc} pair {id} left");
                assert_eq!(
                    render_counters(&right),
                    right_line,
                    "{calc} pair {id} right"
                );
            }
        }
    }

    #[test]
    fn algebra_pairs_hold_exactly_for_arbitrary_slots() {
        // Commutativity and associativity are exact at every entry, even
        // for slots containing negations: both sides place the same
        // subterms at the same depth and level.
        let inst: BTreeMap<char, Formula> = [
            ('A', Formula::not(Formula::lit("a"))),
            ('B', Formula::gtr(Formula::lit("b"), Formula::comp("c"))),
            ('C', Formula::and(Formula::lit("a"), Formula::lit("b"))),
        ]
        .into_iter()
        .collect();
        for calc in [Calculus::Base, Calculus::Variant] {
            for id in [10, 11, 12, 13] {
                let p = pair(calc, id);
                for (d, l) in GRID {
                    for flag in [false, true] {
                        let (left, right) = pair_sizes(&p, &inst, d, l, flag);
                        assert_eq!(left, right, "{calc} pair {id} at ({d},{l},{flag})");
                    }
                }
            }
        }
    }

    #[test]
    fn buried_negations_break_the_shallow_false_flag_entries() {
        // The chain-unfolding pair moves its first slot from under two
        // attributions to under one; a negation there weighs 1/4^d and the
        // shallower placement weighs more. At the (1, 1) entry with the
        // flag off, the contractum outgrows the redex — which is exactly
        // why the suite draws negation-free instantiations.
        let p = pair(Calculus::Base, 5);
        let inst: BTreeMap<char, Formula> = [
            ('A', Formula::not(Formula::lit("x"))),
            ('B', Formula::lit("y")),
            ('C', Formula::lit("z")),
        ]
        .into_iter()
        .collect();
        assert!(!check_pair(&p, &inst, 1, 1, false));
        // The same instantiation is fine at the true-flag entries: the
        // junctions on the right push every piece a level deeper, which
        // restores the margin.
        assert!(check_pair(&p, &inst, 0, 0, true));
        assert!(check_pair(&p, &inst, 1, 1, true));
        // And the negated-bundle pair breaks at the deep off-diagonal
        // entry, where the depth weight 1/4^2 dwarfs the level weight
        // 1/4^3 of the literals around it.
        let p = pair(Calculus::Variant, 400);
        let inst: BTreeMap<char, Formula> = [
            ('A', Formula::not(Formula::lit("x"))),
            ('B', Formula::lit("y")),
            ('C', Formula::lit("z")),
            ('D', Formula::lit("w")),
        ]
        .into_iter()
        .collect();
        assert!(!check_pair(&p, &inst, 2, 3, false));
        assert!(check_pair(&p, &inst, 0, 0, true));
    }

    #[test]
    fn drawn_instantiations_are_deterministic_and_negation_free() {
        fn has_negation(f: &Formula) -> bool {
            match f {
                Formula::Not(_) => true,
                Formula::Atom(_) => false,
                Formula::And(l, r) | Formula::Or(l, r) | Formula::Gtr(l, r) => {
                    has_negation(l) || has_negation(r)
                }
            }
        }
        fn has_constant(f: &Formula) -> bool {
            match f {
                Formula::Atom(SElem::Top) | Formula::Atom(SElem::Bot) => true,
                Formula::Atom(_) => false,
                Formula::Not(g) => has_constant(g),
                Formula::And(l, r) | Formula::Or(l, r) | Formula::Gtr(l, r) => {
                    has_constant(l) || has_constant(r)
                }
            }
        }
        for calc in [Calculus::Base, Calculus::Variant] {
            for p in builtin_pairs(calc) {
                for seed in 0..40u64 {
                    let a = instantiation_for(&p, seed);
                    let b = instantiation_for(&p, seed);
                    assert_eq!(a, b, "{calc} pair {} seed {seed}", p.id);
                    for f in a.values() {
                        assert!(!has_negation(f));
                        if calc == Calculus::Variant {
                            assert!(!has_constant(f));
                        }
                    }
                }
            }
        }
    }
}
