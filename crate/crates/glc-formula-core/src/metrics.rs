//! Size and occurrence metrics, and the lexicographic rewrite measure.
//!
//! The size metric [`f_size`] is computed with exact rationals: its values
//! are sums of powers of 1/4 whose exponents grow with nesting depth, far
//! below what floating point can represent reliably.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::formula::Formula;

/// Symbol length: atoms count 1 and every connective adds 1.
pub fn f_len(f: &Formula) -> u64 {
    match f {
        Formula::Atom(_) => 1,
        Formula::Not(g) => 1 + f_len(g),
        Formula::And(l, r) | Formula::Or(l, r) | Formula::Gtr(l, r) => 1 + f_len(l) + f_len(r),
    }
}

/// Maximum number of nested negations along any root-to-leaf path.
pub fn neg_max(f: &Formula) -> u64 {
    match f {
        Formula::Atom(_) => 0,
        Formula::Not(g) => 1 + neg_max(g),
        Formula::And(l, r) | Formula::Or(l, r) | Formula::Gtr(l, r) => {
            neg_max(l).max(neg_max(r))
        }
    }
}

/// Maximum number of attribution connectives along any root-to-leaf path.
pub fn gtr_path_depth(f: &Formula) -> u64 {
    match f {
        Formula::Atom(_) => 0,
        Formula::Not(g) => gtr_path_depth(g),
        Formula::And(l, r) | Formula::Or(l, r) => gtr_path_depth(l).max(gtr_path_depth(r)),
        Formula::Gtr(l, r) => 1 + gtr_path_depth(l).max(gtr_path_depth(r)),
    }
}

/// Total occurrence counts of negation, attribution, and conjunction nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OccurrenceCounts {
    pub neg: u64,
    pub gtr: u64,
    pub and: u64,
}

/// Count every `Not`, `Gtr`, and `And` node (disjunction is not counted).
pub fn occurrence_counts(f: &Formula) -> OccurrenceCounts {
    fn go(f: &Formula, acc: &mut OccurrenceCounts) {
        match f {
            Formula::Atom(_) => {}
            Formula::Not(g) => {
                acc.neg += 1;
                go(g, acc);
            }
            Formula::And(l, r) => {
                acc.and += 1;
                go(l, acc);
                go(r, acc);
            }
            Formula::Or(l, r) => {
                go(l, acc);
                go(r, acc);
            }
            Formula::Gtr(l, r) => {
                acc.gtr += 1;
                go(l, acc);
                go(r, acc);
            }
        }
    }
    let mut acc = OccurrenceCounts {
        neg: 0,
        gtr: 0,
        and: 0,
    };
    go(f, &mut acc);
    acc
}

fn quarter_pow(k: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(4).pow(k))
}

/// Exact rational size of a formula, parameterised by a depth counter `d`,
/// a level counter `l`, and a one-shot `flag`.
///
/// * atoms weigh `1/4^l`;
/// * a negation adds `1/4^d` to its child's size;
/// * attribution sums its children's sizes with `d` bumped;
/// * conjunction/disjunction take the *max* of their children's sizes —
///   with both `d` and `l` bumped when `flag` is set, unchanged otherwise —
///   and clear the flag either way.
pub fn f_size(d: u32, l: u32, flag: bool, f: &Formula) -> BigRational {
    match f {
        Formula::Atom(_) => quarter_pow(l),
        Formula::Not(g) => quarter_pow(d) + f_size(d, l, flag, g),
        Formula::Gtr(a, b) => f_size(d + 1, l, flag, a) + f_size(d + 1, l, flag, b),
        Formula::And(a, b) | Formula::Or(a, b) => {
            let (nd, nl) = if flag { (d + 1, l + 1) } else { (d, l) };
            f_size(nd, nl, false, a).max(f_size(nd, nl, false, b))
        }
    }
}

/// [`f_size`] at the canonical entry point `(0, 0, flag = true)`.
pub fn canonical_size(f: &Formula) -> BigRational {
    f_size(0, 0, true, f)
}

fn inv_succ(n: u64) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(n + 1))
}

/// The lexicographic rewrite measure: canonical size first, then the inverted
/// successor of each occurrence count. Every field shrinks as its underlying
/// quantity grows, so "smaller measure" always means "closer to normal form".
///
/// The derived ordering compares fields in declaration order, which is
/// exactly the four-component lexicographic comparison.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Measure {
    pub size: BigRational,
    pub inv_neg: BigRational,
    pub inv_gtr: BigRational,
    pub inv_and: BigRational,
}

impl Measure {
    pub fn of(f: &Formula) -> Measure {
        let counts = occurrence_counts(f);
        Measure {
            size: canonical_size(f),
            inv_neg: inv_succ(counts.neg),
            inv_gtr: inv_succ(counts.gtr),
            inv_and: inv_succ(counts.and),
        }
    }
}

/// Strict decrease of the three-component prefix (size, inv_neg, inv_gtr),
/// the measure used for the base rewrite system.
pub fn decreases_base_triple(before: &Measure, after: &Measure) -> bool {
    (&after.size, &after.inv_neg, &after.inv_gtr)
        < (&before.size, &before.inv_neg, &before.inv_gtr)
}

/// Strict decrease of the full four-component measure, used for the variant
/// rewrite system whose head-distribution steps keep the first three
/// components unchanged.
pub fn decreases_variant_quad(before: &Measure, after: &Measure) -> bool {
    after < before
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::Formula;

    fn rat(num: i64, den: i64) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    #[test]
    fn f_len_counts_atoms_and_connectives() {
        // a > b > c: three atoms, two connectives.
        let chain = Formula::gtr(
            Formula::lit("a"),
            Formula::gtr(Formula::lit("b"), Formula::lit("c")),
        );
        assert_eq!(f_len(&chain), 5);
        assert_eq!(f_len(&Formula::not(Formula::lit("a"))), 2);
        assert_eq!(f_len(&Formula::top()), 1);
    }

    #[test]
    fn neg_max_tracks_nesting_not_occurrences() {
        let nested = Formula::not(Formula::and(
            Formula::lit("a"),
            Formula::not(Formula::lit("b")),
        ));
        assert_eq!(neg_max(&nested), 2);
        let flat = Formula::or(
            Formula::not(Formula::lit("a")),
            Formula::not(Formula::lit("b")),
        );
        assert_eq!(neg_max(&flat), 1);
    }

    #[test]
    fn occurrence_counts_ignore_disjunction() {
        let f = Formula::or(
            Formula::not(Formula::and(Formula::lit("a"), Formula::lit("b"))),
            Formula::gtr(Formula::lit("c"), Formula::lit("d")),
        );
        let c = occurrence_counts(&f);
        assert_eq!((c.neg, c.gtr, c.and), (1, 1, 1));
    }

    #[test]
    fn f_size_atom_weight_depends_on_level_only() {
        let a = Formula::lit("a");
        assert_eq!(f_size(0, 0, true, &a), rat(1, 1));
        assert_eq!(f_size(5, 1, false, &a), rat(1, 4));
        assert_eq!(f_size(0, 2, true, &a), rat(1, 16));
    }

    #[test]
    fn f_size_negation_adds_depth_weight() {
        // ~a at (1,1): 1/4 + 1/4 = 1/2.
        let f = Formula::not(Formula::lit("a"));
        assert_eq!(f_size(1, 1, false, &f), rat(1, 2));
        // The flag passes through negation untouched.
        assert_eq!(f_size(1, 1, true, &f), rat(1, 2));
    }

    #[test]
    fn f_size_junctions_consume_the_flag() {
        // a | a at (1,1): with the flag the children move to (2,2) -> 1/16;
        // without it they stay at level 1 -> 1/4.
        let f = Formula::or(Formula::lit("a"), Formula::lit("a"));
        assert_eq!(f_size(1, 1, true, &f), rat(1, 16));
        assert_eq!(f_size(1, 1, false, &f), rat(1, 4));
    }

    #[test]
    fn f_size_attribution_sums_children() {
        // a > b at (1,1): both children at (2,1) -> 1/4 + 1/4 = 1/2.
        let f = Formula::gtr(Formula::lit("a"), Formula::lit("b"));
        assert_eq!(f_size(1, 1, false, &f), rat(1, 2));
    }

    #[test]
    fn rewrite_shrinks_canonical_size() {
        // ~(s > t) versus s' | (s > ~t): 3 versus 9/16 at the canonical entry.
        let before = Formula::not(Formula::gtr(Formula::lit("s"), Formula::lit("t")));
        let after = Formula::or(
            Formula::comp("s"),
            Formula::gtr(Formula::lit("s"), Formula::not(Formula::lit("t"))),
        );
        assert_eq!(canonical_size(&before), rat(3, 1));
        assert_eq!(canonical_size(&after), rat(9, 16));
        assert!(decreases_base_triple(
            &Measure::of(&before),
            &Measure::of(&after)
        ));
    }

    #[test]
    fn variant_quad_breaks_size_ties_on_conjunction_count() {
        // Distributing a disjunction inside an attribution head keeps the
        // size and the negation/attribution counts but adds a conjunction.
        let before = Formula::gtr(
            Formula::and(
                Formula::lit("a"),
                Formula::or(Formula::lit("b"), Formula::lit("c")),
            ),
            Formula::lit("d"),
        );
        let after = Formula::gtr(
            Formula::or(
                Formula::and(Formula::lit("a"), Formula::lit("b")),
                Formula::and(Formula::lit("a"), Formula::lit("c")),
            ),
            Formula::lit("d"),
        );
        let (mb, ma) = (Measure::of(&before), Measure::of(&after));
        assert_eq!(mb.size, ma.size);
        assert!(!decreases_base_triple(&mb, &ma));
        assert!(decreases_variant_quad(&mb, &ma));
    }
}
