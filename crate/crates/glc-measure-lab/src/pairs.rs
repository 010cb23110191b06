//! The built-in redex/contractum template pairs.
//!
//! Templates use the prefix syntax of `glc_parser_io::parse_prefix_with`:
//! `!` negation, `*` conjunction, `+` disjunction, `%` attribution, lower
//! case names for concrete literals (postfix `'` complements them), and
//! upper case letters for schematic slots filled in at check time.

use serde::{Deserialize, Serialize};
use std::fmt;

/// Which rule set a pair belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Calculus {
    /// The chain calculus: nine rules normalizing to unit-chain expansion.
    Base,
    /// The graph calculus: subset head splits, guarded tail splits, and
    /// in-place head distribution, normalizing to unit-graph expansion.
    Variant,
}

impl Calculus {
    pub fn as_str(&self) -> &'static str {
        match self {
            Calculus::Base => "base",
            Calculus::Variant => "variant",
        }
    }
}

impl fmt::Display for Calculus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The claimed relation between the instantiated left and right sizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    /// Left is at least right: the rewrite never grows the size.
    GreaterEq,
    /// Left equals right exactly: pure algebra identities.
    Equal,
}

impl Relation {
    pub fn holds<T: PartialOrd>(&self, left: &T, right: &T) -> bool {
        match self {
            Relation::GreaterEq => left >= right,
            Relation::Equal => left == right,
        }
    }

    pub fn symbol(&self) -> &'static str {
        match self {
            Relation::GreaterEq => ">=",
            Relation::Equal => "==",
        }
    }
}

/// One redex/contractum template pair with its claimed size relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TestPair {
    pub id: u32,
    pub left: &'static str,
    pub right: &'static str,
    pub relation: Relation,
    pub calculus: Calculus,
}

/// The built-in suite for one calculus: thirteen pairs each.
///
/// Ids keep the numbering of the bundled listings; the graph suite
/// interleaves 400/500/800/900 among the ids it shares with the chain
/// suite.
pub fn builtin_pairs(calculus: Calculus) -> Vec<TestPair> {
    let p = |id, left, right, relation| TestPair {
        id,
        left,
        right,
        relation,
        calculus,
    };
    match calculus {
        Calculus::Base => vec![
            // A negated literal collapses to the complement.
            p(1, "!s", "s", Relation::GreaterEq),
            // Negation pushes through a conjunction.
            p(2, "!*(A)(B)", "+(!A)(!B)", Relation::GreaterEq),
            // Negation pushes through a disjunction.
            p(3, "!+(A)(B)", "*(!A)(!B)", Relation::GreaterEq),
            // A negated chain with a literal head splits on the head.
            p(4, "!%(s)(A)", "+(s')(%(s)(!A))", Relation::GreaterEq),
            // A left-nested chain unfolds.
            p(
                5,
                "%(%(A)(B))(C)",
                "*(%(A)(C))(+(%(A)(B))(%(A)(%(B)(C))))",
                Relation::GreaterEq,
            ),
            // A conjunctive head splits pointwise.
            p(6, "%(*(A)(B))(C)", "*(%(A)(C))(%(B)(C))", Relation::GreaterEq),
            // A disjunctive head splits pointwise.
            p(7, "%(+(A)(B))(C)", "+(%(A)(C))(%(B)(C))", Relation::GreaterEq),
            // A conjunctive tail splits, sharing the head.
            p(8, "%(A)(*(B)(C))", "*(%(A)(B))(%(A)(C))", Relation::GreaterEq),
            // A disjunctive tail splits, sharing the head.
            p(9, "%(A)(+(B)(C))", "+(%(A)(B))(%(A)(C))", Relation::GreaterEq),
            p(10, "*(A)(B)", "*(B)(A)", Relation::Equal),
            p(11, "+(A)(B)", "+(B)(A)", Relation::Equal),
            p(12, "*(*(A)(B))(C)", "*(A)(*(B)(C))", Relation::Equal),
            p(13, "+(+(A)(B))(C)", "+(A)(+(B)(C))", Relation::Equal),
        ],
        Calculus::Variant => vec![
            p(1, "!s", "s", Relation::GreaterEq),
            p(2, "!*(A)(B)", "+(!A)(!B)", Relation::GreaterEq),
            p(3, "!+(A)(B)", "*(!A)(!B)", Relation::GreaterEq),
            // A negated chain with a bundled (conjunctive) head: the head
            // parts come back mirrored as negations, plus the chain with a
            // negated tail. Right-hand side spelled out from the rule's
            // output shape.
            p(
                400,
                "!%(*(A)(*(B)(C)))(D)",
                "+(+(!A)(+(!B)(!C)))(%(*(A)(*(B)(C)))(!D))",
                Relation::GreaterEq,
            ),
            // A three-way disjunctive head splits into one chain per
            // nonempty subset of {A, B, C}, smaller subsets first, ties in
            // first-occurrence order; bundles and disjuncts nest to the
            // right. Right-hand side spelled out from the rule's output
            // shape.
            p(
                500,
                "%(+(+(A)(B))(C))(D)",
                "+(%(A)(D))(+(%(B)(D))(+(%(C)(D))(+(%(*(A)(B))(D))(+(%(*(A)(C))(D))(+(%(*(B)(C))(D))(%(*(A)(*(B)(C)))(D)))))))",
                Relation::GreaterEq,
            ),
            // A conjunctive tail splits pointwise under a shared head.
            p(8, "%(A)(*(B)(C))", "*(%(A)(B))(%(A)(C))", Relation::GreaterEq),
            // A disjunctive tail splits pointwise under a shared head.
            p(9, "%(A)(+(B)(C))", "+(%(A)(B))(%(A)(C))", Relation::GreaterEq),
            // A disjunction under a head conjunction distributes in place
            // (disjunction on the right of the conjunction).
            p(
                800,
                "%(*(A)(+(B)(C)))(D)",
                "%(+(*(A)(B))(*(A)(C)))(D)",
                Relation::GreaterEq,
            ),
            // The mirror image: disjunction on the left of the conjunction.
            p(
                900,
                "%(*(+(A)(B))(C))(D)",
                "%(+(*(A)(C))(*(B)(C)))(D)",
                Relation::GreaterEq,
            ),
            p(10, "*(A)(B)", "*(B)(A)", Relation::Equal),
            p(11, "+(A)(B)", "+(B)(A)", Relation::Equal),
            p(12, "*(*(A)(B))(C)", "*(A)(*(B)(C))", Relation::Equal),
            p(13, "+(+(A)(B))(C)", "+(A)(+(B)(C))", Relation::Equal),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::template_letters;

    #[test]
    fn both_suites_have_thirteen_pairs_with_the_published_ids() {
        let base = builtin_pairs(Calculus::Base);
        assert_eq!(base.len(), 13);
        assert_eq!(
            base.iter().map(|p| p.id).collect::<Vec<_>>(),
            (1..=13).collect::<Vec<_>>()
        );
        let variant = builtin_pairs(Calculus::Variant);
        assert_eq!(variant.len(), 13);
        assert_eq!(
            variant.iter().map(|p| p.id).collect::<Vec<_>>(),
            vec![1, 2, 3, 400, 500, 8, 9, 800, 900, 10, 11, 12, 13]
        );
    }

    #[test]
    fn rewrite_pairs_claim_greater_eq_and_algebra_pairs_claim_equality() {
        for calc in [Calculus::Base, Calculus::Variant] {
            for pair in builtin_pairs(calc) {
                let expected = if pair.id >= 10 && pair.id <= 13 {
                    Relation::Equal
                } else {
                    Relation::GreaterEq
                };
                assert_eq!(pair.relation, expected, "{calc} pair {}", pair.id);
            }
        }
    }

    #[test]
    fn schematic_letters_are_contiguous_from_a() {
        // Every template draws its slots from a prefix of A, B, C, D.
        for calc in [Calculus::Base, Calculus::Variant] {
            for pair in builtin_pairs(calc) {
                let mut letters = template_letters(pair.left);
                for c in template_letters(pair.right) {
                    if !letters.contains(&c) {
                        letters.push(c);
                    }
                }
                letters.sort_unstable();
                let expected: Vec<char> = ('A'..).take(letters.len()).collect();
                assert_eq!(letters, expected, "{calc} pair {}", pair.id);
            }
        }
    }
}
