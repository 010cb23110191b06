//! Formula trees and path-based navigation.

use std::collections::BTreeSet;

use crate::selem::SElem;

/// A formula: atoms closed under negation, conjunction, disjunction, and the
/// attribution connective `Gtr` (ASCII `>`).
///
/// `Gtr(l, r)` reads "object `l` carries attribute `r`"; nested `Gtr` on the
/// right builds attribute chains.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(SElem),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Gtr(Box<Formula>, Box<Formula>),
}

/// One step of a path from the root of a formula to a subformula.
///
/// `Left`/`Right` descend into binary connectives, `Child` into a negation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dir {
    Left,
    Right,
    Child,
}

impl Dir {
    /// Lower-case name used in JSON traces.
    pub fn as_str(&self) -> &'static str {
        match self {
            Dir::Left => "left",
            Dir::Right => "right",
            Dir::Child => "child",
        }
    }
}

impl Formula {
    /// The plain literal `name`.
    pub fn lit(name: &str) -> Self {
        Formula::Atom(SElem::lit(name))
    }

    /// The complemented literal `name'`.
    pub fn comp(name: &str) -> Self {
        Formula::Atom(SElem::comp(name))
    }

    /// The constant `top`.
    pub fn top() -> Self {
        Formula::Atom(SElem::Top)
    }

    /// The constant `bot`.
    pub fn bot() -> Self {
        Formula::Atom(SElem::Bot)
    }

    pub fn atom(s: SElem) -> Self {
        Formula::Atom(s)
    }

    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn and(l: Formula, r: Formula) -> Self {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Self {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn gtr(l: Formula, r: Formula) -> Self {
        Formula::Gtr(Box::new(l), Box::new(r))
    }

    /// Material implication, desugared immediately: `l -> r` is `~l | r`.
    pub fn implies(l: Formula, r: Formula) -> Self {
        Formula::or(Formula::not(l), r)
    }

    /// All distinct literal pair names occurring anywhere in the formula.
    pub fn pair_names(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_pairs(&mut out);
        out
    }

    fn collect_pairs(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Atom(s) => {
                if let Some(name) = s.pair_name() {
                    out.insert(name.to_string());
                }
            }
            Formula::Not(f) => f.collect_pairs(out),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Gtr(l, r) => {
                l.collect_pairs(out);
                r.collect_pairs(out);
            }
        }
    }

    /// True if `top` or `bot` occurs anywhere.
    pub fn contains_constants(&self) -> bool {
        match self {
            Formula::Atom(s) => !s.is_literal(),
            Formula::Not(f) => f.contains_constants(),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Gtr(l, r) => {
                l.contains_constants() || r.contains_constants()
            }
        }
    }

    /// True if a negation occurs anywhere.
    pub fn contains_negation(&self) -> bool {
        match self {
            Formula::Atom(_) => false,
            Formula::Not(_) => true,
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Gtr(l, r) => {
                l.contains_negation() || r.contains_negation()
            }
        }
    }

    /// The subformula at `path`, if the path is valid.
    pub fn at_path(&self, path: &[Dir]) -> Option<&Formula> {
        let mut cur = self;
        for d in path {
            cur = match (cur, d) {
                (Formula::Not(f), Dir::Child) => f,
                (Formula::And(l, _), Dir::Left)
                | (Formula::Or(l, _), Dir::Left)
                | (Formula::Gtr(l, _), Dir::Left) => l,
                (Formula::And(_, r), Dir::Right)
                | (Formula::Or(_, r), Dir::Right)
                | (Formula::Gtr(_, r), Dir::Right) => r,
                _ => return None,
            };
        }
        Some(cur)
    }

    /// A copy of `self` with the subformula at `path` replaced by `new`.
    /// Returns `None` if the path is invalid.
    pub fn replace_at(&self, path: &[Dir], new: Formula) -> Option<Formula> {
        match path.split_first() {
            None => Some(new),
            Some((d, rest)) => match (self, d) {
                (Formula::Not(f), Dir::Child) => {
                    Some(Formula::not(f.replace_at(rest, new)?))
                }
                (Formula::And(l, r), Dir::Left) => {
                    Some(Formula::and(l.replace_at(rest, new)?, (**r).clone()))
                }
                (Formula::And(l, r), Dir::Right) => {
                    Some(Formula::and((**l).clone(), r.replace_at(rest, new)?))
                }
                (Formula::Or(l, r), Dir::Left) => {
                    Some(Formula::or(l.replace_at(rest, new)?, (**r).clone()))
                }
                (Formula::Or(l, r), Dir::Right) => {
                    Some(Formula::or((**l).clone(), r.replace_at(rest, new)?))
                }
                (Formula::Gtr(l, r), Dir::Left) => {
                    Some(Formula::gtr(l.replace_at(rest, new)?, (**r).clone()))
                }
                (Formula::Gtr(l, r), Dir::Right) => {
                    Some(Formula::gtr((**l).clone(), r.replace_at(rest, new)?))
                }
                _ => None,
            },
        }
    }
}
