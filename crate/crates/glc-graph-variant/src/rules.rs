//! The graph-chain rewrite system.
//!
//! Nine rules drive any constant-free formula into unit graph expansion:
//!
//! * `Neg1`–`Neg3`: complement a negated literal, De-Morgan a negated
//!   junction.
//! * `Neg4`: for a negated chain whose head is fully formed,
//!   `~(H > T)` becomes `M(H) | (H > ~T)` where `M` mirrors the head's
//!   `&`-tree with `|` and negates each conjunct in place.
//! * `Gtr3`: a disjunctive head splits over every nonempty subset of its
//!   (maximally flattened) disjuncts; subset `I` contributes the chain
//!   `(&_{j in I} g_j) > tail`. Subsets are ordered by size then
//!   lexicographically, and both the subset conjunctions and the output
//!   disjunction fold to the left.
//! * `Gtr4`/`Gtr5`: a junction tail splits pointwise, sharing the head;
//!   they wait until the head is fully formed.
//! * `ObjDist1`/`ObjDist2`: inside a conjunctive head, the leftmost `|`
//!   found by descending `&`-nodes distributes in place (`ObjDist1` when the
//!   `|` is a right conjunct, `ObjDist2` when it is a left conjunct). The
//!   redex is the whole chain: the rule only fires under a `>`.
//!
//! Rules apply anywhere in a formula. The system terminates: each step
//! lexicographically shrinks the four-part measure (weighted size, then
//! inverse counts of `~`, `>`, `&`).

use glc_formula_core::{Dir, Formula, SElem};
use glc_reducer::Strategy;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use crate::grammar::{flatten_or, is_head, is_unit_graph_expansion};
use crate::VariantError;

/// The rewrite rules of the graph-chain calculus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VariantRule {
    Neg1,
    Neg2,
    Neg3,
    Neg4,
    Gtr3,
    Gtr4,
    Gtr5,
    ObjDist1,
    ObjDist2,
}

impl VariantRule {
    pub const ALL: [VariantRule; 9] = [
        VariantRule::Neg1,
        VariantRule::Neg2,
        VariantRule::Neg3,
        VariantRule::Neg4,
        VariantRule::Gtr3,
        VariantRule::Gtr4,
        VariantRule::Gtr5,
        VariantRule::ObjDist1,
        VariantRule::ObjDist2,
    ];

    /// Stable name used in trace records.
    pub fn name(&self) -> &'static str {
        match self {
            VariantRule::Neg1 => "Neg1",
            VariantRule::Neg2 => "Neg2",
            VariantRule::Neg3 => "Neg3",
            VariantRule::Neg4 => "Neg4",
            VariantRule::Gtr3 => "Gtr3",
            VariantRule::Gtr4 => "Gtr4",
            VariantRule::Gtr5 => "Gtr5",
            VariantRule::ObjDist1 => "ObjDist1",
            VariantRule::ObjDist2 => "ObjDist2",
        }
    }
}

/// One applied rewrite: the rule, where it fired, and the local
/// redex/contractum pair (the subformula before and after, not the whole
/// formula).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariantStep {
    pub rule: VariantRule,
    pub position: Vec<Dir>,
    pub before: Formula,
    pub after: Formula,
}

/// Locate the leftmost `|` reachable from a conjunctive head by descending
/// only `&`-nodes: the path of the `&`-node owning the `|` child, and
/// whether the `|` is its right child.
fn find_or_under_and(f: &Formula) -> Option<(Vec<Dir>, bool)> {
    fn rec(f: &Formula, path: &mut Vec<Dir>) -> Option<(Vec<Dir>, bool)> {
        let Formula::And(l, r) = f else { return None };
        if matches!(l.as_ref(), Formula::Or(..)) {
            return Some((path.clone(), false));
        }
        if matches!(l.as_ref(), Formula::And(..)) {
            path.push(Dir::Left);
            if let Some(hit) = rec(l, path) {
                return Some(hit);
            }
            path.pop();
        }
        if matches!(r.as_ref(), Formula::Or(..)) {
            return Some((path.clone(), true));
        }
        if matches!(r.as_ref(), Formula::And(..)) {
            path.push(Dir::Right);
            if let Some(hit) = rec(r, path) {
                return Some(hit);
            }
            path.pop();
        }
        None
    }
    rec(f, &mut Vec::new())
}

/// The rules that match at this exact node, head rules before tail rules.
fn rules_at(f: &Formula) -> Vec<VariantRule> {
    let mut out = Vec::new();
    match f {
        Formula::Not(g) => match g.as_ref() {
            Formula::Atom(SElem::Lit { .. }) => out.push(VariantRule::Neg1),
            Formula::And(..) => out.push(VariantRule::Neg2),
            Formula::Or(..) => out.push(VariantRule::Neg3),
            Formula::Gtr(l, _) if is_head(l) => out.push(VariantRule::Neg4),
            _ => {}
        },
        Formula::Gtr(l, r) => {
            match l.as_ref() {
                Formula::Or(..) => out.push(VariantRule::Gtr3),
                Formula::And(..) => {
                    if let Some((_, or_is_right)) = find_or_under_and(l) {
                        out.push(if or_is_right {
                            VariantRule::ObjDist1
                        } else {
                            VariantRule::ObjDist2
                        });
                    }
                }
                _ => {}
            }
            // Tail splitting waits for a fully formed head: sharing a head
            // that can still fan out over several bundles would fix the same
            // bundle choice across all tail parts on one side of the split
            // but not the other, changing the value.
            if is_head(l) {
                match r.as_ref() {
                    Formula::And(..) => out.push(VariantRule::Gtr4),
                    Formula::Or(..) => out.push(VariantRule::Gtr5),
                    _ => {}
                }
            }
        }
        _ => {}
    }
    out
}

/// Mirror a head's `&`-tree with `|`, negating each conjunct in place.
fn mirror_neg(h: &Formula) -> Formula {
    match h {
        Formula::And(l, r) => Formula::or(mirror_neg(l), mirror_neg(r)),
        other => Formula::not(other.clone()),
    }
}

/// Every nonempty subset of `0..n`, ordered by size then lexicographically.
fn subsets_size_lex(n: usize) -> Vec<Vec<usize>> {
    assert!(n <= 24, "disjunctive head too wide to split");
    let mut out: Vec<Vec<usize>> = (1u32..(1u32 << n))
        .map(|mask| (0..n).filter(|j| mask >> j & 1 == 1).collect())
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

fn fold_left(op: fn(Formula, Formula) -> Formula, items: Vec<Formula>) -> Formula {
    let mut it = items.into_iter();
    let first = it.next().expect("fold over nonempty list");
    it.fold(first, op)
}

/// Rewrite the redex rooted at `f` with `rule`. Panics if the rule does not
/// match; use [`variant_step`] for checked application.
fn contract(rule: VariantRule, f: &Formula) -> Formula {
    match (rule, f) {
        (VariantRule::Neg1, Formula::Not(g)) => match g.as_ref() {
            Formula::Atom(s) => Formula::Atom(s.complement()),
            _ => unreachable!("checked by rules_at"),
        },
        (VariantRule::Neg2, Formula::Not(g)) => match g.as_ref() {
            Formula::And(l, r) => Formula::or(
                Formula::not(l.as_ref().clone()),
                Formula::not(r.as_ref().clone()),
            ),
            _ => unreachable!("checked by rules_at"),
        },
        (VariantRule::Neg3, Formula::Not(g)) => match g.as_ref() {
            Formula::Or(l, r) => Formula::and(
                Formula::not(l.as_ref().clone()),
                Formula::not(r.as_ref().clone()),
            ),
            _ => unreachable!("checked by rules_at"),
        },
        (VariantRule::Neg4, Formula::Not(g)) => match g.as_ref() {
            Formula::Gtr(h, t) => Formula::or(
                mirror_neg(h),
                Formula::gtr(h.as_ref().clone(), Formula::not(t.as_ref().clone())),
            ),
            _ => unreachable!("checked by rules_at"),
        },
        (VariantRule::Gtr3, Formula::Gtr(l, r)) => {
            let gs = flatten_or(l);
            let disjuncts = subsets_size_lex(gs.len())
                .into_iter()
                .map(|idxs| {
                    let head = fold_left(
                        Formula::and,
                        idxs.iter().map(|&j| gs[j].clone()).collect(),
                    );
                    Formula::gtr(head, r.as_ref().clone())
                })
                .collect();
            fold_left(Formula::or, disjuncts)
        }
        (VariantRule::Gtr4, Formula::Gtr(l, r)) => match r.as_ref() {
            Formula::And(a, b) => Formula::and(
                Formula::gtr(l.as_ref().clone(), a.as_ref().clone()),
                Formula::gtr(l.as_ref().clone(), b.as_ref().clone()),
            ),
            _ => unreachable!("checked by rules_at"),
        },
        (VariantRule::Gtr5, Formula::Gtr(l, r)) => match r.as_ref() {
            Formula::Or(a, b) => Formula::or(
                Formula::gtr(l.as_ref().clone(), a.as_ref().clone()),
                Formula::gtr(l.as_ref().clone(), b.as_ref().clone()),
            ),
            _ => unreachable!("checked by rules_at"),
        },
        (VariantRule::ObjDist1 | VariantRule::ObjDist2, Formula::Gtr(l, r)) => {
            let (path, or_is_right) =
                find_or_under_and(l).expect("checked by rules_at");
            let and_node = l.at_path(&path).expect("path from find_or_under_and");
            let Formula::And(x, y) = and_node else {
                unreachable!("find_or_under_and returns `&`-nodes")
            };
            let distributed = if or_is_right {
                let Formula::Or(p, q) = y.as_ref() else {
                    unreachable!("right child checked to be `|`")
                };
                Formula::or(
                    Formula::and(x.as_ref().clone(), p.as_ref().clone()),
                    Formula::and(x.as_ref().clone(), q.as_ref().clone()),
                )
            } else {
                let Formula::Or(p, q) = x.as_ref() else {
                    unreachable!("left child checked to be `|`")
                };
                Formula::or(
                    Formula::and(p.as_ref().clone(), y.as_ref().clone()),
                    Formula::and(q.as_ref().clone(), y.as_ref().clone()),
                )
            };
            let head = l
                .replace_at(&path, distributed)
                .expect("path from find_or_under_and");
            Formula::gtr(head, r.as_ref().clone())
        }
        _ => unreachable!("checked by rules_at"),
    }
}

/// Every `(position, rule)` pair that can fire, in post-order (children
/// before parents, left before right). The first entry is therefore the
/// leftmost-innermost redex.
pub fn variant_redexes(f: &Formula) -> Vec<(Vec<Dir>, VariantRule)> {
    fn walk(f: &Formula, path: &mut Vec<Dir>, out: &mut Vec<(Vec<Dir>, VariantRule)>) {
        match f {
            Formula::Atom(_) => {}
            Formula::Not(g) => {
                path.push(Dir::Child);
                walk(g, path, out);
                path.pop();
            }
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Gtr(l, r) => {
                path.push(Dir::Left);
                walk(l, path, out);
                path.pop();
                path.push(Dir::Right);
                walk(r, path, out);
                path.pop();
            }
        }
        for rule in rules_at(f) {
            out.push((path.clone(), rule));
        }
    }
    let mut out = Vec::new();
    walk(f, &mut Vec::new(), &mut out);
    out
}

/// Fire `rule` at `position`, returning the rewritten formula and the step
/// record. Fails if the position is invalid or the rule does not match there.
pub fn variant_step(
    f: &Formula,
    position: &[Dir],
    rule: VariantRule,
) -> Result<(Formula, VariantStep), VariantError> {
    let node = f.at_path(position).ok_or(VariantError::InvalidPosition)?;
    if !rules_at(node).contains(&rule) {
        return Err(VariantError::RuleDoesNotMatch(rule.name()));
    }
    let after_local = contract(rule, node);
    let step = VariantStep {
        rule,
        position: position.to_vec(),
        before: node.clone(),
        after: after_local.clone(),
    };
    let rewritten = f
        .replace_at(position, after_local)
        .ok_or(VariantError::InvalidPosition)?;
    Ok((rewritten, step))
}

fn run(
    f: &Formula,
    strategy: &Strategy,
    mut trace: Option<&mut Vec<VariantStep>>,
) -> Result<Formula, VariantError> {
    if f.contains_constants() {
        return Err(VariantError::ConstantsUnsupported);
    }
    let mut rng = match strategy {
        Strategy::LeftmostInnermost => None,
        Strategy::SeededRandom(seed) => Some(ChaCha20Rng::seed_from_u64(*seed)),
    };
    let mut cur = f.clone();
    loop {
        let rs = variant_redexes(&cur);
        if rs.is_empty() {
            debug_assert!(is_unit_graph_expansion(&cur));
            return Ok(cur);
        }
        let idx = match &mut rng {
            None => 0,
            Some(rng) => rng.gen_range(0..rs.len()),
        };
        let (pos, rule) = &rs[idx];
        let (next, st) = variant_step(&cur, pos, *rule)
            .expect("variant_redexes only reports valid steps");
        if let Some(t) = trace.as_deref_mut() {
            t.push(st);
        }
        cur = next;
    }
}

/// Rewrite to unit graph expansion under the given strategy.
pub fn variant_normalize(f: &Formula, strategy: &Strategy) -> Result<Formula, VariantError> {
    run(f, strategy, None)
}

/// Rewrite to unit graph expansion and keep every step.
pub fn variant_normalize_traced(
    f: &Formula,
    strategy: &Strategy,
) -> Result<(Formula, Vec<VariantStep>), VariantError> {
    let mut trace = Vec::new();
    let nf = run(f, strategy, Some(&mut trace))?;
    Ok((nf, trace))
}
