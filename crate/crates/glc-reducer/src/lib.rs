//! The rewrite system that drives every formula to unit-chain expansion.
//!
//! Nine rules rewrite one connective pattern each: four push negation inward
//! (`Neg1`–`Neg4`) and five unfold attribution over compound arguments
//! (`Gtr1`–`Gtr5`). Rewriting always terminates — each step strictly shrinks
//! the lexicographic measure from `glc-formula-core` — and every normal form
//! is a unit-chain expansion, whichever order redexes are picked in.

use glc_formula_core::{
    as_unit_chain, is_unit_chain_expansion, Dir, Formula, SElem,
};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use thiserror::Error;

/// The nine rewrite rules.
///
/// * `Neg1`: `~s` becomes the complement atom `s'`.
/// * `Neg2`: `~(F & G)` becomes `~F | ~G`.
/// * `Neg3`: `~(F | G)` becomes `~F & ~G`.
/// * `Neg4`: `~(s > F)` becomes `s' | (s > ~F)` — only for atomic heads.
/// * `Gtr1`: `(F > G) > H` becomes `(F > H) & ((F > G) | (F > G > H))`.
/// * `Gtr2`: `(F & G) > H` becomes `(F > H) & (G > H)`.
/// * `Gtr3`: `(F | G) > H` becomes `(F > H) | (G > H)`.
/// * `Gtr4`: `F > (G & H)` becomes `(F > G) & (F > H)`.
/// * `Gtr5`: `F > (G | H)` becomes `(F > G) | (F > H)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    Neg1,
    Neg2,
    Neg3,
    Neg4,
    Gtr1,
    Gtr2,
    Gtr3,
    Gtr4,
    Gtr5,
}

impl Rule {
    pub const ALL: [Rule; 9] = [
        Rule::Neg1,
        Rule::Neg2,
        Rule::Neg3,
        Rule::Neg4,
        Rule::Gtr1,
        Rule::Gtr2,
        Rule::Gtr3,
        Rule::Gtr4,
        Rule::Gtr5,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Rule::Neg1 => "Neg1",
            Rule::Neg2 => "Neg2",
            Rule::Neg3 => "Neg3",
            Rule::Neg4 => "Neg4",
            Rule::Gtr1 => "Gtr1",
            Rule::Gtr2 => "Gtr2",
            Rule::Gtr3 => "Gtr3",
            Rule::Gtr4 => "Gtr4",
            Rule::Gtr5 => "Gtr5",
        }
    }
}

/// One applied rewrite: the rule, where it fired, and the local
/// redex/contractum pair (the subformula before and after, not the whole
/// formula).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub rule: Rule,
    pub position: Vec<Dir>,
    pub before: Formula,
    pub after: Formula,
}

/// How [`normalize`] picks among the available redexes.
#[derive(Debug, Clone)]
pub enum Strategy {
    /// Always the first redex in post-order: leftmost-innermost.
    LeftmostInnermost,
    /// Uniformly random picks from a deterministic seeded stream.
    SeededRandom(u64),
}

/// Rewriting errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReduceError {
    #[error("no subformula at the given position")]
    InvalidPosition,
    #[error("rule {0} does not match at the given position")]
    RuleDoesNotMatch(&'static str),
    #[error("input must be in unit-chain expansion")]
    NotUnitChainExpansion,
}

/// The rules that match at this exact node, in declaration order.
fn rules_at(f: &Formula) -> Vec<Rule> {
    let mut out = Vec::new();
    match f {
        Formula::Not(g) => match g.as_ref() {
            Formula::Atom(_) => out.push(Rule::Neg1),
            Formula::And(..) => out.push(Rule::Neg2),
            Formula::Or(..) => out.push(Rule::Neg3),
            Formula::Gtr(l, _) if matches!(l.as_ref(), Formula::Atom(_)) => {
                out.push(Rule::Neg4)
            }
            _ => {}
        },
        Formula::Gtr(l, r) => {
            match l.as_ref() {
                Formula::Gtr(..) => out.push(Rule::Gtr1),
                Formula::And(..) => out.push(Rule::Gtr2),
                Formula::Or(..) => out.push(Rule::Gtr3),
                _ => {}
            }
            match r.as_ref() {
                Formula::And(..) => out.push(Rule::Gtr4),
                Formula::Or(..) => out.push(Rule::Gtr5),
                _ => {}
            }
        }
        _ => {}
    }
    out
}

/// Apply `rule` to a node it matches; the caller has checked the match.
fn contract(rule: Rule, f: &Formula) -> Formula {
    match (rule, f) {
        (Rule::Neg1, Formula::Not(g)) => match g.as_ref() {
            Formula::Atom(s) => Formula::Atom(s.complement()),
            _ => unreachable!("checked by rules_at"),
        },
        (Rule::Neg2, Formula::Not(g)) => match g.as_ref() {
            Formula::And(l, r) => Formula::or(
                Formula::not((**l).clone()),
                Formula::not((**r).clone()),
            ),
            _ => unreachable!("checked by rules_at"),
        },
        (Rule::Neg3, Formula::Not(g)) => match g.as_ref() {
            Formula::Or(l, r) => Formula::and(
                Formula::not((**l).clone()),
                Formula::not((**r).clone()),
            ),
            _ => unreachable!("checked by rules_at"),
        },
        (Rule::Neg4, Formula::Not(g)) => match g.as_ref() {
            Formula::Gtr(l, r) => match l.as_ref() {
                Formula::Atom(s) => Formula::or(
                    Formula::Atom(s.complement()),
                    Formula::gtr((**l).clone(), Formula::not((**r).clone())),
                ),
                _ => unreachable!("checked by rules_at"),
            },
            _ => unreachable!("checked by rules_at"),
        },
        (Rule::Gtr1, Formula::Gtr(l, r)) => match l.as_ref() {
            Formula::Gtr(f1, f2) => {
                let (f1, f2, f3) = ((**f1).clone(), (**f2).clone(), (**r).clone());
                Formula::and(
                    Formula::gtr(f1.clone(), f3.clone()),
                    Formula::or(
                        Formula::gtr(f1.clone(), f2.clone()),
                        Formula::gtr(f1, Formula::gtr(f2, f3)),
                    ),
                )
            }
            _ => unreachable!("checked by rules_at"),
        },
        (Rule::Gtr2, Formula::Gtr(l, r)) => match l.as_ref() {
            Formula::And(f1, f2) => Formula::and(
                Formula::gtr((**f1).clone(), (**r).clone()),
                Formula::gtr((**f2).clone(), (**r).clone()),
            ),
            _ => unreachable!("checked by rules_at"),
        },
        (Rule::Gtr3, Formula::Gtr(l, r)) => match l.as_ref() {
            Formula::Or(f1, f2) => Formula::or(
                Formula::gtr((**f1).clone(), (**r).clone()),
                Formula::gtr((**f2).clone(), (**r).clone()),
            ),
            _ => unreachable!("checked by rules_at"),
        },
        (Rule::Gtr4, Formula::Gtr(l, r)) => match r.as_ref() {
            Formula::And(f2, f3) => Formula::and(
                Formula::gtr((**l).clone(), (**f2).clone()),
                Formula::gtr((**l).clone(), (**f3).clone()),
            ),
            _ => unreachable!("checked by rules_at"),
        },
        (Rule::Gtr5, Formula::Gtr(l, r)) => match r.as_ref() {
            Formula::Or(f2, f3) => Formula::or(
                Formula::gtr((**l).clone(), (**f2).clone()),
                Formula::gtr((**l).clone(), (**f3).clone()),
            ),
            _ => unreachable!("checked by rules_at"),
        },
        _ => unreachable!("checked by rules_at"),
    }
}

/// Every `(position, rule)` pair that can fire, in post-order (children
/// before parents, left before right). The first entry is therefore the
/// leftmost-innermost redex.
pub fn redexes(f: &Formula) -> Vec<(Vec<Dir>, Rule)> {
    fn walk(f: &Formula, path: &mut Vec<Dir>, out: &mut Vec<(Vec<Dir>, Rule)>) {
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
pub fn step(
    f: &Formula,
    position: &[Dir],
    rule: Rule,
) -> Result<(Formula, ReductionStep), ReduceError> {
    let node = f.at_path(position).ok_or(ReduceError::InvalidPosition)?;
    if !rules_at(node).contains(&rule) {
        return Err(ReduceError::RuleDoesNotMatch(rule.name()));
    }
    let after_local = contract(rule, node);
    let step = ReductionStep {
        rule,
        position: position.to_vec(),
        before: node.clone(),
        after: after_local.clone(),
    };
    let rewritten = f
        .replace_at(position, after_local)
        .ok_or(ReduceError::InvalidPosition)?;
    Ok((rewritten, step))
}

fn run(f: &Formula, strategy: &Strategy, trace: Option<&mut Vec<ReductionStep>>) -> Formula {
    let mut rng = match strategy {
        Strategy::LeftmostInnermost => None,
        Strategy::SeededRandom(seed) => Some(ChaCha20Rng::seed_from_u64(*seed)),
    };
    let mut cur = f.clone();
    let mut sink = trace;
    loop {
        let rs = redexes(&cur);
        if rs.is_empty() {
            debug_assert!(is_unit_chain_expansion(&cur));
            return cur;
        }
        let idx = match &mut rng {
            None => 0,
            Some(rng) => rng.gen_range(0..rs.len()),
        };
        let (pos, rule) = &rs[idx];
        let (next, st) = step(&cur, pos, *rule).expect("redexes only reports valid steps");
        if let Some(t) = sink.as_deref_mut() {
            t.push(st);
        }
        cur = next;
    }
}

/// Rewrite to normal form under the given strategy.
pub fn normalize(f: &Formula, strategy: &Strategy) -> Formula {
    run(f, strategy, None)
}

/// Rewrite to normal form and keep every step.
pub fn normalize_traced(f: &Formula, strategy: &Strategy) -> (Formula, Vec<ReductionStep>) {
    let mut trace = Vec::new();
    let nf = run(f, strategy, Some(&mut trace));
    (nf, trace)
}

fn gtr_over_or(head: &SElem, tail: Formula) -> Formula {
    match tail {
        Formula::Or(a, b) => Formula::or(gtr_over_or(head, *a), gtr_over_or(head, *b)),
        t => Formula::gtr(Formula::Atom(head.clone()), t),
    }
}

fn rr_chain(elems: &[SElem]) -> Formula {
    let head = &elems[0];
    let tail = &elems[1..];
    let tail_negated = if tail.len() == 1 {
        Formula::Atom(tail[0].complement())
    } else {
        rr_chain(tail)
    };
    Formula::or(
        Formula::Atom(head.complement()),
        gtr_over_or(head, tail_negated),
    )
}

/// Negate an already-expanded formula *without* rewriting: swap `&`/`|`,
/// complement loose atoms, and unfold each chain `s0 > ... > sk` into
/// `s0' | (s0 > s1') | ... | (s0 > ... > s_(k-1) > sk')`.
///
/// Produces exactly the normal form of the negation (see
/// [`negate_normalize`]), in one pass.
pub fn recursive_reduce(f: &Formula) -> Result<Formula, ReduceError> {
    if !is_unit_chain_expansion(f) {
        return Err(ReduceError::NotUnitChainExpansion);
    }
    fn rr(f: &Formula) -> Formula {
        match f {
            Formula::Atom(s) => Formula::Atom(s.complement()),
            Formula::And(l, r) => Formula::or(rr(l), rr(r)),
            Formula::Or(l, r) => Formula::and(rr(l), rr(r)),
            Formula::Gtr(..) => {
                let elems = as_unit_chain(f).expect("expansion guarantees unit chains");
                rr_chain(&elems)
            }
            Formula::Not(_) => unreachable!("expansion is negation-free"),
        }
    }
    Ok(rr(f))
}

/// Normal form of `~f` under the leftmost-innermost strategy.
pub fn negate_normalize(f: &Formula) -> Formula {
    normalize(&Formula::not(f.clone()), &Strategy::LeftmostInnermost)
}
