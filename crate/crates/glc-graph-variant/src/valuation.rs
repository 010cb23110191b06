//! Context-indexed valuations and the brute-force oracle.
//!
//! A chain's compressed term is read off left to right: each sequence
//! element is judged in the context of the elements before it (contexts are
//! sequences of [`GraphTerm`]s), set members share their context, and a
//! literal in context `ctx` reads the frame bit at the query point
//! `(ctx, pair)` — complemented literals read the opposite bit. A sequence
//! or set holds when all of its parts hold.
//!
//! Because conjunctive heads enter the context as whole set-terms, a bundled
//! observation `(a & b) > c` and the pointwise `(a > c) & (b > c)` ask
//! *different* query points — the calculus deliberately does not identify
//! them.
//!
//! The oracle enumerates every assignment of bits to the query points that a
//! formula's normal form can touch, which is exhaustive for deciding
//! validity and satisfiability.

use std::collections::{BTreeMap, BTreeSet};

use glc_formula_core::{Formula, SElem};
use glc_reducer::Strategy;

use crate::rules::variant_normalize;
use crate::term::{compress, map_term, render_term, GraphTerm};
use crate::VariantError;

/// Evaluation context: the sequence elements to the left of the one under
/// judgement.
pub type Context = Vec<GraphTerm>;

/// Upper bound on query points the oracle will enumerate (one bit each).
pub const DEFAULT_VARIANT_BUDGET_BITS: u32 = 22;

/// A finite valuation: one bit per `(context, pair)` query point, giving the
/// plain literal's value there; the complement reads opposite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariantFrame {
    bits: BTreeMap<(Context, String), bool>,
}

impl VariantFrame {
    pub fn new(bits: BTreeMap<(Context, String), bool>) -> Self {
        VariantFrame { bits }
    }

    /// The bit a literal reads in a context. Errors when the frame does not
    /// cover that query point.
    pub fn local(&self, ctx: &[GraphTerm], s: &SElem) -> Result<u8, VariantError> {
        let SElem::Lit { name, complemented } = s else {
            return Err(VariantError::ConstantsUnsupported);
        };
        let plain = self
            .bits
            .get(&(ctx.to_vec(), name.clone()))
            .copied()
            .ok_or_else(|| VariantError::MissingQueryPoint {
                context: render_context(ctx),
                pair: name.clone(),
            })?;
        Ok(u8::from(plain != *complemented))
    }

    /// The assignment as JSON: a list of `{context, pair, bit}` objects.
    pub fn to_json(&self) -> serde_json::Value {
        let points: Vec<serde_json::Value> = self
            .bits
            .iter()
            .map(|((ctx, pair), bit)| {
                serde_json::json!({
                    "context": ctx.iter().map(render_term).collect::<Vec<_>>(),
                    "pair": pair,
                    "bit": u8::from(*bit),
                })
            })
            .collect();
        serde_json::json!({ "points": points })
    }
}

/// Render a context for error messages and JSON dumps.
pub fn render_context(ctx: &[GraphTerm]) -> String {
    let parts: Vec<String> = ctx.iter().map(render_term).collect();
    format!("[{}]", parts.join(", "))
}

fn eval_term(
    frame: &VariantFrame,
    ctx: &mut Context,
    t: &GraphTerm,
) -> Result<u8, VariantError> {
    match t {
        GraphTerm::Lit(s) => frame.local(ctx, s),
        GraphTerm::Set(ms) => {
            let mut v = 1;
            for m in ms {
                v &= eval_term(frame, ctx, m)?;
            }
            Ok(v)
        }
        GraphTerm::Seq(es) => {
            let base = ctx.len();
            let mut v = 1;
            for e in es {
                v &= eval_term(frame, ctx, e)?;
                ctx.push(e.clone());
            }
            ctx.truncate(base);
            Ok(v)
        }
    }
}

fn eval_expansion(frame: &VariantFrame, f: &Formula) -> Result<u8, VariantError> {
    match f {
        Formula::And(l, r) => Ok(eval_expansion(frame, l)? & eval_expansion(frame, r)?),
        Formula::Or(l, r) => Ok(eval_expansion(frame, l)? | eval_expansion(frame, r)?),
        Formula::Atom(_) | Formula::Gtr(..) => {
            eval_term(frame, &mut Vec::new(), &compress(&map_term(f)))
        }
        Formula::Not(_) => Err(VariantError::NotUnitGraphExpansion),
    }
}

/// Evaluate a formula in unit graph expansion under a frame.
pub fn variant_evaluate(frame: &VariantFrame, f: &Formula) -> Result<u8, VariantError> {
    if !crate::grammar::is_unit_graph_expansion(f) {
        return Err(VariantError::NotUnitGraphExpansion);
    }
    eval_expansion(frame, f)
}

fn collect_term(ctx: &mut Context, t: &GraphTerm, out: &mut BTreeSet<(Context, String)>) {
    match t {
        GraphTerm::Lit(s) => {
            if let Some(pair) = s.pair_name() {
                out.insert((ctx.clone(), pair.to_string()));
            }
        }
        GraphTerm::Set(ms) => {
            for m in ms {
                collect_term(ctx, m, out);
            }
        }
        GraphTerm::Seq(es) => {
            let base = ctx.len();
            for e in es {
                collect_term(ctx, e, out);
                ctx.push(e.clone());
            }
            ctx.truncate(base);
        }
    }
}

/// All query points a formula in unit graph expansion can read.
pub fn query_points_of_expansion(f: &Formula) -> BTreeSet<(Context, String)> {
    fn walk(f: &Formula, out: &mut BTreeSet<(Context, String)>) {
        match f {
            Formula::And(l, r) | Formula::Or(l, r) => {
                walk(l, out);
                walk(r, out);
            }
            Formula::Atom(_) | Formula::Gtr(..) => {
                collect_term(&mut Vec::new(), &compress(&map_term(f)), out);
            }
            Formula::Not(_) => unreachable!("callers check for unit graph expansion"),
        }
    }
    let mut out = BTreeSet::new();
    walk(f, &mut out);
    out
}

/// Normalize, then report every query point the normal form can read.
pub fn variant_query_points(
    f: &Formula,
) -> Result<BTreeSet<(Context, String)>, VariantError> {
    let n = variant_normalize(f, &Strategy::LeftmostInnermost)?;
    Ok(query_points_of_expansion(&n))
}

/// Query points as JSON: a list of `{context, pair}` objects.
pub fn query_points_json(points: &BTreeSet<(Context, String)>) -> serde_json::Value {
    let items: Vec<serde_json::Value> = points
        .iter()
        .map(|(ctx, pair)| {
            serde_json::json!({
                "context": ctx.iter().map(render_term).collect::<Vec<_>>(),
                "pair": pair,
            })
        })
        .collect();
    serde_json::Value::Array(items)
}

/// Outcome of an oracle run: the verdict bit and how many assignments were
/// evaluated before it was reached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariantOracleRun {
    pub result: u8,
    pub frames_checked: u64,
}

fn check_budget(npoints: usize, budget_bits: u32) -> Result<(), VariantError> {
    if npoints as u64 > u64::from(budget_bits) {
        return Err(VariantError::BudgetExceeded {
            bits_needed: npoints as u64,
            budget_bits,
        });
    }
    Ok(())
}

/// The assignment numbered `mask` over `points`: point `j` reads bit
/// `npoints-1-j` of `mask`, so the first point is the most significant bit
/// and assignment 0 is all-zeros.
fn frame_for_mask(points: &[(Context, String)], mask: u64) -> VariantFrame {
    let n = points.len();
    let bits = points
        .iter()
        .enumerate()
        .map(|(j, p)| (p.clone(), mask >> (n - 1 - j) & 1 == 1))
        .collect();
    VariantFrame::new(bits)
}

/// An expansion lowered onto the index space of a fixed point list: every
/// literal read becomes a point index, so enumerating assignments needs no
/// frame construction and no map lookups.
enum Compiled {
    Point { idx: usize, flip: bool },
    Both(Box<Compiled>, Box<Compiled>),
    Either(Box<Compiled>, Box<Compiled>),
}

impl Compiled {
    /// Value under the assignment numbered `mask`, with the same bit layout
    /// as [`frame_for_mask`].
    fn eval(&self, mask: u64, npoints: usize) -> bool {
        match self {
            Compiled::Point { idx, flip } => (mask >> (npoints - 1 - idx) & 1 == 1) != *flip,
            Compiled::Both(l, r) => l.eval(mask, npoints) && r.eval(mask, npoints),
            Compiled::Either(l, r) => l.eval(mask, npoints) || r.eval(mask, npoints),
        }
    }
}

fn compile_term(
    index: &BTreeMap<(Context, String), usize>,
    ctx: &mut Context,
    t: &GraphTerm,
) -> Compiled {
    match t {
        GraphTerm::Lit(s) => {
            let SElem::Lit { name, complemented } = s else {
                unreachable!("expansion terms hold literals only");
            };
            let idx = index[&(ctx.clone(), name.clone())];
            Compiled::Point {
                idx,
                flip: *complemented,
            }
        }
        GraphTerm::Set(ms) => ms
            .iter()
            .map(|m| compile_term(index, ctx, m))
            .reduce(|l, r| Compiled::Both(Box::new(l), Box::new(r)))
            .expect("set terms are nonempty"),
        GraphTerm::Seq(es) => {
            let base = ctx.len();
            let compiled = es
                .iter()
                .map(|e| {
                    let c = compile_term(index, ctx, e);
                    ctx.push(e.clone());
                    c
                })
                .reduce(|l, r| Compiled::Both(Box::new(l), Box::new(r)))
                .expect("sequence terms are nonempty");
            ctx.truncate(base);
            compiled
        }
    }
}

fn compile_expansion(index: &BTreeMap<(Context, String), usize>, f: &Formula) -> Compiled {
    match f {
        Formula::And(l, r) => Compiled::Both(
            Box::new(compile_expansion(index, l)),
            Box::new(compile_expansion(index, r)),
        ),
        Formula::Or(l, r) => Compiled::Either(
            Box::new(compile_expansion(index, l)),
            Box::new(compile_expansion(index, r)),
        ),
        Formula::Atom(_) | Formula::Gtr(..) => {
            compile_term(index, &mut Vec::new(), &compress(&map_term(f)))
        }
        Formula::Not(_) => unreachable!("input checked to be an expansion"),
    }
}

fn point_index(points: &[(Context, String)]) -> BTreeMap<(Context, String), usize> {
    points
        .iter()
        .enumerate()
        .map(|(j, p)| (p.clone(), j))
        .collect()
}

fn oracle_run(
    f: &Formula,
    budget_bits: u32,
    stop_on: u8,
) -> Result<VariantOracleRun, VariantError> {
    let n = variant_normalize(f, &Strategy::LeftmostInnermost)?;
    let points: Vec<(Context, String)> = query_points_of_expansion(&n).into_iter().collect();
    check_budget(points.len(), budget_bits)?;
    let compiled = compile_expansion(&point_index(&points), &n);
    let stop = stop_on == 1;
    let total: u64 = 1 << points.len();
    let mut frames_checked = 0;
    for mask in 0..total {
        frames_checked += 1;
        if compiled.eval(mask, points.len()) == stop {
            return Ok(VariantOracleRun {
                result: stop_on,
                frames_checked,
            });
        }
    }
    Ok(VariantOracleRun {
        result: 1 - stop_on,
        frames_checked,
    })
}

/// Brute-force validity: 1 iff the formula holds under every assignment to
/// its query points.
pub fn variant_brute_valid_counted(
    f: &Formula,
    budget_bits: u32,
) -> Result<VariantOracleRun, VariantError> {
    oracle_run(f, budget_bits, 0)
}

/// Brute-force satisfiability: 1 iff some assignment satisfies the formula.
pub fn variant_brute_sat_counted(
    f: &Formula,
    budget_bits: u32,
) -> Result<VariantOracleRun, VariantError> {
    oracle_run(f, budget_bits, 1)
}

pub fn variant_brute_valid(f: &Formula) -> Result<u8, VariantError> {
    Ok(variant_brute_valid_counted(f, DEFAULT_VARIANT_BUDGET_BITS)?.result)
}

pub fn variant_brute_sat(f: &Formula) -> Result<u8, VariantError> {
    Ok(variant_brute_sat_counted(f, DEFAULT_VARIANT_BUDGET_BITS)?.result)
}

/// The first assignment (in mask order) giving the two formulas different
/// values, as a frame over their joint query points; `None` when they agree
/// everywhere.
pub fn variant_value_equal_witness(
    f1: &Formula,
    f2: &Formula,
    budget_bits: u32,
) -> Result<Option<VariantFrame>, VariantError> {
    let n1 = variant_normalize(f1, &Strategy::LeftmostInnermost)?;
    let n2 = variant_normalize(f2, &Strategy::LeftmostInnermost)?;
    let mut joint = query_points_of_expansion(&n1);
    joint.extend(query_points_of_expansion(&n2));
    let points: Vec<(Context, String)> = joint.into_iter().collect();
    check_budget(points.len(), budget_bits)?;
    let index = point_index(&points);
    let c1 = compile_expansion(&index, &n1);
    let c2 = compile_expansion(&index, &n2);
    let total: u64 = 1 << points.len();
    for mask in 0..total {
        if c1.eval(mask, points.len()) != c2.eval(mask, points.len()) {
            return Ok(Some(frame_for_mask(&points, mask)));
        }
    }
    Ok(None)
}

/// Whether two constant-free formulas take the same value under every
/// assignment to their joint query points.
pub fn variant_value_equal(
    f1: &Formula,
    f2: &Formula,
    budget_bits: u32,
) -> Result<bool, VariantError> {
    Ok(variant_value_equal_witness(f1, f2, budget_bits)?.is_none())
}
