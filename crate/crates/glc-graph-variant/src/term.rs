//! Canonical terms denoting chain structure.
//!
//! A literal or unit graph chain maps to a [`GraphTerm`]: literals become
//! one-element sequences, conjunctive heads become unordered sets, and `>`
//! concatenates. [`compress`] canonicalizes: sequences splice into enclosing
//! sequences, sets splice into enclosing sets (conjunction is associative),
//! set members are sorted and deduplicated, and a one-member set collapses
//! to that member. Two chains denote the same observation exactly when
//! their compressed terms are equal.

use glc_formula_core::{Formula, SElem};

/// A canonical description of a chain: a literal, an ordered sequence, or an
/// unordered set. `Set` members are kept sorted and unique so that derived
/// equality is set equality.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GraphTerm {
    Lit(SElem),
    Seq(Vec<GraphTerm>),
    Set(Vec<GraphTerm>),
}

/// Translate a literal or unit graph chain to its (uncompressed) term:
/// `map(a) = Seq[Lit a]`, `map(l & r) = Set{map l, map r}`,
/// `map(l > r) = Seq[map l, map r]`.
///
/// Callers must pass a literal or unit graph chain.
pub fn map_term(g: &Formula) -> GraphTerm {
    match g {
        Formula::Atom(s @ SElem::Lit { .. }) => GraphTerm::Seq(vec![GraphTerm::Lit(s.clone())]),
        Formula::And(l, r) => GraphTerm::Set(vec![map_term(l), map_term(r)]),
        Formula::Gtr(l, r) => GraphTerm::Seq(vec![map_term(l), map_term(r)]),
        _ => panic!("map_term expects a literal or unit graph chain"),
    }
}

/// Rewrite a term to its canonical form (see module docs). Idempotent.
pub fn compress(t: &GraphTerm) -> GraphTerm {
    match t {
        GraphTerm::Lit(s) => GraphTerm::Lit(s.clone()),
        GraphTerm::Seq(es) => {
            let mut out = Vec::new();
            for e in es {
                match compress(e) {
                    GraphTerm::Seq(inner) => out.extend(inner),
                    other => out.push(other),
                }
            }
            GraphTerm::Seq(out)
        }
        GraphTerm::Set(ms) => {
            let mut out = Vec::new();
            for m in ms {
                match compress(m) {
                    GraphTerm::Set(inner) => out.extend(inner),
                    other => out.push(other),
                }
            }
            out.sort();
            out.dedup();
            if out.len() == 1 {
                out.pop().expect("just checked length")
            } else {
                GraphTerm::Set(out)
            }
        }
    }
}

/// ASCII rendering: literals as themselves, sequences as `seq[...]`, sets as
/// `set{...}`.
pub fn render_term(t: &GraphTerm) -> String {
    match t {
        GraphTerm::Lit(s) => s.to_string(),
        GraphTerm::Seq(es) => {
            let parts: Vec<String> = es.iter().map(render_term).collect();
            format!("seq[{}]", parts.join(", "))
        }
        GraphTerm::Set(ms) => {
            let parts: Vec<String> = ms.iter().map(render_term).collect();
            format!("set{{{}}}", parts.join(", "))
        }
    }
}
