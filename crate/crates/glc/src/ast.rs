//! JSON view of a formula's abstract syntax tree.

use glc_formula_core::{Formula, SElem};
use serde_json::{json, Value};

/// Encode a formula as a JSON tree.
///
/// Atoms become `{"atom": ...}` — an object with the pair name and
/// complement flag for literals, or the strings `"top"`/`"bot"` for the
/// constants. Each connective becomes a single-key object: `{"not": child}`,
/// `{"and": [l, r]}`, `{"or": [l, r]}`, `{"gtr": [l, r]}`.
pub fn ast_json(f: &Formula) -> Value {
    match f {
        Formula::Atom(SElem::Lit { name, complemented }) => {
            json!({"atom": {"name": name, "complemented": complemented}})
        }
        Formula::Atom(SElem::Top) => json!({"atom": "top"}),
        Formula::Atom(SElem::Bot) => json!({"atom": "bot"}),
        Formula::Not(c) => json!({"not": ast_json(c)}),
        Formula::And(l, r) => json!({"and": [ast_json(l), ast_json(r)]}),
        Formula::Or(l, r) => json!({"or": [ast_json(l), ast_json(r)]}),
        Formula::Gtr(l, r) => json!({"gtr": [ast_json(l), ast_json(r)]}),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_node_kind_has_a_json_spelling() {
        let f = Formula::gtr(
            Formula::and(Formula::lit("a"), Formula::comp("b")),
            Formula::not(Formula::or(Formula::top(), Formula::bot())),
        );
        assert_eq!(
            ast_json(&f).to_string(),
            r#"{"gtr":[{"and":[{"atom":{"complemented":false,"name":"a"}},{"atom":{"complemented":true,"name":"b"}}]},{"not":{"or":[{"atom":"top"},{"atom":"bot"}]}}]}"#
        );
    }
}
