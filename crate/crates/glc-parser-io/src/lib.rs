//! Text syntaxes and JSON records for formulas.
//!
//! Two concrete syntaxes are supported:
//!
//! * **infix** — `~` (negation), `&`, `|`, `>` (attribution, right
//!   associative), `->` (implication, desugared while parsing), parentheses,
//!   literals `[a-z][a-zA-Z0-9_]*` with a trailing `'` for the complement,
//!   and the keywords `top` / `bot`. Negation binds tightest, then `&`/`|`
//!   (equal precedence — mixing them without parentheses is a parse error),
//!   then `>`, then `->`.
//! * **prefix** — `!E`, `*(E)(E)`, `+(E)(E)`, `%(E)(E)` for negation,
//!   conjunction, disjunction, and attribution; single upper-case letters
//!   are template placeholders. Constants have no prefix spelling.
//!
//! Printing is the exact inverse of parsing: `parse(print(f)) == f`.

mod infix;
mod prefix;
mod print;
mod records;

pub use infix::parse_infix;
pub use prefix::{parse_prefix, parse_prefix_with};
pub use print::{print, print_infix, print_prefix, PrintError, Syntax};
pub use records::{
    DivergenceRecord, ErrorRecord, Mode, NormalizeRecord, ResultRecord, TraceStepRecord,
};

/// Byte range of a token or error inside the source text.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SourceSpan {
    pub start: usize,
    pub end: usize,
}

impl SourceSpan {
    pub fn new(start: usize, end: usize) -> Self {
        SourceSpan { start, end }
    }
}

/// A parse failure, with the byte span it points at.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{message} at {}..{}", span.start, span.end)]
pub struct ParseError {
    pub message: String,
    pub span: SourceSpan,
}

impl ParseError {
    pub(crate) fn new(message: impl Into<String>, span: SourceSpan) -> Self {
        ParseError {
            message: message.into(),
            span,
        }
    }
}
