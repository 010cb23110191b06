//! Lexer and recursive-descent parser for the infix syntax.

use glc_formula_core::{Formula, SElem};

use crate::{ParseError, SourceSpan};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Lit { name: String, complemented: bool },
    Top,
    Bot,
    Not,
    And,
    Or,
    Gtr,
    Arrow,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    span: SourceSpan,
}

fn lex(src: &str) -> Result<Vec<Spanned>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let start = i;
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
            }
            '~' | '&' | '|' | '(' | ')' => {
                i += 1;
                let tok = match c {
                    '~' => Tok::Not,
                    '&' => Tok::And,
                    '|' => Tok::Or,
                    '(' => Tok::LParen,
                    _ => Tok::RParen,
                };
                out.push(Spanned {
                    tok,
                    span: SourceSpan::new(start, i),
                });
            }
            '>' => {
                i += 1;
                out.push(Spanned {
                    tok: Tok::Gtr,
                    span: SourceSpan::new(start, i),
                });
            }
            '-' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    i += 2;
                    out.push(Spanned {
                        tok: Tok::Arrow,
                        span: SourceSpan::new(start, i),
                    });
                } else {
                    return Err(ParseError::new(
                        "expected '>' after '-'",
                        SourceSpan::new(start, start + 1),
                    ));
                }
            }
            'a'..='z' => {
                i += 1;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                let name = &src[start..i];
                let tok = match name {
                    "top" => Tok::Top,
                    "bot" => Tok::Bot,
                    _ => {
                        let complemented = bytes.get(i) == Some(&b'\'');
                        if complemented {
                            i += 1;
                        }
                        Tok::Lit {
                            name: name.to_string(),
                            complemented,
                        }
                    }
                };
                out.push(Spanned {
                    tok,
                    span: SourceSpan::new(start, i),
                });
            }
            _ => {
                return Err(ParseError::new(
                    format!("unexpected character '{c}'"),
                    SourceSpan::new(start, start + 1),
                ));
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<Spanned> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn here(&self) -> SourceSpan {
        self.peek()
            .map(|t| t.span)
            .unwrap_or(SourceSpan::new(self.end, self.end))
    }

    /// implication layer, right associative, desugars on the spot
    fn formula(&mut self) -> Result<Formula, ParseError> {
        let l = self.attribution()?;
        if matches!(self.peek().map(|t| &t.tok), Some(Tok::Arrow)) {
            self.bump();
            let r = self.formula()?;
            return Ok(Formula::implies(l, r));
        }
        Ok(l)
    }

    /// attribution layer, right associative
    fn attribution(&mut self) -> Result<Formula, ParseError> {
        let l = self.junction()?;
        if matches!(self.peek().map(|t| &t.tok), Some(Tok::Gtr)) {
            self.bump();
            let r = self.attribution()?;
            return Ok(Formula::gtr(l, r));
        }
        Ok(l)
    }

    /// `&`/`|` layer: chains of one operator fold left; mixing is an error
    fn junction(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.unary()?;
        let first_op = match self.peek().map(|t| &t.tok) {
            Some(Tok::And) => Some(Tok::And),
            Some(Tok::Or) => Some(Tok::Or),
            _ => None,
        };
        let Some(op) = first_op else {
            return Ok(acc);
        };
        loop {
            match self.peek().map(|t| (t.tok.clone(), t.span)) {
                Some((Tok::And, span)) => {
                    if op != Tok::And {
                        return Err(ParseError::new(
                            "mixing '&' and '|' needs parentheses",
                            span,
                        ));
                    }
                    self.bump();
                    let r = self.unary()?;
                    acc = Formula::and(acc, r);
                }
                Some((Tok::Or, span)) => {
                    if op != Tok::Or {
                        return Err(ParseError::new(
                            "mixing '&' and '|' needs parentheses",
                            span,
                        ));
                    }
                    self.bump();
                    let r = self.unary()?;
                    acc = Formula::or(acc, r);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().map(|t| (t.tok.clone(), t.span)) {
            Some((Tok::Not, _)) => {
                self.bump();
                Ok(Formula::not(self.unary()?))
            }
            Some((Tok::LParen, open)) => {
                self.bump();
                let inner = self.formula()?;
                match self.bump() {
                    Some(Spanned {
                        tok: Tok::RParen, ..
                    }) => Ok(inner),
                    Some(t) => Err(ParseError::new("expected ')'", t.span)),
                    None => Err(ParseError::new("unclosed '('", open)),
                }
            }
            Some((Tok::Lit { name, complemented }, _)) => {
                self.bump();
                Ok(Formula::Atom(SElem::Lit { name, complemented }))
            }
            Some((Tok::Top, _)) => {
                self.bump();
                Ok(Formula::top())
            }
            Some((Tok::Bot, _)) => {
                self.bump();
                Ok(Formula::bot())
            }
            Some((_, span)) => Err(ParseError::new("expected a formula", span)),
            None => Err(ParseError::new("expected a formula", self.here())),
        }
    }
}

/// Parse the infix syntax. See the crate docs for the grammar.
pub fn parse_infix(src: &str) -> Result<Formula, ParseError> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: src.len(),
    };
    let f = p.formula()?;
    if let Some(t) = p.peek() {
        return Err(ParseError::new("unexpected trailing input", t.span));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lit(n: &str) -> Formula {
        Formula::lit(n)
    }

    #[test]
    fn junctions_bind_tighter_than_attribution() {
        assert_eq!(
            parse_infix("hat > green & brooch").unwrap(),
            Formula::gtr(lit("hat"), Formula::and(lit("green"), lit("brooch")))
        );
        assert_eq!(
            parse_infix("hat & shirt > yellow").unwrap(),
            Formula::gtr(Formula::and(lit("hat"), lit("shirt")), lit("yellow"))
        );
    }

    #[test]
    fn attribution_is_right_associative() {
        assert_eq!(
            parse_infix("a > b > c").unwrap(),
            Formula::gtr(lit("a"), Formula::gtr(lit("b"), lit("c")))
        );
    }

    #[test]
    fn implication_desugars_right_associatively() {
        assert_eq!(
            parse_infix("a -> b -> c").unwrap(),
            Formula::implies(lit("a"), Formula::implies(lit("b"), lit("c")))
        );
        // `->` binds loosest.
        assert_eq!(
            parse_infix("a > b -> c").unwrap(),
            Formula::implies(Formula::gtr(lit("a"), lit("b")), lit("c"))
        );
    }

    #[test]
    fn negation_binds_tightest() {
        assert_eq!(
            parse_infix("~a & b").unwrap(),
            Formula::and(Formula::not(lit("a")), lit("b"))
        );
        assert_eq!(
            parse_infix("~~a'").unwrap(),
            Formula::not(Formula::not(Formula::comp("a")))
        );
    }

    #[test]
    fn same_junction_chains_fold_left() {
        assert_eq!(
            parse_infix("a & b & c").unwrap(),
            Formula::and(Formula::and(lit("a"), lit("b")), lit("c"))
        );
    }

    #[test]
    fn mixed_junctions_error_with_span() {
        let err = parse_infix("a & b | c").unwrap_err();
        assert!(err.message.contains("parentheses"));
        assert_eq!((err.span.start, err.span.end), (6, 7));
        // Parenthesised mixing is fine.
        assert!(parse_infix("(a & b) | c").is_ok());
    }

    #[test]
    fn keywords_and_complements() {
        assert_eq!(parse_infix("top").unwrap(), Formula::top());
        assert_eq!(parse_infix("bot > a").unwrap(), Formula::gtr(Formula::bot(), lit("a")));
        assert_eq!(parse_infix("topaz").unwrap(), lit("topaz"));
        assert_eq!(parse_infix("hat_2'").unwrap(), Formula::comp("hat_2"));
    }

    #[test]
    fn error_spans_point_at_offenders() {
        let err = parse_infix("a @ b").unwrap_err();
        assert_eq!(err.span.start, 2);
        let err = parse_infix("(a & b").unwrap_err();
        assert_eq!(err.message, "unclosed '('");
        let err = parse_infix("a b").unwrap_err();
        assert_eq!(err.message, "unexpected trailing input");
        assert!(parse_infix("").is_err());
        // Constants have no complemented spelling.
        let err = parse_infix("top'").unwrap_err();
        assert!(err.message.contains("unexpected character"));
    }
}
