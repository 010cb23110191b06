//! Parser for the compact prefix syntax used by template tables.
//!
//! Grammar: `!E` negates, `*(E)(E)` conjoins, `+(E)(E)` disjoins, `%(E)(E)`
//! attributes. Leaves are lower-case literals (optionally `'`-complemented)
//! or single upper-case placeholder letters, which only
//! [`parse_prefix_with`] accepts — it splices in the caller's substitution.

use std::collections::BTreeMap;

use glc_formula_core::{Formula, SElem};

use crate::{ParseError, SourceSpan};

struct P<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
    subst: Option<&'a BTreeMap<char, Formula>>,
}

impl<'a> P<'a> {
    fn skip_ws(&mut self) {
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn here(&self, len: usize) -> SourceSpan {
        SourceSpan::new(self.pos, self.pos + len)
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        self.skip_ws();
        if self.bytes.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(ParseError::new(
                format!("expected '{}'", c as char),
                self.here(1),
            ))
        }
    }

    fn binary(&mut self) -> Result<(Formula, Formula), ParseError> {
        self.expect(b'(')?;
        let l = self.expr()?;
        self.expect(b')')?;
        self.expect(b'(')?;
        let r = self.expr()?;
        self.expect(b')')?;
        Ok((l, r))
    }

    fn expr(&mut self) -> Result<Formula, ParseError> {
        self.skip_ws();
        let start = self.pos;
        match self.bytes.get(self.pos).copied() {
            Some(b'!') => {
                self.pos += 1;
                Ok(Formula::not(self.expr()?))
            }
            Some(b'*') => {
                self.pos += 1;
                let (l, r) = self.binary()?;
                Ok(Formula::and(l, r))
            }
            Some(b'+') => {
                self.pos += 1;
                let (l, r) = self.binary()?;
                Ok(Formula::or(l, r))
            }
            Some(b'%') => {
                self.pos += 1;
                let (l, r) = self.binary()?;
                Ok(Formula::gtr(l, r))
            }
            Some(c @ b'A'..=b'Z') => {
                self.pos += 1;
                let ch = c as char;
                match self.subst.and_then(|m| m.get(&ch)) {
                    Some(f) => Ok(f.clone()),
                    None => Err(ParseError::new(
                        format!("placeholder '{ch}' has no substitution"),
                        SourceSpan::new(start, self.pos),
                    )),
                }
            }
            Some(b'a'..=b'z') => {
                self.pos += 1;
                while self
                    .bytes
                    .get(self.pos)
                    .is_some_and(|b| b.is_ascii_alphanumeric() || *b == b'_')
                {
                    self.pos += 1;
                }
                let name = self.src[start..self.pos].to_string();
                let complemented = self.bytes.get(self.pos) == Some(&b'\'');
                if complemented {
                    self.pos += 1;
                }
                Ok(Formula::Atom(SElem::Lit { name, complemented }))
            }
            Some(c) => Err(ParseError::new(
                format!("unexpected character '{}'", c as char),
                self.here(1),
            )),
            None => Err(ParseError::new("expected an expression", self.here(0))),
        }
    }
}

fn run(src: &str, subst: Option<&BTreeMap<char, Formula>>) -> Result<Formula, ParseError> {
    let mut p = P {
        src,
        bytes: src.as_bytes(),
        pos: 0,
        subst,
    };
    let f = p.expr()?;
    p.skip_ws();
    if p.pos != src.len() {
        return Err(ParseError::new(
            "unexpected trailing input",
            SourceSpan::new(p.pos, src.len()),
        ));
    }
    Ok(f)
}

/// Parse the prefix syntax; placeholders are rejected.
pub fn parse_prefix(src: &str) -> Result<Formula, ParseError> {
    run(src, None)
}

/// Parse the prefix syntax, replacing each upper-case placeholder with its
/// formula from `subst`. Missing placeholders are errors.
pub fn parse_prefix_with(
    src: &str,
    subst: &BTreeMap<char, Formula>,
) -> Result<Formula, ParseError> {
    run(src, Some(subst))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_nested_templates() {
        let f = parse_prefix("+(s')(%(s)(!t))").unwrap();
        assert_eq!(
            f,
            Formula::or(
                Formula::comp("s"),
                Formula::gtr(Formula::lit("s"), Formula::not(Formula::lit("t")))
            )
        );
    }

    #[test]
    fn placeholders_need_a_substitution() {
        assert!(parse_prefix("!A").is_err());
        let mut m = BTreeMap::new();
        m.insert('A', Formula::and(Formula::lit("a"), Formula::lit("b")));
        assert_eq!(
            parse_prefix_with("!A", &m).unwrap(),
            Formula::not(Formula::and(Formula::lit("a"), Formula::lit("b")))
        );
        assert!(parse_prefix_with("*(A)(B)", &m).is_err());
    }

    #[test]
    fn whitespace_is_insignificant() {
        assert_eq!(
            parse_prefix(" %( a )( b ) ").unwrap(),
            Formula::gtr(Formula::lit("a"), Formula::lit("b"))
        );
    }

    #[test]
    fn trailing_input_is_rejected() {
        assert!(parse_prefix("a b").is_err());
        assert!(parse_prefix("*(a)(b)(c)").is_err());
    }
}
