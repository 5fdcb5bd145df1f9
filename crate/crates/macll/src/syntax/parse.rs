//! Recursive-descent parser for the ASCII formula and sequent syntax.
//!
//! Binary connectives are nonassociative in the grammar itself: a chain like
//! `a * b * c` is rejected and must be parenthesized, mirroring the logic.

use super::{Formula, Sequent, Structure, Symbols};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("ambiguous chain of binary operators at byte {pos}: parenthesize explicitly")]
    AmbiguousChain { pos: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    LParen,
    RParen,
    Comma,
    Turnstile,
    Bang,
    Star,
    Backslash,
    Slash,
    One,
    Ident(String),
    PVar(u32),
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '(' => {
                out.push((Tok::LParen, i));
                i += 1;
            }
            ')' => {
                out.push((Tok::RParen, i));
                i += 1;
            }
            ',' => {
                out.push((Tok::Comma, i));
                i += 1;
            }
            '!' => {
                out.push((Tok::Bang, i));
                i += 1;
            }
            '*' => {
                out.push((Tok::Star, i));
                i += 1;
            }
            '\\' => {
                out.push((Tok::Backslash, i));
                i += 1;
            }
            '/' => {
                out.push((Tok::Slash, i));
                i += 1;
            }
            '|' => {
                if bytes.get(i + 1) == Some(&b'-') {
                    out.push((Tok::Turnstile, i));
                    i += 2;
                } else {
                    return Err(ParseError::Syntax {
                        pos: i,
                        msg: "expected '|-'".into(),
                    });
                }
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &text[start..i];
                if digits == "1" {
                    out.push((Tok::One, start));
                } else {
                    return Err(ParseError::Syntax {
                        pos: start,
                        msg: format!("unexpected number '{digits}' (only the unit '1' is allowed)"),
                    });
                }
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                let word = &text[start..i];
                let rest = &word[1..];
                if word.starts_with('p') && !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit())
                {
                    let index: u32 = rest.parse().map_err(|_| ParseError::Syntax {
                        pos: start,
                        msg: format!("variable index out of range in '{word}'"),
                    })?;
                    out.push((Tok::PVar(index), start));
                } else {
                    out.push((Tok::Ident(word.to_string()), start));
                }
            }
            other => {
                return Err(ParseError::Syntax {
                    pos: i,
                    msg: format!("unexpected character '{other}'"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    symbols: &'a mut Symbols,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected {what}")))
        }
    }

    fn err(&self, msg: &str) -> ParseError {
        ParseError::Syntax {
            pos: self.here(),
            msg: msg.to_string(),
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let left = self.unary()?;
        let op = match self.peek() {
            Some(Tok::Star) => Some(Tok::Star),
            Some(Tok::Backslash) => Some(Tok::Backslash),
            Some(Tok::Slash) => Some(Tok::Slash),
            _ => None,
        };
        let Some(op) = op else { return Ok(left) };
        self.pos += 1;
        let right = self.unary()?;
        if matches!(
            self.peek(),
            Some(Tok::Star) | Some(Tok::Backslash) | Some(Tok::Slash)
        ) {
            return Err(ParseError::AmbiguousChain { pos: self.here() });
        }
        Ok(match op {
            Tok::Star => Formula::tensor(left, right),
            // `a \ b`: argument a consumed on the left
            Tok::Backslash => Formula::rimpl(left, right),
            // `b / a`: argument a consumed on the right
            Tok::Slash => Formula::limpl(left, right),
            _ => unreachable!(),
        })
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        if self.peek() == Some(&Tok::Bang) {
            self.pos += 1;
            return Ok(Formula::bang(self.unary()?));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        match self.bump() {
            Some(Tok::One) => Ok(Formula::Unit),
            Some(Tok::Ident(name)) => Ok(Formula::Var(self.symbols.intern_name(&name))),
            Some(Tok::PVar(i)) => {
                self.symbols.reserve_index(i);
                Ok(Formula::Var(i))
            }
            Some(Tok::LParen) => {
                let f = self.formula()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(f)
            }
            _ => Err(self.err("expected a formula")),
        }
    }

    fn structure(&mut self) -> Result<Structure, ParseError> {
        if self.peek() == Some(&Tok::LParen) {
            // "()" is the empty structure
            if self.toks.get(self.pos + 1).map(|(t, _)| t) == Some(&Tok::RParen) {
                self.pos += 2;
                return Ok(Structure::Empty);
            }
            // try "(" structure "," structure ")"
            let save = self.pos;
            self.pos += 1;
            if let Ok(first) = self.structure() {
                if self.peek() == Some(&Tok::Comma) {
                    self.pos += 1;
                    let second = self.structure()?;
                    self.expect(Tok::RParen, "')'")?;
                    return Ok(Structure::node(first, second));
                }
            }
            self.pos = save;
        }
        Ok(Structure::leaf(self.formula()?))
    }
}

/// Parse a formula, interning named atoms through `symbols`.
pub fn parse_formula(text: &str, symbols: &mut Symbols) -> Result<Formula, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
        symbols,
    };
    let f = p.formula()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input after formula"));
    }
    Ok(f)
}

/// Parse a structure alone (no turnstile).
pub fn parse_structure(text: &str, symbols: &mut Symbols) -> Result<Structure, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
        symbols,
    };
    let g = p.structure()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input after structure"));
    }
    Ok(g)
}

/// Parse `structure |- formula`, normalizing empty children away.
pub fn parse_sequent(text: &str, symbols: &mut Symbols) -> Result<Sequent, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
        symbols,
    };
    let antecedent = p.structure()?;
    p.expect(Tok::Turnstile, "'|-'")?;
    let succedent = p.formula()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input after sequent"));
    }
    Ok(Sequent::new(antecedent, succedent))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::display_sequent;

    fn syms() -> Symbols {
        Symbols::new()
    }

    #[test]
    fn parses_bang_tightest() {
        let mut s = syms();
        let f = parse_formula("!a * b", &mut s).unwrap();
        let a = s.index_of("a").unwrap();
        let b = s.index_of("b").unwrap();
        assert_eq!(
            f,
            Formula::tensor(Formula::bang(Formula::var(a)), Formula::var(b))
        );
    }

    #[test]
    fn parses_nested_slashes() {
        let mut s = syms();
        let f = parse_formula("a \\ (s / b)", &mut s).unwrap();
        let a = Formula::var(s.index_of("a").unwrap());
        let sv = Formula::var(s.index_of("s").unwrap());
        let b = Formula::var(s.index_of("b").unwrap());
        assert_eq!(f, Formula::rimpl(a, Formula::limpl(sv, b)));
    }

    #[test]
    fn rejects_unparenthesized_chain() {
        let mut s = syms();
        let e = parse_formula("a * b * c", &mut s).unwrap_err();
        assert!(matches!(e, ParseError::AmbiguousChain { .. }));
        let e = parse_formula("a * b \\ c", &mut s).unwrap_err();
        assert!(matches!(e, ParseError::AmbiguousChain { .. }));
    }

    #[test]
    fn parses_sequents() {
        let mut s = syms();
        let q = parse_sequent("(a, b) |- a * b", &mut s).unwrap();
        let a = Formula::var(s.index_of("a").unwrap());
        let b = Formula::var(s.index_of("b").unwrap());
        assert_eq!(
            q.antecedent,
            Structure::node(Structure::leaf(a.clone()), Structure::leaf(b.clone()))
        );
        assert_eq!(q.succedent, Formula::tensor(a, b));

        let q = parse_sequent("() |- 1", &mut s).unwrap();
        assert_eq!(q.antecedent, Structure::Empty);
        assert_eq!(q.succedent, Formula::Unit);
    }

    #[test]
    fn empty_children_normalize_in_sequents() {
        let mut s = syms();
        let q = parse_sequent("((a, ()), b) |- c", &mut s).unwrap();
        let a = Formula::var(s.index_of("a").unwrap());
        let b = Formula::var(s.index_of("b").unwrap());
        assert_eq!(
            q.antecedent,
            Structure::node(Structure::leaf(a), Structure::leaf(b))
        );
    }

    #[test]
    fn explicit_variables_reserve_indices() {
        let mut s = syms();
        let f = parse_formula("p3", &mut s).unwrap();
        assert_eq!(f, Formula::var(3));
        // a named atom allocated afterwards avoids the reserved index
        parse_formula("p0", &mut s).unwrap();
        let g = parse_formula("x", &mut s).unwrap();
        assert_eq!(g, Formula::var(1));
    }

    #[test]
    fn print_then_parse_is_identity_on_sequents() {
        let mut s = syms();
        for text in [
            "(a, b) |- a * b",
            "() |- 1",
            "!a |- (a * b) / b",
            "((a, b), !(a \\ b)) |- 1",
            "(p0, p4) |- p2",
        ] {
            let q = parse_sequent(text, &mut s).unwrap();
            let printed = display_sequent(&q, Some(&s));
            let q2 = parse_sequent(&printed, &mut s).unwrap();
            assert_eq!(q, q2, "roundtrip failed for {text} -> {printed}");
        }
    }
}
