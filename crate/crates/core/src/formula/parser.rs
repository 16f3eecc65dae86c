//! Recursive-descent parser for the formula grammar.
//!
//! Precedence, tightest first: `!`, `&`, `/\`, `\/`, `->` (right-assoc),
//! `<->`. Binary operators other than `->` associate to the left.

use super::Formula;
use crate::error::ParseError;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(u64),
    Bang,
    Amp,
    Wedge,
    Vee,
    Arrow,
    DArrow,
    LParen,
    RParen,
    Comma,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Num(n) => format!("`{n}`"),
            Tok::Bang => "`!`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Wedge => "`/\\`".into(),
            Tok::Vee => "`\\/`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::DArrow => "`<->`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let rest = &text[i..];
        let tok = if rest.starts_with("<->") {
            i += 3;
            Tok::DArrow
        } else if rest.starts_with("->") {
            i += 2;
            Tok::Arrow
        } else if rest.starts_with("/\\") {
            i += 2;
            Tok::Wedge
        } else if rest.starts_with("\\/") {
            i += 2;
            Tok::Vee
        } else {
            match c {
                b'!' => {
                    i += 1;
                    Tok::Bang
                }
                b'&' => {
                    i += 1;
                    Tok::Amp
                }
                b'(' => {
                    i += 1;
                    Tok::LParen
                }
                b')' => {
                    i += 1;
                    Tok::RParen
                }
                b',' => {
                    i += 1;
                    Tok::Comma
                }
                b'0'..=b'9' => {
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let n = text[start..i]
                        .parse()
                        .map_err(|_| ParseError::new(start, &["natural number"], &text[start..i]))?;
                    Tok::Num(n)
                }
                b'a'..=b'z' => {
                    while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                        i += 1;
                    }
                    Tok::Ident(text[start..i].to_string())
                }
                _ => {
                    let ch = rest.chars().next().unwrap();
                    return Err(ParseError::new(
                        start,
                        &["variable", "constant", "`!`", "`(`", "operator"],
                        format!("`{ch}`"),
                    ));
                }
            }
        };
        out.push((start, tok));
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

const FUNCTIONS: &[&str] = &["oplus", "uplus", "pow", "nsum", "nuplus"];

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        ParseError::new(self.offset(), expected, self.peek().describe())
    }

    fn expect(&mut self, tok: Tok, name: &str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[name]))
        }
    }

    fn iff(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.implication()?;
        while *self.peek() == Tok::DArrow {
            self.bump();
            let rhs = self.implication()?;
            lhs = Formula::iff(lhs, rhs);
        }
        Ok(lhs)
    }

    fn implication(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.join()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            let rhs = self.implication()?;
            return Ok(Formula::imp(lhs, rhs));
        }
        Ok(lhs)
    }

    fn join(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.meet()?;
        while *self.peek() == Tok::Vee {
            self.bump();
            lhs = Formula::join(lhs, self.meet()?);
        }
        Ok(lhs)
    }

    fn meet(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.conj()?;
        while *self.peek() == Tok::Wedge {
            self.bump();
            lhs = Formula::meet(lhs, self.conj()?);
        }
        Ok(lhs)
    }

    fn conj(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::Amp {
            self.bump();
            lhs = Formula::conj(lhs, self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        if *self.peek() == Tok::Bang {
            self.bump();
            return Ok(Formula::negation(self.unary()?));
        }
        self.primary()
    }

    fn count(&mut self) -> Result<u32, ParseError> {
        match self.peek().clone() {
            Tok::Num(n) if n >= 1 && n <= u32::MAX as u64 => {
                self.bump();
                Ok(n as u32)
            }
            _ => Err(self.error(&["positive natural number"])),
        }
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            Tok::LParen => {
                self.bump();
                let f = self.iff()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(f)
            }
            Tok::Num(0) => {
                self.bump();
                Ok(Formula::Bottom)
            }
            Tok::Num(1) => {
                self.bump();
                Ok(Formula::Top)
            }
            Tok::Ident(name) => {
                self.bump();
                if FUNCTIONS.contains(&name.as_str()) && *self.peek() == Tok::LParen {
                    self.bump();
                    let f = match name.as_str() {
                        "oplus" | "uplus" => {
                            let f = self.iff()?;
                            self.expect(Tok::Comma, "`,`")?;
                            let g = self.iff()?;
                            if name == "oplus" {
                                Formula::strong_disj(f, g)
                            } else {
                                Formula::vee_bar(f, g)
                            }
                        }
                        "pow" => {
                            let f = self.iff()?;
                            self.expect(Tok::Comma, "`,`")?;
                            Formula::power(f, self.count()?)
                        }
                        _ => {
                            let n = self.count()?;
                            self.expect(Tok::Comma, "`,`")?;
                            let f = self.iff()?;
                            if name == "nsum" {
                                Formula::nsum(n, f)
                            } else {
                                Formula::nuplus(n, f)
                            }
                        }
                    };
                    self.expect(Tok::RParen, "`)`")?;
                    Ok(f)
                } else {
                    Ok(Formula::Var(name))
                }
            }
            _ => Err(self.error(&["variable", "`0`", "`1`", "`!`", "`(`", "function"])),
        }
    }
}

/// Parses a formula. `render` of the result parses back to the same AST.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
    };
    let f = p.iff()?;
    if *p.peek() != Tok::End {
        return Err(p.error(&["operator", "end of input"]));
    }
    Ok(f)
}
