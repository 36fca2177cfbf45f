//! Polynomial text format.
//!
//! ```text
//! expression := ('+'|'-')? term (('+'|'-') term)*
//! term       := factor ('*'? factor)*
//! factor     := atom ('^' integer)?
//! atom       := integer ('/' integer)? | identifier | '(' expression ')'
//! ```
//!
//! Identifiers are a letter followed by letters or digits and must be declared
//! in the [`VarTable`]. Whitespace is insignificant. This accepts a superset of
//! the canonical printed form produced by [`format_poly`].

use std::fmt::Write as _;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::poly::{Monomial, Poly, VarTable};
use crate::ring::Ring;

const MAX_EXPONENT: u32 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at position {position}")]
pub struct ParseError {
    /// Byte offset into the source string.
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character `{0}`")]
    UnexpectedChar(char),
    #[error("unexpected {found}, expected {expected}")]
    UnexpectedToken { found: String, expected: &'static str },
    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("coefficient {0} is not representable in the coefficient ring")]
    NotRepresentable(String),
    #[error("exponent too large")]
    ExponentTooLarge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("number `{n}`"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c.is_ascii_digit() {
            let mut end = pos;
            while let Some(&(i, d)) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                end = i + d.len_utf8();
                chars.next();
            }
            let n: BigInt = src[pos..end].parse().expect("digit run parses");
            out.push((pos, Tok::Int(n)));
            continue;
        }
        if c.is_alphabetic() {
            let mut end = pos;
            while let Some(&(i, d)) = chars.peek() {
                if !(d.is_alphanumeric()) {
                    break;
                }
                end = i + d.len_utf8();
                chars.next();
            }
            out.push((pos, Tok::Ident(src[pos..end].to_string())));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => return Err(ParseError { position: pos, kind: ParseErrorKind::UnexpectedChar(c) }),
        };
        out.push((pos, tok));
        chars.next();
    }
    out.push((src.len(), Tok::End));
    Ok(out)
}

struct Parser<'a, R: Ring> {
    ring: &'a R,
    table: &'a Arc<VarTable>,
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl<R: Ring> Parser<'_, R> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        ParseError {
            position: self.pos(),
            kind: ParseErrorKind::UnexpectedToken { found: self.peek().describe(), expected },
        }
    }

    fn expression(&mut self) -> Result<Poly<R>, ParseError> {
        let mut negate = false;
        match self.peek() {
            Tok::Plus => {
                self.bump();
            }
            Tok::Minus => {
                self.bump();
                negate = true;
            }
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { -first } else { first };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Tok::Int(_) | Tok::Ident(_) | Tok::LParen)
    }

    fn term(&mut self) -> Result<Poly<R>, ParseError> {
        if !self.starts_atom() {
            return Err(self.unexpected("a number, identifier or `(`"));
        }
        let mut acc = self.factor()?;
        loop {
            if matches!(self.peek(), Tok::Star) {
                self.bump();
                if !self.starts_atom() {
                    return Err(self.unexpected("a number, identifier or `(`"));
                }
            } else if !self.starts_atom() {
                return Ok(acc);
            }
            acc = &acc * &self.factor()?;
        }
    }

    fn factor(&mut self) -> Result<Poly<R>, ParseError> {
        let base = self.atom()?;
        if matches!(self.peek(), Tok::Caret) {
            self.bump();
            let pos = self.pos();
            let e = self.integer("an integer exponent")?;
            let e = u32::try_from(&e)
                .ok()
                .filter(|e| *e <= MAX_EXPONENT)
                .ok_or(ParseError { position: pos, kind: ParseErrorKind::ExponentTooLarge })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self, expected: &'static str) -> Result<BigInt, ParseError> {
        match self.peek() {
            Tok::Int(_) => match self.bump() {
                Tok::Int(n) => Ok(n),
                _ => unreachable!(),
            },
            _ => Err(self.unexpected(expected)),
        }
    }

    fn atom(&mut self) -> Result<Poly<R>, ParseError> {
        let pos = self.pos();
        if !self.starts_atom() {
            return Err(self.unexpected("a number, identifier or `(`"));
        }
        match self.bump() {
            Tok::Int(n) => {
                let mut value = self.ring.from_int(&n);
                if matches!(self.peek(), Tok::Slash) {
                    self.bump();
                    let dpos = self.pos();
                    let d = self.integer("a denominator")?;
                    if d.is_zero() {
                        return Err(ParseError { position: dpos, kind: ParseErrorKind::ZeroDenominator });
                    }
                    value = self.ring.div_exact(&value, &self.ring.from_int(&d)).ok_or_else(|| ParseError {
                        position: pos,
                        kind: ParseErrorKind::NotRepresentable(format!("{n}/{d}")),
                    })?;
                }
                Ok(Poly::constant(self.ring, self.table, value))
            }
            Tok::Ident(name) => {
                let i = self.table.index_of(&name).ok_or(ParseError {
                    position: pos,
                    kind: ParseErrorKind::UnknownIdentifier(name),
                })?;
                Ok(Poly::monomial(self.ring, self.table, Monomial::var(self.table.len(), i, 1), self.ring.one()))
            }
            Tok::LParen => {
                let inner = self.expression()?;
                if !matches!(self.peek(), Tok::RParen) {
                    return Err(self.unexpected("`)`"));
                }
                self.bump();
                Ok(inner)
            }
            _ => unreachable!(),
        }
    }
}

/// Parses `text` into a canonical polynomial over `table`.
pub fn parse_poly<R: Ring>(ring: &R, table: &Arc<VarTable>, text: &str) -> Result<Poly<R>, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser { ring, table, toks, at: 0 };
    let out = p.expression()?;
    if !matches!(p.peek(), Tok::End) {
        return Err(p.unexpected("an operator or end of input"));
    }
    Ok(out)
}

/// Identifiers occurring in `text`, in order of first appearance.
pub fn identifiers(text: &str) -> Result<Vec<String>, ParseError> {
    let mut out: Vec<String> = Vec::new();
    for (_, t) in tokenize(text)? {
        if let Tok::Ident(s) = t {
            if !out.contains(&s) {
                out.push(s);
            }
        }
    }
    Ok(out)
}

fn write_monomial(out: &mut String, table: &VarTable, m: &Monomial) {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(table.name(i));
        if e > 1 {
            write!(out, "^{e}").unwrap();
        }
    }
}

/// Canonical text: terms in descending graded-lex order, `" + "`/`" - "`
/// separators, unit coefficients elided, `"0"` for the zero polynomial.
pub fn format_poly<R: Ring>(p: &Poly<R>) -> String {
    let ring = p.ring();
    let mut out = String::new();
    for (k, (m, c)) in p.terms().rev().enumerate() {
        let negative = ring.is_negative(c);
        let mag = if negative { ring.neg(c) } else { c.clone() };
        match (k == 0, negative) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        if m.is_one() {
            write!(out, "{}", ring.display(&mag)).unwrap();
        } else {
            if !ring.is_one(&mag) {
                write!(out, "{}*", ring.display(&mag)).unwrap();
            }
            write_monomial(&mut out, p.table(), m);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
