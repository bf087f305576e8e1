//! Text grammar for polynomial expressions.
//!
//! ```text
//! expr     := '-'? term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' uint)?
//! base     := rational | ident | '(' expr ')'
//! rational := int ('/' uint)?
//! ```
//!
//! Whitespace is insignificant. Identifiers are an ASCII letter followed by letters,
//! digits or underscores, and must name a chart variable.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::{Poly, Rational};
use crate::chart::ChartRef;
use crate::error::{Error, ParseError, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semicolon,
    Eof,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Int(n) => format!("number {n}"),
            Token::Ident(s) => format!("identifier \"{s}\""),
            Token::Eof => "end of input".into(),
            t => format!("'{}'", t.symbol()),
        }
    }

    fn symbol(&self) -> &'static str {
        match self {
            Token::Plus => "+",
            Token::Minus => "-",
            Token::Star => "*",
            Token::Slash => "/",
            Token::Caret => "^",
            Token::LParen => "(",
            Token::RParen => ")",
            Token::LBracket => "[",
            Token::RBracket => "]",
            Token::Comma => ",",
            Token::Semicolon => ";",
            _ => "",
        }
    }
}

/// Tokenizer shared by the polynomial, polyvector and matrix readers.
pub struct Lexer;

impl Lexer {
    pub fn tokenize(text: &str) -> Result<Vec<(Token, usize)>, ParseError> {
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
            let tok = match c {
                b'+' => Token::Plus,
                b'-' => Token::Minus,
                b'*' => Token::Star,
                b'/' => Token::Slash,
                b'^' => Token::Caret,
                b'(' => Token::LParen,
                b')' => Token::RParen,
                b'[' => Token::LBracket,
                b']' => Token::RBracket,
                b',' => Token::Comma,
                b';' => Token::Semicolon,
                b'0'..=b'9' => {
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let n: BigInt = text[start..i].parse().expect("digits");
                    out.push((Token::Int(n), start));
                    continue;
                }
                c if c.is_ascii_alphabetic() => {
                    while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                    {
                        i += 1;
                    }
                    out.push((Token::Ident(text[start..i].to_string()), start));
                    continue;
                }
                _ => {
                    let ch = text[start..].chars().next().unwrap_or('?');
                    return Err(ParseError::new(start, format!("unexpected character '{ch}'")));
                }
            };
            out.push((tok, start));
            i += 1;
        }
        out.push((Token::Eof, text.len()));
        Ok(out)
    }
}

/// Recursive-descent reader over a token stream.
pub(crate) struct PolyParser<'a> {
    chart: &'a ChartRef,
    tokens: Vec<(Token, usize)>,
    pos: usize,
    /// Stop terms before `d<var>` frame tokens (polyvector syntax).
    frames: bool,
}

impl<'a> PolyParser<'a> {
    pub(crate) fn new(text: &str, chart: &'a ChartRef, frames: bool) -> Result<Self> {
        Ok(Self { chart, tokens: Lexer::tokenize(text)?, pos: 0, frames })
    }

    pub(crate) fn chart_ref(&self) -> &'a ChartRef {
        self.chart
    }

    pub(crate) fn peek(&self) -> &Token {
        &self.tokens[self.pos].0
    }

    pub(crate) fn peek_at(&self, offset: usize) -> &Token {
        let i = (self.pos + offset).min(self.tokens.len() - 1);
        &self.tokens[i].0
    }

    pub(crate) fn position(&self) -> usize {
        self.tokens[self.pos].1
    }

    pub(crate) fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].0.clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    pub(crate) fn expect(&mut self, want: Token) -> Result<()> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(&format!("expected {}", want.describe())))
        }
    }

    pub(crate) fn unexpected(&self, context: &str) -> Error {
        ParseError::new(self.position(), format!("{context}, found {}", self.peek().describe()))
            .into()
    }

    pub(crate) fn at_end(&self) -> bool {
        *self.peek() == Token::Eof
    }

    pub(crate) fn finish(&mut self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.unexpected("unexpected trailing input"))
        }
    }

    /// Chart variable index named by a frame token `d<var>`.
    pub(crate) fn frame_var(&self, tok: &Token) -> Option<usize> {
        if !self.frames {
            return None;
        }
        match tok {
            Token::Ident(s) if self.chart.index_of(s).is_none() => {
                s.strip_prefix('d').and_then(|rest| self.chart.index_of(rest))
            }
            _ => None,
        }
    }

    pub(crate) fn parse_expr(&mut self) -> Result<Poly> {
        let mut acc = if *self.peek() == Token::Minus {
            self.bump();
            -self.parse_term()?
        } else {
            self.parse_term()?
        };
        loop {
            match self.peek() {
                Token::Plus => {
                    self.bump();
                    acc = &acc + &self.parse_term()?;
                }
                Token::Minus => {
                    self.bump();
                    acc = &acc - &self.parse_term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    pub(crate) fn parse_term(&mut self) -> Result<Poly> {
        let mut acc = self.parse_factor()?;
        while *self.peek() == Token::Star {
            if self.frame_var(self.peek_at(1)).is_some() {
                // `coeff * dw^dz`: leave the frame to the caller
                break;
            }
            self.bump();
            acc = &acc * &self.parse_factor()?;
        }
        Ok(acc)
    }

    fn parse_factor(&mut self) -> Result<Poly> {
        let base = self.parse_base()?;
        if *self.peek() == Token::Caret {
            self.bump();
            let e = self.parse_uint()?;
            let e = e
                .to_u32()
                .ok_or_else(|| Error::from(ParseError::new(self.position(), "exponent too large")))?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn parse_uint(&mut self) -> Result<BigInt> {
        match self.peek().clone() {
            Token::Int(n) => {
                self.bump();
                Ok(n)
            }
            _ => Err(self.unexpected("expected an unsigned integer")),
        }
    }

    fn parse_base(&mut self) -> Result<Poly> {
        let position = self.position();
        match self.peek().clone() {
            Token::Int(n) => {
                self.bump();
                let mut q = Rational::from_integer(n);
                if *self.peek() == Token::Slash {
                    self.bump();
                    let d = self.parse_uint()?;
                    if d.is_zero() {
                        return Err(ParseError::new(position, "zero denominator").into());
                    }
                    q /= Rational::from_integer(d);
                }
                Ok(Poly::constant(self.chart, q))
            }
            Token::Ident(name) => match self.chart.index_of(&name) {
                Some(i) => {
                    self.bump();
                    Ok(Poly::var(self.chart, i))
                }
                None => Err(Error::UnknownIdentifier { name, position }),
            },
            Token::LParen => {
                self.bump();
                let e = self.parse_expr()?;
                self.expect(Token::RParen)?;
                Ok(e)
            }
            _ => Err(self.unexpected("expected a number, variable or '('")),
        }
    }
}

/// Parses a polynomial expression into its expanded normal form.
pub fn parse_poly(text: &str, chart: &ChartRef) -> Result<Poly> {
    let mut p = PolyParser::new(text, chart, false)?;
    let out = p.parse_expr()?;
    p.finish()?;
    Ok(out)
}

/// Parses a signed rational literal such as `-3/2`.
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let t = text.trim();
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest.trim_start()),
        None => (false, t),
    };
    let bad = || ParseError::new(0, format!("\"{text}\" is not a rational number"));
    let (num, den) = match body.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (body, "1"),
    };
    if num.is_empty() || !num.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    if den.is_empty() || !den.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(ParseError::new(0, "zero denominator"));
    }
    let q = Rational::new(n, d);
    Ok(if neg { -q } else { q })
}

pub(crate) fn fmt_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
