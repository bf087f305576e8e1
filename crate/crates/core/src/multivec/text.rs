//! Polyvector text syntax.
//!
//! ```text
//! polyvector := '-'? pvterm (('+' | '-') pvterm)*
//! pvterm     := frame | term ('*'? frame)?
//! frame      := dvar ('^' dvar)*
//! ```
//!
//! `term` is the polynomial term production and `dvar` is `d` glued to a chart
//! variable name, standing for the coordinate frame vector `∂_var` (not a form):
//! `"w*z dw^dz"` is `wz ∂w∧∂z`. An identifier that is itself a chart variable is
//! never read as a frame. All terms must carry frames of the same length.

use super::{canonical_frame, Polyvector};
use crate::chart::ChartRef;
use crate::error::{Error, ParseError, Result};
use crate::poly::{Poly, PolyParser, Token};

fn parse_frame(p: &mut PolyParser<'_>) -> Result<Vec<usize>> {
    let mut idx = Vec::new();
    loop {
        match p.frame_var(p.peek()) {
            Some(i) => {
                p.bump();
                idx.push(i);
            }
            None => return Err(p.unexpected("expected a frame symbol such as dw")),
        }
        if *p.peek() == Token::Caret && p.frame_var(p.peek_at(1)).is_some() {
            p.bump();
        } else {
            return Ok(idx);
        }
    }
}

fn parse_pvterm(p: &mut PolyParser<'_>) -> Result<(Poly, Vec<usize>, usize)> {
    let position = p.position();
    if p.frame_var(p.peek()).is_some() {
        let chart = p.chart_ref().clone();
        return Ok((Poly::one(&chart), parse_frame(p)?, position));
    }
    let coeff = p.parse_term()?;
    if *p.peek() == Token::Star && p.frame_var(p.peek_at(1)).is_some() {
        p.bump();
    }
    let frame = if p.frame_var(p.peek()).is_some() { parse_frame(p)? } else { Vec::new() };
    Ok((coeff, frame, position))
}

/// Parses a homogeneous polyvector; the zero text `"0"` yields a degree-0 zero.
pub fn parse_polyvector(text: &str, chart: &ChartRef) -> Result<Polyvector> {
    let mut p = PolyParser::new(text, chart, true)?;
    let mut pieces: Vec<(Poly, Vec<usize>, usize)> = Vec::new();
    let negate_first = if *p.peek() == Token::Minus {
        p.bump();
        true
    } else {
        false
    };
    let (c, f, pos) = parse_pvterm(&mut p)?;
    pieces.push((if negate_first { -c } else { c }, f, pos));
    loop {
        let neg = match p.peek() {
            Token::Plus => false,
            Token::Minus => true,
            _ => break,
        };
        p.bump();
        let (c, f, pos) = parse_pvterm(&mut p)?;
        pieces.push((if neg { -c } else { c }, f, pos));
    }
    p.finish()?;

    let degree = pieces[0].1.len();
    let mut out = Polyvector::zero(chart, degree);
    for (c, idx, pos) in pieces {
        if idx.len() != degree {
            return Err(ParseError::new(
                pos,
                format!("term of degree {} in a polyvector of degree {degree}", idx.len()),
            )
            .into());
        }
        if canonical_frame(&idx).is_none() {
            continue;
        }
        let m = Polyvector::monomial(c, &idx)?;
        out = out.checked_add(&m).map_err(|e| match e {
            Error::DegreeMismatch { .. } => ParseError::new(pos, "inconsistent degree").into(),
            e => e,
        })?;
    }
    if out.is_zero() {
        out = Polyvector::zero(chart, degree);
    }
    Ok(out)
}
