//! Declarative structure files.
//!
//! ```text
//! # comment
//! chart: w, z
//! weights: 1, 1
//! poisson:
//!   {w, z} = w*z
//! curve:
//!   w^2 - z^3
//! ```
//!
//! Blocks are `chart:`, `weights:`, `poisson:` and `curve:`; a block's content may
//! follow the header on the same line or on the lines below it. A `poisson:` block
//! holds either bracket lines `{v1, v2} = expr` with `v1` before `v2` in the chart
//! (unlisted pairs are zero), or one builder directive: `jacobian3 F = expr` or
//! `diagonal lambda = [[...], ...]`.

use std::fmt::Write as _;

use poisson_kit::chart::{Chart, ChartRef};
use poisson_kit::error::Error;
use poisson_kit::multivec::Polyvector;
use poisson_kit::poisson::PoissonStructure;
use poisson_kit::poly::{parse_poly, parse_rational, Poly, Rational};
use thiserror::Error;

/// Syntax error in a structure file, 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct FileError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq)]
pub enum PoissonBlock {
    /// `(i, j, {x_i, x_j})` with `i < j`.
    Brackets(Vec<(usize, usize, Poly)>),
    Jacobian3(Poly),
    Diagonal(Vec<Vec<Rational>>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct StructureFile {
    pub chart: ChartRef,
    pub poisson: PoissonBlock,
    pub curve: Option<Poly>,
}

#[derive(Clone, Copy, PartialEq)]
enum Block {
    None,
    Chart,
    Weights,
    Poisson,
    Curve,
}

struct Line<'a> {
    number: usize,
    /// Byte offset of `text` within the raw line.
    offset: usize,
    text: &'a str,
}

impl Line<'_> {
    fn error(&self, at: usize, message: impl Into<String>) -> FileError {
        FileError { line: self.number, column: self.offset + at + 1, message: message.into() }
    }
}

fn core_error(line: &Line<'_>, base: usize, e: Error) -> FileError {
    match e {
        Error::Parse(p) => line.error(base + p.position, p.message),
        Error::UnknownIdentifier { name, position } => {
            line.error(base + position, format!("unknown identifier \"{name}\""))
        }
        e => line.error(base, e.to_string()),
    }
}

fn split_list(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for piece in text.split([',', ' ', '\t']) {
        if !piece.is_empty() {
            out.push((start, piece));
        }
        start += piece.len() + 1;
    }
    out
}

impl StructureFile {
    pub fn parse(text: &str) -> Result<Self, FileError> {
        let mut block = Block::None;
        let mut names: Vec<(Line<'_>, usize, String)> = Vec::new();
        let mut weights: Vec<(Line<'_>, usize, String)> = Vec::new();
        let mut poisson_lines: Vec<Line<'_>> = Vec::new();
        let mut curve_lines: Vec<Line<'_>> = Vec::new();
        let mut seen = Vec::new();
        let mut last_line = 1;

        for (idx, raw) in text.lines().enumerate() {
            let number = idx + 1;
            last_line = number;
            let content = raw.split('#').next().unwrap_or("");
            let trimmed = content.trim_start();
            let mut offset = content.len() - trimmed.len();
            let mut body = trimmed.trim_end();
            if body.is_empty() {
                continue;
            }
            let header = [
                ("chart:", Block::Chart),
                ("weights:", Block::Weights),
                ("poisson:", Block::Poisson),
                ("curve:", Block::Curve),
            ]
            .into_iter()
            .find(|(h, _)| body.starts_with(h));
            if let Some((h, b)) = header {
                if seen.contains(&h) {
                    return Err(FileError { line: number, column: offset + 1, message: format!("repeated block \"{h}\"") });
                }
                seen.push(h);
                block = b;
                let rest = &body[h.len()..];
                let lead = rest.len() - rest.trim_start().len();
                offset += h.len() + lead;
                body = rest.trim();
                if body.is_empty() {
                    continue;
                }
            }
            let line = Line { number, offset, text: body };
            match block {
                Block::None => return Err(line.error(0, "expected a block header such as \"chart:\"")),
                Block::Chart => {
                    for (at, name) in split_list(body) {
                        names.push((Line { number, offset, text: body }, at, name.to_string()));
                    }
                }
                Block::Weights => {
                    for (at, w) in split_list(body) {
                        weights.push((Line { number, offset, text: body }, at, w.to_string()));
                    }
                }
                Block::Poisson => poisson_lines.push(line),
                Block::Curve => curve_lines.push(line),
            }
        }

        if names.is_empty() {
            return Err(FileError { line: last_line, column: 1, message: "missing \"chart:\" block".into() });
        }
        let parsed_weights: Vec<u32> = if weights.is_empty() {
            vec![1; names.len()]
        } else {
            let mut out = Vec::new();
            for (line, at, w) in &weights {
                match w.parse::<u32>() {
                    Ok(v) if v > 0 => out.push(v),
                    _ => return Err(line.error(*at, format!("weight \"{w}\" is not a positive integer"))),
                }
            }
            if out.len() != names.len() {
                let (line, at, _) = &weights[0];
                return Err(line.error(*at, format!("{} weights for {} variables", out.len(), names.len())));
            }
            out
        };
        let name_list: Vec<&str> = names.iter().map(|(_, _, n)| n.as_str()).collect();
        let chart = Chart::weighted(&name_list, &parsed_weights).map_err(|e| {
            let (line, at, _) = &names[0];
            line.error(*at, e.to_string())
        })?;

        let poisson = parse_poisson(&chart, &poisson_lines)?;
        let curve = match curve_lines.as_slice() {
            [] => None,
            [line] => Some(parse_poly(line.text, &chart).map_err(|e| core_error(line, 0, e))?),
            [_, extra, ..] => return Err(extra.error(0, "the curve block holds a single polynomial")),
        };
        Ok(StructureFile { chart, poisson, curve })
    }

    /// The bivector as written, without the Jacobi check for bracket lists.
    pub fn bivector(&self) -> Result<Polyvector, Error> {
        match &self.poisson {
            PoissonBlock::Brackets(entries) => Polyvector::from_terms(
                &self.chart,
                2,
                entries.iter().map(|(i, j, p)| (vec![*i, *j], p.clone())),
            ),
            _ => Ok(self.structure()?.bivector().clone()),
        }
    }

    pub fn structure(&self) -> Result<PoissonStructure, Error> {
        match &self.poisson {
            PoissonBlock::Brackets(_) => PoissonStructure::new(self.bivector()?),
            PoissonBlock::Jacobian3(f) => PoissonStructure::jacobian3(f),
            PoissonBlock::Diagonal(l) => PoissonStructure::diagonal_quadratic(&self.chart, l),
        }
    }

    /// Canonical text; parsing it yields an equal structure.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "chart: {}", self.chart.names().join(", "));
        if !self.chart.has_unit_weights() {
            let w: Vec<String> = self.chart.weights().iter().map(u32::to_string).collect();
            let _ = writeln!(s, "weights: {}", w.join(", "));
        }
        s.push_str("poisson:\n");
        match &self.poisson {
            PoissonBlock::Brackets(entries) => {
                for (i, j, p) in entries {
                    let _ = writeln!(s, "  {{{}, {}}} = {p}", self.chart.name(*i), self.chart.name(*j));
                }
            }
            PoissonBlock::Jacobian3(f) => {
                let _ = writeln!(s, "  jacobian3 F = {f}");
            }
            PoissonBlock::Diagonal(rows) => {
                let rows: Vec<String> = rows
                    .iter()
                    .map(|r| format!("[{}]", r.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(", ")))
                    .collect();
                let _ = writeln!(s, "  diagonal lambda = [{}]", rows.join(", "));
            }
        }
        if let Some(c) = &self.curve {
            let _ = writeln!(s, "curve:\n  {c}");
        }
        s
    }
}

fn parse_poisson(chart: &ChartRef, lines: &[Line<'_>]) -> Result<PoissonBlock, FileError> {
    let mut brackets: Vec<(usize, usize, Poly)> = Vec::new();
    let mut builder: Option<PoissonBlock> = None;
    for line in lines {
        let text = line.text;
        let Some(eq) = text.find('=') else {
            return Err(line.error(0, "expected \"{v1, v2} = expr\" or a builder directive"));
        };
        let lhs = text[..eq].trim();
        let rhs_raw = &text[eq + 1..];
        let rhs_at = eq + 1 + (rhs_raw.len() - rhs_raw.trim_start().len());
        let rhs = rhs_raw.trim();
        if builder.is_some() || (!brackets.is_empty() && !lhs.starts_with('{')) {
            return Err(line.error(0, "a builder directive cannot be combined with other poisson lines"));
        }
        if let Some(inner) = lhs.strip_prefix('{') {
            let Some(inner) = inner.strip_suffix('}') else {
                return Err(line.error(0, "unterminated bracket pair"));
            };
            let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
            let [a, b] = parts.as_slice() else {
                return Err(line.error(1, "a bracket pair names exactly two variables"));
            };
            let index = |v: &str| {
                chart.index_of(v).ok_or_else(|| line.error(1, format!("unknown identifier \"{v}\"")))
            };
            let (i, j) = (index(a)?, index(b)?);
            if i >= j {
                return Err(line.error(1, format!("pair {{{a}, {b}}} must list variables in chart order")));
            }
            if brackets.iter().any(|(x, y, _)| (*x, *y) == (i, j)) {
                return Err(line.error(0, format!("bracket {{{a}, {b}}} given twice")));
            }
            let p = parse_poly(rhs, chart).map_err(|e| core_error(line, rhs_at, e))?;
            brackets.push((i, j, p));
        } else if lhs == "jacobian3 F" || lhs.split_whitespace().eq(["jacobian3", "F"]) {
            if chart.dim() != 3 {
                return Err(line.error(0, "jacobian3 needs a 3-variable chart"));
            }
            builder = Some(PoissonBlock::Jacobian3(parse_poly(rhs, chart).map_err(|e| core_error(line, rhs_at, e))?));
        } else if lhs.split_whitespace().eq(["diagonal", "lambda"]) {
            builder = Some(PoissonBlock::Diagonal(parse_matrix(rhs, chart.dim()).map_err(|m| line.error(rhs_at, m))?));
        } else {
            return Err(line.error(0, format!("unrecognised poisson declaration \"{lhs}\"")));
        }
    }
    Ok(builder.unwrap_or(PoissonBlock::Brackets(brackets)))
}

/// `[[a, b, ...], [c, d, ...], ...]` with rational entries.
fn parse_matrix(text: &str, n: usize) -> Result<Vec<Vec<Rational>>, String> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = compact
        .strip_prefix("[[")
        .and_then(|s| s.strip_suffix("]]"))
        .ok_or_else(|| "expected a matrix such as [[0, 1], [-1, 0]]".to_string())?;
    let rows: Vec<Vec<Rational>> = inner
        .split("],[")
        .map(|row| row.split(',').map(|x| parse_rational(x).map_err(|e| e.message)).collect())
        .collect::<Result<_, _>>()?;
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(format!("lambda must be a {n}x{n} matrix"));
    }
    Ok(rows)
}
