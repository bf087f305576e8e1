//! Affine coordinate charts: variable names and positive grading weights.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Upper bound on the chart dimension; exponent vectors are dense per chart.
pub const MAX_DIM: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Chart {
    names: Vec<String>,
    weights: Vec<u32>,
}

/// Charts are shared between every polynomial and polyvector built on them.
pub type ChartRef = Arc<Chart>;

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Chart {
    /// Chart with unit weights.
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<ChartRef> {
        Self::weighted(names, &vec![1; names.len()])
    }

    pub fn weighted<S: AsRef<str>>(names: &[S], weights: &[u32]) -> Result<ChartRef> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        if names.is_empty() {
            return Err(Error::InvalidChart("a chart needs at least one variable".into()));
        }
        if names.len() > MAX_DIM {
            return Err(Error::InvalidChart(format!(
                "{} variables exceed the supported maximum of {MAX_DIM}",
                names.len()
            )));
        }
        if weights.len() != names.len() {
            return Err(Error::InvalidChart(format!(
                "{} weights given for {} variables",
                weights.len(),
                names.len()
            )));
        }
        if let Some(bad) = names.iter().find(|s| !is_identifier(s)) {
            return Err(Error::InvalidChart(format!("\"{bad}\" is not a valid identifier")));
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(Error::InvalidChart(format!("variable \"{a}\" is repeated")));
            }
        }
        if weights.contains(&0) {
            return Err(Error::InvalidChart("weights must be positive".into()));
        }
        Ok(Arc::new(Chart { names, weights: weights.to_vec() }))
    }

    /// This chart with one fresh unit-weight variable prepended, for elimination.
    /// May exceed [`MAX_DIM`] by one; never exposed to callers.
    pub(crate) fn with_eliminant(&self) -> ChartRef {
        let mut name = String::from("t");
        while self.names.contains(&name) {
            name.push('_');
        }
        let mut names = vec![name];
        names.extend(self.names.iter().cloned());
        let mut weights = vec![1];
        weights.extend(&self.weights);
        Arc::new(Chart { names, weights })
    }

    /// Chart `x1, ..., xn` with unit weights.
    pub fn numbered(n: usize) -> Result<ChartRef> {
        let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        Self::new(&names)
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|s| s == name)
    }

    pub fn has_unit_weights(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    /// Weighted degree `sum weights[i] * e[i]` of an exponent vector.
    pub fn weighted_degree(&self, exps: &[u32]) -> u64 {
        exps.iter().zip(&self.weights).map(|(&e, &w)| e as u64 * w as u64).sum()
    }
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.names.join(", "))
    }
}

/// Same chart by identity or by value.
pub(crate) fn same_chart(a: &ChartRef, b: &ChartRef) -> bool {
    Arc::ptr_eq(a, b) || a == b
}
