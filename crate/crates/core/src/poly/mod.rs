//! Sparse multivariate polynomials with exact rational coefficients.

mod gcd;
mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::chart::{same_chart, ChartRef};
use crate::error::{Error, Result};
use crate::order::MonomialOrder;

pub use gcd::{gcd_multi, is_squarefree};
pub use parse::{parse_poly, parse_rational, Lexer, Token};
pub(crate) use parse::{fmt_rational, PolyParser};

pub type Rational = num_rational::BigRational;

/// Dense exponent vector, one entry per chart variable.
pub type Exponents = Vec<u32>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Total degree; the zero polynomial sits below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(u64),
}

impl Degree {
    pub fn finite(self) -> Option<u64> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

#[derive(Clone)]
pub struct Poly {
    chart: ChartRef,
    terms: BTreeMap<Exponents, Rational>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        same_chart(&self.chart, &other.chart) && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl Poly {
    pub fn zero(chart: &ChartRef) -> Self {
        Poly { chart: chart.clone(), terms: BTreeMap::new() }
    }

    pub fn one(chart: &ChartRef) -> Self {
        Self::constant(chart, Rational::one())
    }

    pub fn constant(chart: &ChartRef, c: Rational) -> Self {
        Self::monomial(chart, vec![0; chart.dim()], c)
    }

    pub fn from_int(chart: &ChartRef, c: i64) -> Self {
        Self::constant(chart, rat(c))
    }

    /// The coordinate function `x_i`.
    ///
    /// Panics when `i` is outside the chart; see [`Poly::try_var`].
    pub fn var(chart: &ChartRef, i: usize) -> Self {
        Self::try_var(chart, i).expect("variable index out of range")
    }

    pub fn try_var(chart: &ChartRef, i: usize) -> Result<Self> {
        if i >= chart.dim() {
            return Err(Error::IndexOutOfRange { index: i, n: chart.dim() });
        }
        let mut e = vec![0; chart.dim()];
        e[i] = 1;
        Ok(Self::monomial(chart, e, Rational::one()))
    }

    pub fn monomial(chart: &ChartRef, exps: Exponents, c: Rational) -> Self {
        assert_eq!(exps.len(), chart.dim(), "exponent vector length must match the chart");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Poly { chart: chart.clone(), terms }
    }

    /// Builds a polynomial, merging repeated exponents and dropping zeros.
    pub fn from_terms<I>(chart: &ChartRef, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponents, Rational)>,
    {
        let mut p = Poly::zero(chart);
        for (e, c) in terms {
            assert_eq!(e.len(), chart.dim(), "exponent vector length must match the chart");
            p.add_term(e, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, e: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn chart(&self) -> &ChartRef {
        &self.chart
    }

    pub fn terms(&self) -> &BTreeMap<Exponents, Rational> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &[u32]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().map(|c| c.is_one()).unwrap_or(false)
    }

    /// True for the zero polynomial and nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(self.terms.values().next().cloned().unwrap_or_else(Rational::zero))
        } else {
            None
        }
    }

    pub fn degree(&self) -> Degree {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as u64).sum::<u64>())
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    pub fn weighted_degree(&self) -> Degree {
        self.terms
            .keys()
            .map(|e| self.chart.weighted_degree(e))
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    /// Degree in a single variable.
    pub fn degree_in(&self, var: usize) -> Degree {
        self.terms
            .keys()
            .map(|e| e[var] as u64)
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    /// `Some(d)` when every term has weighted degree `d`; zero is homogeneous of any degree
    /// and reports `None`.
    pub fn homogeneous_weight(&self) -> Option<u64> {
        let mut it = self.terms.keys().map(|e| self.chart.weighted_degree(e));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.keys().any(|e| e[var] > 0)
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Exponents, &Rational)> {
        self.terms.iter().max_by(|a, b| order.cmp(&self.chart, a.0, b.0))
    }

    pub fn leading_coeff(&self, order: MonomialOrder) -> Option<&Rational> {
        self.leading_term(order).map(|(_, c)| c)
    }

    /// Terms sorted from the largest monomial down.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(&Exponents, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(&self.chart, b.0, a.0));
        v
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.chart);
        }
        Poly {
            chart: self.chart.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self, order: MonomialOrder) -> Poly {
        match self.leading_coeff(order) {
            Some(lc) => self.scale(&lc.recip()),
            None => self.clone(),
        }
    }

    pub fn mul_monomial(&self, exps: &[u32], c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.chart);
        }
        Poly {
            chart: self.chart.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (e.iter().zip(exps).map(|(a, b)| a + b).collect(), x * c))
                .collect(),
        }
    }

    fn check_chart(&self, other: &Poly) -> Result<()> {
        if same_chart(&self.chart, &other.chart) {
            Ok(())
        } else {
            Err(Error::ChartMismatch)
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check_chart(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_chart(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_chart(other)?;
        let mut out = Poly::zero(&self.chart);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, mut exp: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.chart);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn diff(&self, var: usize) -> Result<Poly> {
        if var >= self.chart.dim() {
            return Err(Error::IndexOutOfRange { index: var, n: self.chart.dim() });
        }
        let mut out = Poly::zero(&self.chart);
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[var] -= 1;
            out.add_term(e2, c * rat(e[var] as i64));
        }
        Ok(out)
    }

    /// Partial derivative for in-range indices (panics otherwise).
    pub fn d(&self, var: usize) -> Poly {
        self.diff(var).expect("variable index out of range")
    }

    pub fn gradient(&self) -> Vec<Poly> {
        (0..self.chart.dim()).map(|i| self.d(i)).collect()
    }

    /// Substitutes `x_i -> x_i + shift[i]`.
    pub fn translate(&self, shift: &[Rational]) -> Poly {
        assert_eq!(shift.len(), self.chart.dim());
        let binomials: Vec<Poly> = shift
            .iter()
            .enumerate()
            .map(|(i, a)| &Poly::var(&self.chart, i) + &Poly::constant(&self.chart, a.clone()))
            .collect();
        let mut out = Poly::zero(&self.chart);
        for (e, c) in &self.terms {
            let mut t = Poly::constant(&self.chart, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = &t * &binomials[i].pow(k);
                }
            }
            out = &out + &t;
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.chart.dim());
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                t *= num_traits::pow(x.clone(), k as usize);
            }
            acc += t;
        }
        acc
    }

    /// Exact quotient `self / divisor` when it exists.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let (q, r) = self.div_rem_lex(divisor)?;
        r.is_zero().then_some(q)
    }

    /// Multivariate division by a single polynomial under lex; `None` for a zero divisor.
    pub(crate) fn div_rem_lex(&self, divisor: &Poly) -> Option<(Poly, Poly)> {
        let (lt, lc) = divisor.leading_term(MonomialOrder::Lex)?;
        let (lt, lc) = (lt.clone(), lc.clone());
        let mut q = Poly::zero(&self.chart);
        let mut r = Poly::zero(&self.chart);
        let mut p = self.clone();
        while let Some((e, c)) = p.leading_term(MonomialOrder::Lex) {
            let (e, c) = (e.clone(), c.clone());
            if e.iter().zip(&lt).all(|(a, b)| a >= b) {
                let shift: Exponents = e.iter().zip(&lt).map(|(a, b)| a - b).collect();
                let f = &c / &lc;
                p = &p - &divisor.mul_monomial(&shift, &f);
                q.add_term(shift, f);
            } else {
                p.terms.remove(&e);
                r.add_term(e, c);
            }
        }
        Some((q, r))
    }

    /// Least common multiple of coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        use num_integer::Integer;
        self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    pub fn is_negative_leading(&self, order: MonomialOrder) -> bool {
        self.leading_coeff(order).map(|c| c.is_negative()).unwrap_or(false)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&Poly> for &Poly {
            type Output = Poly;
            /// Panics when the operands live on different charts; use the `checked_*`
            /// methods to get an error instead.
            fn $m(self, rhs: &Poly) -> Poly {
                self.$checked(rhs).expect("polynomial operands live on different charts")
            }
        }
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            chart: self.chart.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.sorted_terms(MonomialOrder::Grevlex).into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors: Vec<String> = Vec::new();
            for (v, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(self.chart.name(v).to_string()),
                    _ => factors.push(format!("{}^{}", self.chart.name(v), k)),
                }
            }
            if factors.is_empty() {
                write!(f, "{}", fmt_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_rational(&abs), factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl serde::Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({})", self.chart, self)
    }
}
