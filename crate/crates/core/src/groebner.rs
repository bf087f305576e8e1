//! Buchberger's algorithm over the rationals, normal forms, standard-monomial
//! counts, Krull dimension of the zero set, and Tjurina numbers.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::chart::{same_chart, ChartRef};
use crate::error::{Error, Result};
use crate::order::MonomialOrder;
use crate::poly::{Exponents, Poly, Rational};

/// Default cap on reduction steps for one Gröbner computation.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Dimension of a quotient ring `O/I` as a vector space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuotientDim {
    Finite(u64),
    Infinite,
}

impl QuotientDim {
    pub fn finite(self) -> Option<u64> {
        match self {
            QuotientDim::Finite(d) => Some(d),
            QuotientDim::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == QuotientDim::Infinite
    }
}

impl fmt::Display for QuotientDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuotientDim::Finite(d) => write!(f, "{d}"),
            QuotientDim::Infinite => f.write_str("INFINITE"),
        }
    }
}

impl Serialize for QuotientDim {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            QuotientDim::Finite(d) => s.serialize_u64(*d),
            QuotientDim::Infinite => s.serialize_str("INFINITE"),
        }
    }
}

/// Terms sorted ascending in the monomial order, so the leading term is last.
#[derive(Clone)]
struct Sorted(Vec<(Exponents, Rational)>);

struct Ctx<'a> {
    chart: &'a ChartRef,
    order: MonomialOrder,
    budget: u64,
    steps: u64,
}

impl Ctx<'_> {
    fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        self.order.cmp(self.chart, a, b)
    }

    fn sorted(&self, p: &Poly) -> Sorted {
        let mut v: Vec<_> = p.terms().iter().map(|(e, c)| (e.clone(), c.clone())).collect();
        v.sort_by(|a, b| self.cmp(&a.0, &b.0));
        Sorted(v)
    }

    fn tick(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.budget {
            return Err(Error::BudgetExceeded { budget: self.budget });
        }
        Ok(())
    }

    /// `p - c * x^m * g`, all inputs sorted.
    fn sub_mul(&self, p: &Sorted, c: &Rational, m: &[u32], g: &Sorted) -> Sorted {
        let shifted = g.0.iter().map(|(e, a)| {
            let e: Exponents = e.iter().zip(m).map(|(x, y)| x + y).collect();
            (e, -(a * c))
        });
        let mut out = Vec::with_capacity(p.0.len() + g.0.len());
        let mut left = p.0.iter().cloned().peekable();
        let mut right = shifted.peekable();
        loop {
            let ord = match (left.peek(), right.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some(a), Some(b)) => self.cmp(&a.0, &b.0),
            };
            match ord {
                Ordering::Less => out.push(left.next().expect("peeked")),
                Ordering::Greater => out.push(right.next().expect("peeked")),
                Ordering::Equal => {
                    let (e, a) = left.next().expect("peeked");
                    let (_, b) = right.next().expect("peeked");
                    let s = a + b;
                    if !s.is_zero() {
                        out.push((e, s));
                    }
                }
            }
        }
        Sorted(out)
    }

    /// Full reduction of `p` modulo `basis`.
    fn reduce(&mut self, mut p: Sorted, basis: &[Sorted]) -> Result<Sorted> {
        let mut rem: Vec<(Exponents, Rational)> = Vec::new();
        while let Some((lead, lc)) = p.0.last().cloned() {
            let divisor = basis.iter().find(|g| divides(g.lead(), &lead));
            match divisor {
                Some(g) => {
                    self.tick()?;
                    let q = lc / g.lc();
                    let m = quotient(&lead, g.lead());
                    p = self.sub_mul(&p, &q, &m, g);
                }
                None => {
                    p.0.pop();
                    rem.push((lead, lc));
                }
            }
        }
        rem.reverse();
        Ok(Sorted(rem))
    }

    fn spoly(&self, f: &Sorted, g: &Sorted) -> Sorted {
        let l = lcm(f.lead(), g.lead());
        let mf = quotient(&l, f.lead());
        let mg = quotient(&l, g.lead());
        // f, g are monic: x^mf f - x^mg g
        let zero = Sorted(Vec::new());
        let a = self.sub_mul(&zero, &-Rational::one(), &mf, f);
        self.sub_mul(&a, &Rational::one(), &mg, g)
    }

    fn to_poly(&self, s: &Sorted) -> Poly {
        Poly::from_terms(self.chart, s.0.iter().cloned())
    }
}

impl Sorted {
    fn lead(&self) -> &[u32] {
        &self.0.last().expect("nonzero").0
    }

    fn lc(&self) -> &Rational {
        &self.0.last().expect("nonzero").1
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn monic(mut self) -> Sorted {
        let inv = self.lc().recip();
        for t in &mut self.0 {
            t.1 *= &inv;
        }
        self
    }
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn quotient(a: &[u32], b: &[u32]) -> Exponents {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn lcm(a: &[u32], b: &[u32]) -> Exponents {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

/// A reduced, monic Gröbner basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    chart: ChartRef,
    order: MonomialOrder,
    gens: Vec<Poly>,
}

impl Serialize for GroebnerBasis {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("GroebnerBasis", 2)?;
        st.serialize_field("order", &self.order)?;
        st.serialize_field("generators", &self.gens)?;
        st.end()
    }
}

/// Gröbner basis under `order` with the default step budget.
pub fn buchberger(gens: &[Poly], order: MonomialOrder) -> Result<GroebnerBasis> {
    buchberger_with_budget(gens, order, DEFAULT_BUDGET)
}

/// Gröbner basis of the ideal generated by `gens`.
///
/// Pairs are processed by the normal strategy (smallest lcm first, ties by input
/// index); coprime leading monomials and Buchberger's chain criterion skip pairs.
/// More than `budget` reduction steps aborts with [`Error::BudgetExceeded`].
pub fn buchberger_with_budget(gens: &[Poly], order: MonomialOrder, budget: u64) -> Result<GroebnerBasis> {
    let chart = gens.first().ok_or(Error::ZeroInput)?.chart().clone();
    if gens.iter().any(|g| !same_chart(g.chart(), &chart)) {
        return Err(Error::ChartMismatch);
    }
    let mut ctx = Ctx { chart: &chart, order, budget, steps: 0 };
    let mut basis: Vec<Sorted> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            basis.push(ctx.sorted(g).monic());
        }
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    while !pairs.is_empty() {
        let pick = (0..pairs.len())
            .min_by(|&a, &b| {
                let (i, j) = pairs[a];
                let (k, l) = pairs[b];
                let la = lcm(basis[i].lead(), basis[j].lead());
                let lb = lcm(basis[k].lead(), basis[l].lead());
                ctx.cmp(&la, &lb).then((j, i).cmp(&(l, k)))
            })
            .expect("nonempty");
        let (i, j) = pairs.swap_remove(pick);
        let (fi, fj) = (&basis[i], &basis[j]);
        if coprime(fi.lead(), fj.lead()) {
            continue;
        }
        let l = lcm(fi.lead(), fj.lead());
        let pending = |a: usize, b: usize| pairs.contains(&(a.min(b), a.max(b)));
        let chained = (0..basis.len())
            .any(|k| k != i && k != j && divides(basis[k].lead(), &l) && !pending(i, k) && !pending(j, k));
        if chained {
            continue;
        }
        ctx.tick()?;
        let s = ctx.spoly(fi, fj);
        let r = ctx.reduce(s, &basis)?;
        if !r.is_zero() {
            let new = basis.len();
            basis.push(r.monic());
            for k in 0..new {
                pairs.push((k, new));
            }
        }
    }

    // minimize, then interreduce tails
    let mut keep: Vec<Sorted> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            k != i && divides(h.lead(), g.lead()) && (h.lead() != g.lead() || k < i)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<Sorted> =
            keep.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, g)| g.clone()).collect();
        let mut g = keep[i].clone();
        let lead = g.0.pop().expect("nonzero");
        let mut tail = ctx.reduce(g, &others)?;
        tail.0.push(lead);
        reduced.push(tail);
    }
    reduced.sort_by(|a, b| ctx.cmp(b.lead(), a.lead()));
    let gens = reduced.iter().map(|g| ctx.to_poly(g)).collect();
    Ok(GroebnerBasis { chart, order, gens })
}

impl GroebnerBasis {
    pub fn chart(&self) -> &ChartRef {
        &self.chart
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Generators, sorted by descending leading monomial.
    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn leading_monomials(&self) -> Vec<Exponents> {
        self.gens
            .iter()
            .map(|g| g.leading_term(self.order).expect("nonzero generator").0.clone())
            .collect()
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Poly::is_constant)
    }

    /// Remainder of `p` with no term divisible by a leading monomial.
    pub fn normal_form(&self, p: &Poly) -> Result<Poly> {
        self.normal_form_with_budget(p, DEFAULT_BUDGET)
    }

    pub fn normal_form_with_budget(&self, p: &Poly, budget: u64) -> Result<Poly> {
        if !same_chart(p.chart(), &self.chart) {
            return Err(Error::ChartMismatch);
        }
        let mut ctx = Ctx { chart: &self.chart, order: self.order, budget, steps: 0 };
        let basis: Vec<Sorted> = self.gens.iter().map(|g| ctx.sorted(g)).collect();
        let r = ctx.reduce(ctx.sorted(p), &basis)?;
        Ok(ctx.to_poly(&r))
    }

    pub fn contains(&self, p: &Poly) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Number of monomials outside the leading-term ideal.
    pub fn quotient_dimension(&self) -> QuotientDim {
        let leads = self.leading_monomials();
        let n = self.chart.dim();
        if leads.iter().any(|e| e.iter().all(|&x| x == 0)) {
            return QuotientDim::Finite(0);
        }
        for i in 0..n {
            let pure = leads.iter().any(|e| e[i] > 0 && e.iter().enumerate().all(|(k, &x)| k == i || x == 0));
            if !pure {
                return QuotientDim::Infinite;
            }
        }
        let mut e = vec![0u32; n];
        QuotientDim::Finite(count_standard(&leads, &mut e, 0))
    }

    /// The standard monomials, when there are finitely many.
    pub fn standard_monomials(&self) -> Option<Vec<Exponents>> {
        self.quotient_dimension().finite()?;
        let leads = self.leading_monomials();
        let mut out = Vec::new();
        let mut e = vec![0u32; self.chart.dim()];
        collect_standard(&leads, &mut e, 0, &mut out);
        Some(out)
    }

    /// Krull dimension of the zero set: the largest set of variables `S` such that
    /// no leading monomial involves only variables of `S`. `-1` for the unit ideal.
    pub fn ideal_dimension(&self) -> i64 {
        if self.is_unit() {
            return -1;
        }
        let n = self.chart.dim();
        let supports: Vec<u32> = self
            .leading_monomials()
            .iter()
            .map(|e| e.iter().enumerate().filter(|(_, &x)| x > 0).fold(0u32, |m, (i, _)| m | (1 << i)))
            .collect();
        (0u32..1 << n)
            .filter(|s| supports.iter().all(|t| t & !s != 0))
            .map(|s| s.count_ones() as i64)
            .max()
            .unwrap_or(0)
    }
}

fn is_standard(leads: &[Exponents], e: &[u32]) -> bool {
    !leads.iter().any(|l| divides(l, e))
}

// depth-first over exponent vectors; once a prefix (with zero tail) is divisible,
// every larger exponent in this position is too
fn count_standard(leads: &[Exponents], e: &mut Vec<u32>, var: usize) -> u64 {
    if var == e.len() {
        return 1;
    }
    let mut total = 0;
    loop {
        if !is_standard(leads, e) {
            break;
        }
        total += count_standard(leads, e, var + 1);
        e[var] += 1;
    }
    e[var] = 0;
    total
}

fn collect_standard(leads: &[Exponents], e: &mut Vec<u32>, var: usize, out: &mut Vec<Exponents>) {
    if var == e.len() {
        out.push(e.clone());
        return;
    }
    while is_standard(leads, e) {
        collect_standard(leads, e, var + 1, out);
        e[var] += 1;
    }
    e[var] = 0;
}

fn jacobian_ideal(f: &Poly) -> Result<Vec<Poly>> {
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    if f.is_constant() {
        return Err(Error::ConstantInput);
    }
    let mut gens = vec![f.clone()];
    gens.extend(f.gradient());
    Ok(gens)
}

/// `dim O/(f, ∂f/∂x_1, ..., ∂f/∂x_n)` over the whole affine chart: the sum of the
/// local Tjurina numbers when every singular point is isolated.
pub fn tjurina_global(f: &Poly) -> Result<QuotientDim> {
    tjurina_global_with_budget(f, DEFAULT_BUDGET)
}

pub fn tjurina_global_with_budget(f: &Poly, budget: u64) -> Result<QuotientDim> {
    let g = buchberger_with_budget(&jacobian_ideal(f)?, MonomialOrder::Grevlex, budget)?;
    Ok(g.quotient_dimension())
}

/// Local Tjurina number of `f` at `point`: zero off the singular locus,
/// [`QuotientDim::Infinite`] on a positive-dimensional part of it.
///
/// The point is moved to the origin and `dim O/(I + m^N)` is computed for growing
/// `N`; two equal consecutive values certify `m^N ⊆ I` locally, so the value is exact.
pub fn tjurina_at(f: &Poly, point: &[Rational], budget: u64) -> Result<QuotientDim> {
    let chart = f.chart().clone();
    if point.len() != chart.dim() {
        return Err(Error::IndexOutOfRange { index: point.len(), n: chart.dim() });
    }
    let ideal = jacobian_ideal(&f.translate(point))?;
    if ideal.iter().any(|g| !g.coeff(&vec![0; chart.dim()]).is_zero()) {
        return Ok(QuotientDim::Finite(0));
    }
    let base = buchberger_with_budget(&ideal, MonomialOrder::Grevlex, budget)?;
    if base.ideal_dimension() > 0 && !origin_isolated(&ideal, budget)? {
        return Ok(QuotientDim::Infinite);
    }
    let mut previous: Option<u64> = None;
    for n in 1u32.. {
        let mut gens = base.gens().to_vec();
        gens.extend(monomials_of_degree(&chart, n));
        let d = buchberger_with_budget(&gens, MonomialOrder::Grevlex, budget)?
            .quotient_dimension()
            .finite()
            .expect("m^N makes the quotient finite");
        if previous == Some(d) {
            return Ok(QuotientDim::Finite(d));
        }
        previous = Some(d);
    }
    unreachable!()
}

fn monomials_of_degree(chart: &ChartRef, d: u32) -> Vec<Poly> {
    fn go(chart: &ChartRef, e: &mut Vec<u32>, var: usize, left: u32, out: &mut Vec<Poly>) {
        if var + 1 == e.len() {
            e[var] = left;
            out.push(Poly::monomial(chart, e.clone(), Rational::one()));
            e[var] = 0;
            return;
        }
        for a in (0..=left).rev() {
            e[var] = a;
            go(chart, e, var + 1, left - a, out);
        }
        e[var] = 0;
    }
    let mut out = Vec::new();
    go(chart, &mut vec![0; chart.dim()], 0, d, &mut out);
    out
}

/// Whether the origin is an isolated point of `V(ideal)`.
///
/// `V(I : x_i^∞)` is the closure of `V(I)` minus the hyperplane `x_i = 0`; the origin is
/// isolated exactly when it lies on none of these closures.
fn origin_isolated(ideal: &[Poly], budget: u64) -> Result<bool> {
    let chart = ideal[0].chart().clone();
    for i in 0..chart.dim() {
        let sat = saturate_by_variable(ideal, i, budget)?;
        let origin = vec![0; chart.dim()];
        if sat.iter().all(|g| g.coeff(&origin).is_zero()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Generators of `I : x_var^∞`, by eliminating `t` from `I + (1 - t x_var)`.
fn saturate_by_variable(ideal: &[Poly], var: usize, budget: u64) -> Result<Vec<Poly>> {
    let chart = ideal[0].chart().clone();
    let big = chart.with_eliminant();
    let lift = |p: &Poly| {
        Poly::from_terms(
            &big,
            p.terms().iter().map(|(e, c)| {
                let mut x = vec![0];
                x.extend(e);
                (x, c.clone())
            }),
        )
    };
    let mut gens: Vec<Poly> = ideal.iter().map(lift).collect();
    let mut te = vec![0; big.dim()];
    te[0] = 1;
    te[var + 1] = 1;
    gens.push(Poly::from_terms(&big, [(vec![0; big.dim()], Rational::one()), (te, -Rational::one())]));
    let g = buchberger_with_budget(&gens, MonomialOrder::Lex, budget)?;
    Ok(g
        .gens()
        .iter()
        .filter(|p| !p.uses_var(0))
        .map(|p| Poly::from_terms(&chart, p.terms().iter().map(|(e, c)| (e[1..].to_vec(), c.clone()))))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chart::Chart;
    use crate::poly::{parse_poly, rat};

    fn wz() -> ChartRef {
        Chart::new(&["w", "z"]).unwrap()
    }

    fn polys(c: &ChartRef, texts: &[&str]) -> Vec<Poly> {
        texts.iter().map(|t| parse_poly(t, c).unwrap()).collect()
    }

    #[test]
    fn basis_examples() {
        let c = wz();
        let g = buchberger(&polys(&c, &["w", "z"]), MonomialOrder::Grevlex).unwrap();
        assert_eq!(g.gens(), polys(&c, &["w", "z"]).as_slice());
        let g = buchberger(&polys(&c, &["w*z", "z^2"]), MonomialOrder::Grevlex).unwrap();
        assert_eq!(g.gens(), polys(&c, &["w*z", "z^2"]).as_slice());
        let g = buchberger(&polys(&c, &["w^2 - z^3", "2*w", "-3*z^2"]), MonomialOrder::Grevlex).unwrap();
        assert_eq!(g.gens(), polys(&c, &["z^2", "w"]).as_slice());
    }

    #[test]
    fn normal_forms() {
        let c = wz();
        let g = buchberger(&polys(&c, &["w", "z"]), MonomialOrder::Grevlex).unwrap();
        assert!(g.normal_form(&parse_poly("w^2", &c).unwrap()).unwrap().is_zero());
        assert_eq!(g.normal_form(&parse_poly("w + 1", &c).unwrap()).unwrap(), Poly::one(&c));
        let g = buchberger(&polys(&c, &["w", "z^2"]), MonomialOrder::Grevlex).unwrap();
        assert!(g.normal_form(&parse_poly("z^3", &c).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn quotient_dimensions() {
        let c = wz();
        let dim = |t: &[&str]| buchberger(&polys(&c, t), MonomialOrder::Grevlex).unwrap().quotient_dimension();
        assert_eq!(dim(&["w", "z"]), QuotientDim::Finite(1));
        assert_eq!(dim(&["w", "z^2"]), QuotientDim::Finite(2));
        assert_eq!(dim(&["w"]), QuotientDim::Infinite);
        assert_eq!(dim(&["1"]), QuotientDim::Finite(0));
    }

    #[test]
    fn ideal_dimensions() {
        let c = wz();
        let g = buchberger(&polys(&c, &["w", "z"]), MonomialOrder::Grevlex).unwrap();
        assert_eq!(g.ideal_dimension(), 0);
        let g = buchberger(&polys(&c, &["w + 1", "w"]), MonomialOrder::Grevlex).unwrap();
        assert_eq!(g.gens(), polys(&c, &["1"]).as_slice());
        assert_eq!(g.ideal_dimension(), -1);
        let c4 = Chart::numbered(4).unwrap();
        let g = buchberger(&polys(&c4, &["x2", "x3"]), MonomialOrder::Grevlex).unwrap();
        assert_eq!(g.ideal_dimension(), 2);
        let g = buchberger(&[Poly::zero(&c4)], MonomialOrder::Grevlex).unwrap();
        assert_eq!(g.ideal_dimension(), 4);
    }

    #[test]
    fn tjurina_examples() {
        let c = wz();
        let t = |s: &str| tjurina_global(&parse_poly(s, &c).unwrap()).unwrap();
        assert_eq!(t("w*z"), QuotientDim::Finite(1));
        assert_eq!(t("w^2 - z^3"), QuotientDim::Finite(2));
        assert_eq!(t("w^3 - z^3"), QuotientDim::Finite(4));
        assert_eq!(t("w^2"), QuotientDim::Infinite);
        assert_eq!(t("w - z"), QuotientDim::Finite(0));
        assert!(matches!(tjurina_global(&Poly::from_int(&c, 3)), Err(Error::ConstantInput)));
    }

    #[test]
    fn local_tjurina() {
        let c = wz();
        let origin = [rat(0), rat(0)];
        let f = parse_poly("w*z", &c).unwrap().translate(&[rat(-1), rat(-2)]);
        assert_eq!(tjurina_at(&f, &[rat(1), rat(2)], DEFAULT_BUDGET).unwrap(), QuotientDim::Finite(1));
        assert_eq!(tjurina_at(&f, &origin, DEFAULT_BUDGET).unwrap(), QuotientDim::Finite(0));
        // three lines through the origin: D4, both globally and locally
        let f = parse_poly("w*z*(w - z)", &c).unwrap();
        assert_eq!(tjurina_global(&f).unwrap(), QuotientDim::Finite(4));
        assert_eq!(tjurina_at(&f, &origin, DEFAULT_BUDGET).unwrap(), QuotientDim::Finite(4));
        // every point of the double line w = 0 is singular
        let f = parse_poly("w^2*(z^2 - 1 - w)", &c).unwrap();
        assert_eq!(tjurina_at(&f, &origin, DEFAULT_BUDGET).unwrap(), QuotientDim::Infinite);
    }

    #[test]
    fn budget_is_reported() {
        let c = Chart::new(&["x", "y", "z"]).unwrap();
        let gens = polys(&c, &["x^3*y - z^2 + 1", "y^3*z - x^2", "z^3*x - y^2 + x"]);
        assert!(matches!(
            buchberger_with_budget(&gens, MonomialOrder::Lex, 10),
            Err(Error::BudgetExceeded { budget: 10 })
        ));
    }

    #[test]
    fn idempotent_on_reduced_input() {
        let c = Chart::new(&["x", "y", "z"]).unwrap();
        let gens = polys(&c, &["x^2 + y*z - 1", "y^2 - x*z", "z^2 + x - y"]);
        for order in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
            let g = buchberger(&gens, order).unwrap();
            let again = buchberger(g.gens(), order).unwrap();
            assert_eq!(g, again);
        }
    }
}
