//! Polyvector fields on a chart and their calculus.
//!
//! A degree-`k` polyvector is stored as a map from strictly increasing index
//! tuples `(i_1 < ... < i_k)` to polynomial coefficients, the tuple standing for
//! `∂_{i_1} ∧ ... ∧ ∂_{i_k}`. Internally the frame symbols behave like odd
//! variables `θ_i`, which is how the bracket and the BV operator are written.
//!
//! Sign conventions (all pinned by the tests in this module and in `poisson`):
//!
//! * `[ξ, f] = ξ(f)` for a vector field `ξ` and a function `f`;
//! * `[P, Q] = Σ_i (P ∂^R/∂θ_i) ∧ ∂Q/∂x_i − (−1)^{(p−1)(q−1)} (Q ∂^R/∂θ_i) ∧ ∂P/∂x_i`,
//!   with `∂^R/∂θ_i` the right derivative; on vector fields this is the usual Lie bracket;
//! * contraction with `dx_i` is the left derivative `∂/∂θ_i`;
//! * `Δ = Σ_i ∂/∂x_i ∘ ∂/∂θ_i` (left derivative), so that `L_ξ μ = −(Δξ) μ` for the
//!   standard covolume `μ = ∂_1 ∧ ... ∧ ∂_n` and `Δ(f ∂_w∧∂_z) = (∂_w f)∂_z − (∂_z f)∂_w`.

mod text;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::chart::{same_chart, ChartRef};
use crate::error::{Error, Result};
use crate::poly::Poly;

pub use text::parse_polyvector;

/// Strictly increasing list of frame indices.
pub type Frame = Vec<usize>;

type Terms = BTreeMap<Frame, Poly>;

#[derive(Clone)]
pub struct Polyvector {
    chart: ChartRef,
    degree: usize,
    terms: Terms,
}

/// A one-form `Σ α_i dx_i`; only exact forms and coordinate differentials are built.
#[derive(Clone, Debug, PartialEq)]
pub struct OneForm {
    chart: ChartRef,
    components: Vec<Poly>,
}

fn add_into(terms: &mut Terms, frame: Frame, p: Poly) {
    if p.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(frame) {
        Entry::Vacant(v) => {
            v.insert(p);
        }
        Entry::Occupied(mut o) => {
            let s = o.get() + &p;
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

/// Sorted union of two disjoint frames and the sign of the sorting permutation.
fn merge_frames(a: &[usize], b: &[usize]) -> Option<(Frame, bool)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut inversions = 0usize;
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j] < a[i] {
            // b[j] jumps over the remaining entries of a
            inversions += a.len() - i;
            out.push(b[j]);
            j += 1;
        } else {
            return None;
        }
    }
    Some((out, inversions % 2 == 1))
}

/// Sorts an arbitrary index tuple; `None` when an index repeats.
pub(crate) fn canonical_frame(idx: &[usize]) -> Option<(Frame, bool)> {
    let mut v = idx.to_vec();
    let mut odd = false;
    // insertion sort, counting transpositions
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some((v, odd))
    }
}

fn wedge_terms(a: &Terms, b: &Terms) -> Terms {
    let mut out = Terms::new();
    for (fa, ca) in a {
        for (fb, cb) in b {
            if let Some((f, odd)) = merge_frames(fa, fb) {
                let p = ca * cb;
                add_into(&mut out, f, if odd { -p } else { p });
            }
        }
    }
    out
}

/// `∂/∂θ_i` acting from the left (`left = true`) or from the right.
fn theta_derivative(t: &Terms, i: usize, left: bool) -> Terms {
    let mut out = Terms::new();
    for (f, c) in t {
        if let Some(pos) = f.iter().position(|&x| x == i) {
            let moves = if left { pos } else { f.len() - 1 - pos };
            let mut g = f.clone();
            g.remove(pos);
            add_into(&mut out, g, if moves % 2 == 1 { -c } else { c.clone() });
        }
    }
    out
}

fn x_derivative(t: &Terms, i: usize) -> Terms {
    let mut out = Terms::new();
    for (f, c) in t {
        add_into(&mut out, f.clone(), c.d(i));
    }
    out
}

fn sub_terms(a: &Terms, b: &Terms) -> Terms {
    let mut out = a.clone();
    for (f, c) in b {
        add_into(&mut out, f.clone(), -c);
    }
    out
}

fn add_terms(a: &Terms, b: &Terms) -> Terms {
    let mut out = a.clone();
    for (f, c) in b {
        add_into(&mut out, f.clone(), c.clone());
    }
    out
}

impl Polyvector {
    pub fn zero(chart: &ChartRef, degree: usize) -> Self {
        Polyvector { chart: chart.clone(), degree: degree.min(chart.dim()), terms: Terms::new() }
    }

    /// Degree-0 polyvector carrying a function.
    pub fn function(f: Poly) -> Self {
        let chart = f.chart().clone();
        let mut terms = Terms::new();
        add_into(&mut terms, Vec::new(), f);
        Polyvector { chart, degree: 0, terms }
    }

    /// `Σ components[i] ∂_i`.
    pub fn vector_field(chart: &ChartRef, components: &[Poly]) -> Result<Self> {
        if components.len() != chart.dim() {
            return Err(Error::InvalidChart(format!(
                "{} components for a chart of dimension {}",
                components.len(),
                chart.dim()
            )));
        }
        let mut terms = Terms::new();
        for (i, c) in components.iter().enumerate() {
            if !same_chart(c.chart(), chart) {
                return Err(Error::ChartMismatch);
            }
            add_into(&mut terms, vec![i], c.clone());
        }
        Ok(Polyvector { chart: chart.clone(), degree: 1, terms })
    }

    /// `coeff ∂_{idx[0]} ∧ ... ∧ ∂_{idx[k-1]}` for an arbitrary index order.
    pub fn monomial(coeff: Poly, idx: &[usize]) -> Result<Self> {
        let chart = coeff.chart().clone();
        if let Some(&bad) = idx.iter().find(|&&i| i >= chart.dim()) {
            return Err(Error::IndexOutOfRange { index: bad, n: chart.dim() });
        }
        let mut out = Polyvector::zero(&chart, idx.len());
        if let Some((f, odd)) = canonical_frame(idx) {
            add_into(&mut out.terms, f, if odd { -coeff } else { coeff });
        }
        Ok(out)
    }

    /// Builds from `(index tuple, coefficient)` pairs; tuples are sorted with sign.
    pub fn from_terms<I>(chart: &ChartRef, degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, Poly)>,
    {
        if degree > chart.dim() {
            return Err(Error::IndexOutOfRange { index: degree, n: chart.dim() });
        }
        let mut out = Polyvector::zero(chart, degree);
        for (idx, c) in terms {
            if idx.len() != degree {
                return Err(Error::DegreeMismatch { expected: degree, found: idx.len() });
            }
            if !same_chart(c.chart(), chart) {
                return Err(Error::ChartMismatch);
            }
            let m = Polyvector::monomial(c, &idx)?;
            out.terms = add_terms(&out.terms, &m.terms);
        }
        Ok(out)
    }

    /// The standard covolume `∂_1 ∧ ... ∧ ∂_n`.
    pub fn covolume(chart: &ChartRef) -> Self {
        let idx: Vec<usize> = (0..chart.dim()).collect();
        Polyvector::monomial(Poly::one(chart), &idx).expect("indices in range")
    }

    pub fn chart(&self) -> &ChartRef {
        &self.chart
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Frame, Poly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the frame given by a strictly increasing index tuple.
    pub fn coeff(&self, frame: &[usize]) -> Poly {
        self.terms.get(frame).cloned().unwrap_or_else(|| Poly::zero(&self.chart))
    }

    /// Coefficient of `∂_{idx}` for an arbitrary index order (alternating).
    pub fn component(&self, idx: &[usize]) -> Poly {
        match canonical_frame(idx) {
            None => Poly::zero(&self.chart),
            Some((f, odd)) => {
                let c = self.coeff(&f);
                if odd {
                    -c
                } else {
                    c
                }
            }
        }
    }

    /// The carried function of a degree-0 polyvector.
    pub fn as_function(&self) -> Option<Poly> {
        (self.degree == 0).then(|| self.coeff(&[]))
    }

    /// Components `(ξ_1, ..., ξ_n)` of a vector field.
    pub fn as_vector_field(&self) -> Option<Vec<Poly>> {
        (self.degree == 1).then(|| (0..self.chart.dim()).map(|i| self.coeff(&[i])).collect())
    }

    /// Every nonzero coefficient, in frame order.
    pub fn coefficients(&self) -> impl Iterator<Item = &Poly> {
        self.terms.values()
    }

    fn with_terms(&self, degree: isize, terms: Terms) -> Polyvector {
        let degree = degree.clamp(0, self.chart.dim() as isize) as usize;
        debug_assert!(terms.keys().all(|f| f.len() == degree));
        Polyvector { chart: self.chart.clone(), degree, terms }
    }

    fn check_chart(&self, other: &Polyvector) -> Result<()> {
        if same_chart(&self.chart, &other.chart) {
            Ok(())
        } else {
            Err(Error::ChartMismatch)
        }
    }

    fn check_sum(&self, other: &Polyvector) -> Result<usize> {
        self.check_chart(other)?;
        if self.degree == other.degree || other.is_zero() {
            Ok(self.degree)
        } else if self.is_zero() {
            Ok(other.degree)
        } else {
            Err(Error::DegreeMismatch { expected: self.degree, found: other.degree })
        }
    }

    pub fn checked_add(&self, other: &Polyvector) -> Result<Polyvector> {
        let d = self.check_sum(other)?;
        Ok(self.with_terms(d as isize, add_terms(&self.terms, &other.terms)))
    }

    pub fn checked_sub(&self, other: &Polyvector) -> Result<Polyvector> {
        let d = self.check_sum(other)?;
        Ok(self.with_terms(d as isize, sub_terms(&self.terms, &other.terms)))
    }

    /// Multiplies every coefficient by a function.
    pub fn scale(&self, f: &Poly) -> Polyvector {
        let mut terms = Terms::new();
        for (fr, c) in &self.terms {
            add_into(&mut terms, fr.clone(), c * f);
        }
        self.with_terms(self.degree as isize, terms)
    }

    /// Applies `op` to every coefficient.
    pub fn map_coefficients(&self, op: impl Fn(&Poly) -> Poly) -> Polyvector {
        let mut terms = Terms::new();
        for (fr, c) in &self.terms {
            add_into(&mut terms, fr.clone(), op(c));
        }
        self.with_terms(self.degree as isize, terms)
    }

    /// Wedge product together with an overflow flag; when `|a| + |b| > n` the result
    /// is the zero polyvector of degree `n` and the flag is set.
    pub fn wedge_with_overflow(&self, other: &Polyvector) -> Result<(Polyvector, bool)> {
        self.check_chart(other)?;
        let d = self.degree + other.degree;
        if d > self.chart.dim() {
            return Ok((Polyvector::zero(&self.chart, self.chart.dim()), true));
        }
        Ok((self.with_terms(d as isize, wedge_terms(&self.terms, &other.terms)), false))
    }

    pub fn wedge(&self, other: &Polyvector) -> Result<Polyvector> {
        Ok(self.wedge_with_overflow(other)?.0)
    }

    /// Schouten–Nijenhuis bracket `[self, other]`, of degree `|self| + |other| − 1`.
    pub fn schouten(&self, other: &Polyvector) -> Result<Polyvector> {
        self.check_chart(other)?;
        let (p, q) = (self.degree as isize, other.degree as isize);
        let odd = ((p - 1) * (q - 1)).rem_euclid(2) == 1;
        let mut out = Terms::new();
        for i in 0..self.chart.dim() {
            let first = wedge_terms(&theta_derivative(&self.terms, i, false), &x_derivative(&other.terms, i));
            let second =
                wedge_terms(&theta_derivative(&other.terms, i, false), &x_derivative(&self.terms, i));
            out = add_terms(&out, &first);
            out = if odd { add_terms(&out, &second) } else { sub_terms(&out, &second) };
        }
        Ok(self.with_terms(p + q - 1, out))
    }

    /// Contraction `ι_α` with a one-form: a graded derivation of degree −1.
    pub fn contract(&self, alpha: &OneForm) -> Result<Polyvector> {
        if !same_chart(&self.chart, &alpha.chart) {
            return Err(Error::ChartMismatch);
        }
        let mut out = Terms::new();
        for (i, a) in alpha.components.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (f, c) in theta_derivative(&self.terms, i, true) {
                add_into(&mut out, f, &c * a);
            }
        }
        Ok(self.with_terms(self.degree as isize - 1, out))
    }

    /// Lie derivative `L_ξ a = [ξ, a]` along a vector field `ξ = self`.
    pub fn lie_derivative(&self, a: &Polyvector) -> Result<Polyvector> {
        if self.degree != 1 {
            return Err(Error::DegreeMismatch { expected: 1, found: self.degree });
        }
        self.schouten(a)
    }

    /// Directional derivative `ξ(f)` of a function along the vector field `self`.
    pub fn apply(&self, f: &Poly) -> Result<Poly> {
        if self.degree != 1 {
            return Err(Error::DegreeMismatch { expected: 1, found: self.degree });
        }
        let r = self.schouten(&Polyvector::function(f.clone()))?;
        Ok(r.coeff(&[]))
    }

    /// Batalin–Vilkovisky operator for the standard covolume, of degree −1.
    pub fn bv(&self) -> Polyvector {
        let mut out = Terms::new();
        for i in 0..self.chart.dim() {
            out = add_terms(&out, &x_derivative(&theta_derivative(&self.terms, i, true), i));
        }
        self.with_terms(self.degree as isize - 1, out)
    }
}

impl OneForm {
    /// `Σ components[i] dx_i`.
    pub fn new(chart: &ChartRef, components: Vec<Poly>) -> Result<Self> {
        if components.len() != chart.dim() {
            return Err(Error::InvalidChart(format!(
                "{} components for a chart of dimension {}",
                components.len(),
                chart.dim()
            )));
        }
        if components.iter().any(|c| !same_chart(c.chart(), chart)) {
            return Err(Error::ChartMismatch);
        }
        Ok(OneForm { chart: chart.clone(), components })
    }

    /// The exact form `df`.
    pub fn exact(f: &Poly) -> Self {
        OneForm { chart: f.chart().clone(), components: f.gradient() }
    }

    /// The coordinate differential `dx_i`.
    pub fn coordinate(chart: &ChartRef, i: usize) -> Result<Self> {
        Ok(Self::exact(&Poly::try_var(chart, i)?))
    }

    pub fn components(&self) -> &[Poly] {
        &self.components
    }
}

/// Zero polyvectors compare equal regardless of their nominal degree.
impl PartialEq for Polyvector {
    fn eq(&self, other: &Self) -> bool {
        same_chart(&self.chart, &other.chart)
            && self.terms == other.terms
            && (self.degree == other.degree || self.terms.is_empty())
    }
}

impl Eq for Polyvector {}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&Polyvector> for &Polyvector {
            type Output = Polyvector;
            /// Panics on chart or degree mismatch; see the `checked_*` methods.
            fn $m(self, rhs: &Polyvector) -> Polyvector {
                self.$checked(rhs).expect("incompatible polyvector operands")
            }
        }
        impl $tr<Polyvector> for Polyvector {
            type Output = Polyvector;
            fn $m(self, rhs: Polyvector) -> Polyvector {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);

impl Neg for &Polyvector {
    type Output = Polyvector;
    fn neg(self) -> Polyvector {
        self.map_coefficients(|c| -c)
    }
}

impl Neg for Polyvector {
    type Output = Polyvector;
    fn neg(self) -> Polyvector {
        -&self
    }
}

pub(crate) fn frame_text(chart: &ChartRef, frame: &[usize]) -> String {
    frame.iter().map(|&i| format!("d{}", chart.name(i))).collect::<Vec<_>>().join("^")
}

impl fmt::Display for Polyvector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (fr, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if fr.is_empty() {
                write!(f, "({c})")?;
            } else if c.is_one() {
                write!(f, "{}", frame_text(&self.chart, fr))?;
            } else {
                write!(f, "({c}) {}", frame_text(&self.chart, fr))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polyvector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polyvector[deg {}]({})", self.degree, self)
    }
}

#[derive(Serialize)]
struct TermRecord {
    frame: Vec<String>,
    coeff: String,
}

impl Serialize for Polyvector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermRecord> = self
            .terms
            .iter()
            .map(|(fr, c)| TermRecord {
                frame: fr.iter().map(|&i| self.chart.name(i).to_string()).collect(),
                coeff: c.to_string(),
            })
            .collect();
        let mut st = s.serialize_struct("Polyvector", 3)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("text", &self.to_string())?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}
