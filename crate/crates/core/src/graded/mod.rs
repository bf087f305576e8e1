//! Weight-graded Lichnerowicz cohomology.
//!
//! A monomial polyvector `x^a ∂_{i1}∧...∧∂_{ik}` has weight `wdeg(x^a) - Σ weights[i_j]`.
//! When every coefficient of `∂_i∧∂_j` in `π` has weight `m + weights[i] + weights[j]`,
//! `d_π` maps weight `w` to `w + m` and each graded piece is finite dimensional.

mod rank;

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

pub use rank::{rank_exact, RatMatrix};

use crate::chart::ChartRef;
use crate::error::{Error, Result};
use crate::multivec::Polyvector;
use crate::order::MonomialOrder;
use crate::poisson::PoissonStructure;
use crate::poly::{Exponents, Poly, Rational};

/// Default cap on the size of a single graded piece.
pub const DEFAULT_BASIS_CAP: usize = 20_000;

/// All strictly increasing `k`-subsets of `0..n`, in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Exponent vectors of weighted degree exactly `d`, in descending grevlex order.
pub fn monomials_of_weight(chart: &ChartRef, d: u64) -> Vec<Exponents> {
    fn rec(w: &[u32], var: usize, left: u64, cur: &mut Exponents, out: &mut Vec<Exponents>) {
        if var == w.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let step = w[var] as u64;
        let mut e = 0;
        while e * step <= left {
            cur[var] = e as u32;
            rec(w, var + 1, left - e * step, cur, out);
            e += 1;
        }
        cur[var] = 0;
    }
    let mut out = Vec::new();
    rec(chart.weights(), 0, d, &mut vec![0; chart.dim()], &mut out);
    out.sort_by(|a, b| MonomialOrder::Grevlex.cmp(chart, b, a));
    out
}

/// Weight `m` with `d_π(C^k_w) ⊆ C^{k+1}_{w+m}`, or `None` when `π` is not
/// weight-homogeneous. The zero bivector has weight 0.
pub fn homogeneity_weight(p: &PoissonStructure) -> Option<i64> {
    let chart = p.chart();
    let mut m: Option<i64> = None;
    for (frame, coeff) in p.bivector().terms() {
        let shift: i64 = frame.iter().map(|&i| chart.weight(i) as i64).sum();
        for e in coeff.terms().keys() {
            let w = chart.weighted_degree(e) as i64 - shift;
            match m {
                None => m = Some(w),
                Some(x) if x != w => return None,
                _ => {}
            }
        }
    }
    Some(m.unwrap_or(0))
}

/// Monomial polyvectors of degree `k` and weight `w`: frames in lexicographic
/// order, then monomials in descending grevlex order.
#[derive(Debug, Clone)]
pub struct GradedBasis {
    chart: ChartRef,
    k: usize,
    weight: i64,
    elements: Vec<(Vec<usize>, Exponents)>,
    index: HashMap<(Vec<usize>, Exponents), usize>,
}

impl GradedBasis {
    pub fn new(chart: &ChartRef, k: usize, weight: i64) -> Self {
        let mut elements = Vec::new();
        if k <= chart.dim() {
            for frame in subsets(chart.dim(), k) {
                let d = weight + frame.iter().map(|&i| chart.weight(i) as i64).sum::<i64>();
                if d < 0 {
                    continue;
                }
                for e in monomials_of_weight(chart, d as u64) {
                    elements.push((frame.clone(), e));
                }
            }
        }
        let index = elements.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
        GradedBasis { chart: chart.clone(), k, weight, elements, index }
    }

    /// As [`GradedBasis::new`], failing when the piece has more than `cap` elements.
    pub fn with_cap(chart: &ChartRef, k: usize, weight: i64, cap: usize) -> Result<Self> {
        let size = piece_size(chart, k, weight);
        if size > cap {
            return Err(Error::BasisCapExceeded { k, weight, size, cap });
        }
        Ok(Self::new(chart, k, weight))
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `(frame, exponents)` pairs in basis order.
    pub fn elements(&self) -> &[(Vec<usize>, Exponents)] {
        &self.elements
    }

    pub fn position(&self, frame: &[usize], exps: &[u32]) -> Option<usize> {
        self.index.get(&(frame.to_vec(), exps.to_vec())).copied()
    }

    /// The `i`-th basis element as a polyvector.
    pub fn polyvector(&self, i: usize) -> Polyvector {
        let (frame, e) = &self.elements[i];
        let c = Poly::monomial(&self.chart, e.clone(), Rational::one());
        Polyvector::monomial(c, frame).expect("basis frames are valid")
    }

    /// Coordinates of a polyvector of this degree and weight; `None` if it has a
    /// term outside the piece.
    pub fn coordinates(&self, a: &Polyvector) -> Option<Vec<Rational>> {
        let mut v = vec![Rational::zero(); self.len()];
        if a.is_zero() {
            return Some(v);
        }
        if a.degree() != self.k {
            return None;
        }
        for (frame, coeff) in a.terms() {
            for (e, c) in coeff.terms() {
                v[self.position(frame, e)?] += c;
            }
        }
        Some(v)
    }
}

/// Size of a graded piece without building it.
pub fn piece_size(chart: &ChartRef, k: usize, weight: i64) -> usize {
    if k > chart.dim() {
        return 0;
    }
    subsets(chart.dim(), k)
        .iter()
        .map(|frame| {
            let d = weight + frame.iter().map(|&i| chart.weight(i) as i64).sum::<i64>();
            if d < 0 {
                0
            } else {
                count_monomials(chart.weights(), d as u64)
            }
        })
        .sum()
}

fn count_monomials(w: &[u32], d: u64) -> usize {
    // coin-change count
    let mut ways = vec![0usize; d as usize + 1];
    ways[0] = 1;
    for &c in w {
        for x in c as usize..=d as usize {
            ways[x] += ways[x - c as usize];
        }
    }
    ways[d as usize]
}

fn sign(parity: usize) -> Rational {
    if parity % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn insert_sorted(frame: &[usize], extra: &[usize]) -> Option<Vec<usize>> {
    let mut j: Vec<usize> = frame.iter().chain(extra).copied().collect();
    j.sort_unstable();
    if j.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(j)
}

/// Lichnerowicz differential evaluated on coordinates: for a `k`-vector `A`,
/// viewed as a skew multiderivation,
///
/// ```text
/// (δA)(x_J) = Σ_i (-1)^i {x_{j_i}, A(.. omit i ..)} + Σ_{i<l} (-1)^{i+l} A({x_{j_i}, x_{j_l}}, .. omit i, l ..)
/// ```
///
/// which in this crate's sign system is exactly `d_π A = [π, A]`.
struct CoordinateDifferential {
    n: usize,
    /// `{x_a, x_b}` for all `a, b`.
    pi: Vec<Vec<Poly>>,
    /// `∂_m {x_a, x_b}` indexed `[a][b][m]`.
    dpi: Vec<Vec<Vec<Poly>>>,
}

impl CoordinateDifferential {
    fn new(p: &PoissonStructure) -> Self {
        let n = p.chart().dim();
        let pi: Vec<Vec<Poly>> =
            (0..n).map(|a| (0..n).map(|b| p.bracket_of_coordinates(a, b)).collect()).collect();
        let dpi = pi.iter().map(|row| row.iter().map(Poly::gradient).collect()).collect();
        CoordinateDifferential { n, pi, dpi }
    }

    /// `d_π (x^e ∂_I)` as frame → coefficient.
    fn apply(&self, chart: &ChartRef, frame: &[usize], e: &[u32]) -> BTreeMap<Vec<usize>, Poly> {
        let mut out: BTreeMap<Vec<usize>, Poly> = BTreeMap::new();
        let mut push = |j: Vec<usize>, p: Poly| {
            if p.is_zero() {
                return;
            }
            let slot = out.entry(j).or_insert_with(|| Poly::zero(chart));
            *slot = &*slot + &p;
        };
        // first sum: only J = I ∪ {j} sees A(x_{J∖j}) = g
        for j in (0..self.n).filter(|j| !frame.contains(j)) {
            let big = insert_sorted(frame, &[j]).expect("j not in frame");
            let pos = big.iter().position(|&x| x == j).expect("inserted");
            let mut bracket = Poly::zero(chart);
            for (m, &em) in e.iter().enumerate() {
                if em == 0 || self.pi[j][m].is_zero() {
                    continue;
                }
                let mut dm = e.to_vec();
                dm[m] -= 1;
                bracket = &bracket + &self.pi[j][m].mul_monomial(&dm, &Rational::from_integer(em.into()));
            }
            push(big, bracket.scale(&sign(pos)));
        }
        // second sum: A({x_a, x_b}, x_{J''}) = Σ_m ∂_m{x_a, x_b} A(x_m, x_{J''})
        for (pm, &m) in frame.iter().enumerate() {
            let rest: Vec<usize> = frame.iter().copied().filter(|&x| x != m).collect();
            for a in 0..self.n {
                for b in a + 1..self.n {
                    let d = &self.dpi[a][b][m];
                    if d.is_zero() {
                        continue;
                    }
                    let Some(big) = insert_sorted(&rest, &[a, b]) else { continue };
                    let i = big.iter().position(|&x| x == a).expect("inserted");
                    let l = big.iter().position(|&x| x == b).expect("inserted");
                    let s = sign(i + l + pm);
                    push(big, d.mul_monomial(e, &s));
                }
            }
        }
        out
    }
}

/// Matrix of `d_π : C^k_w → C^{k+1}_{w+m}`; column `j` holds the image of basis element `j`.
pub fn dpi_matrix(p: &PoissonStructure, k: usize, w: i64) -> Result<RatMatrix> {
    dpi_matrix_with_cap(p, k, w, DEFAULT_BASIS_CAP)
}

pub fn dpi_matrix_with_cap(p: &PoissonStructure, k: usize, w: i64, cap: usize) -> Result<RatMatrix> {
    let m = homogeneity_weight(p).ok_or(Error::NotHomogeneous)?;
    let source = GradedBasis::with_cap(p.chart(), k, w, cap)?;
    let target = GradedBasis::with_cap(p.chart(), k + 1, w + m, cap)?;
    Ok(assemble(&CoordinateDifferential::new(p), p.chart(), &source, &target))
}

fn assemble(d: &CoordinateDifferential, chart: &ChartRef, source: &GradedBasis, target: &GradedBasis) -> RatMatrix {
    let mut mat = RatMatrix::zeros(target.len(), source.len());
    for (col, (frame, e)) in source.elements().iter().enumerate() {
        for (j, coeff) in d.apply(chart, frame, e) {
            for (x, c) in coeff.terms() {
                let row = target.position(&j, x).expect("d_π preserves the grading");
                mat.add_to(row, col, c);
            }
        }
    }
    mat
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CohomologyCell {
    pub k: usize,
    pub weight: i64,
    pub dim_chain: usize,
    pub dim_kernel: usize,
    pub dim_image_incoming: usize,
    /// Rank of the outgoing differential `C^k_w → C^{k+1}_{w+m}`.
    pub rank_outgoing: usize,
    pub dim_h: usize,
}

/// Alternating-sum check along one chain `C^a_{s+am} → ... → C^b_{s+bm}`:
/// `Σ(-1)^k dim C^k = Σ(-1)^k dim H^k + (-1)^a rank_in(a) + (-1)^b rank_out(b)`.
/// The boundary ranks vanish for a complete chain, leaving the plain identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EulerChain {
    /// `w - k m`, constant along the chain.
    pub chain: i64,
    pub k_range: (usize, usize),
    pub chain_sum: i64,
    pub cohomology_sum: i64,
    pub boundary: i64,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CohomologyTable {
    /// The bivector, as text.
    pub structure: String,
    pub m: i64,
    pub k_max: usize,
    pub w_min: i64,
    pub w_max: i64,
    pub cells: Vec<CohomologyCell>,
    pub euler: Vec<EulerChain>,
}

impl CohomologyTable {
    pub fn cell(&self, k: usize, w: i64) -> Option<&CohomologyCell> {
        self.cells.iter().find(|c| c.k == k && c.weight == w)
    }

    /// `dim H^k_w`; zero outside the computed range.
    pub fn dim_h(&self, k: usize, w: i64) -> usize {
        self.cell(k, w).map_or(0, |c| c.dim_h)
    }

    pub fn euler_consistent(&self) -> bool {
        self.euler.iter().all(|e| e.holds)
    }

    /// Aligned text table of `dim H^k_w`.
    pub fn to_text(&self) -> String {
        let weights: Vec<i64> = (self.w_min..=self.w_max).collect();
        let width = self.cells.iter().map(|c| c.dim_h.to_string().len()).max().unwrap_or(1).max(3);
        let mut s = String::new();
        let _ = write!(s, "{:>6}", "k \\ w");
        for w in &weights {
            let _ = write!(s, " {w:>width$}");
        }
        s.push('\n');
        for k in 0..=self.k_max {
            let _ = write!(s, "{:>6}", format!("H^{k}"));
            for &w in &weights {
                let _ = write!(s, " {:>width$}", self.dim_h(k, w));
            }
            s.push('\n');
        }
        let _ = writeln!(s, "d_pi shifts weight by {}", self.m);
        s
    }
}

/// `dim H^k_w` for `k ≤ k_max` and `w_min ≤ w ≤ w_max`, where `w_min` is the lowest
/// weight any `k`-vector can have.
pub fn cohomology_table(p: &PoissonStructure, k_max: usize, w_max: i64) -> Result<CohomologyTable> {
    cohomology_table_with_cap(p, k_max, w_max, DEFAULT_BASIS_CAP)
}

pub fn cohomology_table_with_cap(
    p: &PoissonStructure,
    k_max: usize,
    w_max: i64,
    cap: usize,
) -> Result<CohomologyTable> {
    let m = homogeneity_weight(p).ok_or(Error::NotHomogeneous)?;
    let chart = p.chart();
    let n = chart.dim();
    let k_max = k_max.min(n);
    let mut ws: Vec<i64> = chart.weights().iter().map(|&x| x as i64).collect();
    ws.sort_unstable_by(|a, b| b.cmp(a));
    let w_min = -ws[..k_max].iter().sum::<i64>();

    // every differential whose rank some cell needs: outgoing (k, w) and incoming (k-1, w-m)
    let mut needed: Vec<(usize, i64)> = Vec::new();
    for k in 0..=k_max {
        for w in w_min..=w_max {
            needed.push((k, w));
            if k > 0 {
                needed.push((k - 1, w - m));
            }
        }
    }
    needed.sort_unstable();
    needed.dedup();

    let d = CoordinateDifferential::new(p);
    let ranks: HashMap<(usize, i64), (usize, usize)> = needed
        .par_iter()
        .map(|&(k, w)| {
            let source = GradedBasis::with_cap(chart, k, w, cap)?;
            if source.is_empty() || k == n {
                return Ok(((k, w), (source.len(), 0)));
            }
            let target = GradedBasis::with_cap(chart, k + 1, w + m, cap)?;
            let r = if target.is_empty() { 0 } else { rank_exact(&assemble(&d, chart, &source, &target)) };
            Ok(((k, w), (source.len(), r)))
        })
        .collect::<Result<_>>()?;

    let mut cells = Vec::new();
    for k in 0..=k_max {
        for w in w_min..=w_max {
            let (dim_chain, rank_outgoing) = ranks[&(k, w)];
            let dim_image_incoming = if k == 0 { 0 } else { ranks[&(k - 1, w - m)].1 };
            let dim_kernel = dim_chain - rank_outgoing;
            cells.push(CohomologyCell {
                k,
                weight: w,
                dim_chain,
                dim_kernel,
                dim_image_incoming,
                rank_outgoing,
                dim_h: dim_kernel - dim_image_incoming,
            });
        }
    }
    let euler = euler_chains(&cells, m);
    Ok(CohomologyTable { structure: p.bivector().to_string(), m, k_max, w_min, w_max, cells, euler })
}

fn euler_chains(cells: &[CohomologyCell], m: i64) -> Vec<EulerChain> {
    let mut chains: BTreeMap<i64, Vec<&CohomologyCell>> = BTreeMap::new();
    for c in cells {
        chains.entry(c.weight - c.k as i64 * m).or_default().push(c);
    }
    chains
        .into_iter()
        .map(|(s, mut cs)| {
            cs.sort_by_key(|c| c.k);
            let alt = |k: usize, x: usize| if k % 2 == 0 { x as i64 } else { -(x as i64) };
            let chain_sum = cs.iter().map(|c| alt(c.k, c.dim_chain)).sum();
            let cohomology_sum = cs.iter().map(|c| alt(c.k, c.dim_h)).sum();
            let (first, last) = (cs[0], cs[cs.len() - 1]);
            let contiguous = cs.windows(2).all(|w| w[1].k == w[0].k + 1);
            let boundary = alt(first.k, first.dim_image_incoming) + alt(last.k, last.rank_outgoing);
            EulerChain {
                chain: s,
                k_range: (first.k, last.k),
                chain_sum,
                cohomology_sum,
                boundary,
                holds: contiguous && chain_sum == cohomology_sum + boundary,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chart::Chart;
    use crate::multivec::parse_polyvector;
    use crate::poly::parse_poly;
    use crate::sample::Sampler;

    #[test]
    fn subsets_in_lex_order() {
        assert_eq!(subsets(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(subsets(2, 0), vec![Vec::<usize>::new()]);
        assert!(subsets(2, 3).is_empty());
    }

    #[test]
    fn piece_sizes() {
        let c = Chart::weighted(&["x", "y", "z"], &[1, 2, 3]).unwrap();
        for k in 0..=3 {
            for w in -6..6 {
                assert_eq!(piece_size(&c, k, w), GradedBasis::new(&c, k, w).len(), "k={k} w={w}");
            }
        }
        let c2 = Chart::new(&["w", "z"]).unwrap();
        assert_eq!(GradedBasis::new(&c2, 0, 1).len(), 2);
        assert_eq!(GradedBasis::new(&c2, 2, -2).len(), 1);
        assert!(GradedBasis::with_cap(&c2, 1, 10, 5).is_err());
    }

    #[test]
    fn homogeneity_examples() {
        let c = Chart::new(&["w", "z"]).unwrap();
        assert_eq!(homogeneity_weight(&PoissonStructure::standard_symplectic(&c).unwrap()), Some(-2));
        let c4 = Chart::numbered(4).unwrap();
        let lam: Vec<Vec<Rational>> = [[0, 1, 1, -2], [-1, 0, 1, 1], [-1, -1, 0, 1], [2, -1, -1, 0]]
            .iter()
            .map(|r| r.iter().map(|&x| crate::poly::rat(x)).collect())
            .collect();
        assert_eq!(homogeneity_weight(&PoissonStructure::diagonal_quadratic(&c4, &lam).unwrap()), Some(0));
        let c3 = Chart::new(&["x", "y", "z"]).unwrap();
        let cubic = PoissonStructure::jacobian3(&parse_poly("x^3 + y^3 + z^3 + x*y*z", &c3).unwrap()).unwrap();
        assert_eq!(homogeneity_weight(&cubic), Some(0));
        assert_eq!(homogeneity_weight(&PoissonStructure::zero(&c3)), Some(0));
        let mixed = PoissonStructure::surface(parse_poly("w + w*z", &c).unwrap()).unwrap();
        assert_eq!(homogeneity_weight(&mixed), None);
        // weighted chart: {x,y} = z with weights (1,2,3) has weight 3 - 1 - 2 = 0
        let cw = Chart::weighted(&["x", "y", "z"], &[1, 2, 3]).unwrap();
        let p = PoissonStructure::new(parse_polyvector("z dx^dy", &cw).unwrap()).unwrap();
        assert_eq!(homogeneity_weight(&p), Some(0));
    }

    fn random_structures() -> Vec<PoissonStructure> {
        let mut s = Sampler::new(11);
        let c3 = Chart::new(&["x", "y", "z"]).unwrap();
        let c2 = Chart::new(&["w", "z"]).unwrap();
        let cw = Chart::weighted(&["x", "y", "z"], &[1, 2, 3]).unwrap();
        let mut out = vec![
            PoissonStructure::new(parse_polyvector("x dy^dz + y dz^dx + z dx^dy", &c3).unwrap()).unwrap(),
            PoissonStructure::jacobian3(&parse_poly("x^6 + y^3 + z^2 + x*y*z", &cw).unwrap()).unwrap(),
            PoissonStructure::standard_symplectic(&c2).unwrap(),
        ];
        for _ in 0..3 {
            out.push(PoissonStructure::jacobian3(&s.homogeneous_poly(&c3, 3)).unwrap());
            out.push(PoissonStructure::surface(s.homogeneous_poly(&c2, 3)).unwrap());
        }
        out
    }

    #[test]
    fn coordinate_formula_matches_schouten() {
        for p in random_structures() {
            let d = CoordinateDifferential::new(&p);
            for k in 0..p.chart().dim() {
                for w in -3..3 {
                    let basis = GradedBasis::new(p.chart(), k, w);
                    for (i, (frame, e)) in basis.elements().iter().enumerate() {
                        let direct = p.lichnerowicz(&basis.polyvector(i)).unwrap();
                        let mut via = Polyvector::zero(p.chart(), k + 1);
                        for (j, c) in d.apply(p.chart(), frame, e) {
                            via = via + Polyvector::monomial(c, &j).unwrap();
                        }
                        assert_eq!(via, direct, "{} on {}", p.bivector(), basis.polyvector(i));
                    }
                }
            }
        }
    }

    #[test]
    fn complex_property() {
        for p in random_structures() {
            let m = homogeneity_weight(&p).unwrap();
            for k in 0..p.chart().dim() - 1 {
                for w in -2..4 {
                    let a = dpi_matrix(&p, k, w).unwrap();
                    let b = dpi_matrix(&p, k + 1, w + m).unwrap();
                    assert!(b.mul(&a).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn deterministic_matrices() {
        for p in random_structures() {
            assert_eq!(dpi_matrix(&p, 1, 1).unwrap(), dpi_matrix(&p, 1, 1).unwrap());
        }
    }

    #[test]
    fn symplectic_plane_degree_zero_matrix() {
        let c = Chart::new(&["w", "z"]).unwrap();
        let p = PoissonStructure::standard_symplectic(&c).unwrap();
        let a = dpi_matrix(&p, 0, 1).unwrap();
        assert_eq!((a.rows(), a.cols()), (2, 2));
        assert_eq!(rank_exact(&a), 2);
    }

    #[test]
    fn zero_structure_has_full_chains() {
        let c = Chart::new(&["w", "z"]).unwrap();
        let t = cohomology_table(&PoissonStructure::zero(&c), 2, 3).unwrap();
        for cell in &t.cells {
            assert_eq!(cell.dim_h, cell.dim_chain);
        }
        assert!(t.euler_consistent());
        assert!(t.to_text().contains("H^2"));
    }

    #[test]
    fn non_homogeneous_rejected() {
        let c = Chart::new(&["w", "z"]).unwrap();
        let p = PoissonStructure::surface(parse_poly("1 + w", &c).unwrap()).unwrap();
        assert!(matches!(cohomology_table(&p, 2, 2), Err(Error::NotHomogeneous)));
    }
}
