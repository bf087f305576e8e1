//! Reference computations for the acceptance run. Each one goes through the
//! plainest route available: term-by-term differentiation, dense enumeration,
//! schoolbook Gaussian elimination.

#![allow(dead_code)]

use std::collections::HashMap;

use num_traits::{One, Zero};
use poisson_kit::chart::ChartRef;
use poisson_kit::multivec::Polyvector;
use poisson_kit::poisson::PoissonStructure;
use poisson_kit::poly::{Poly, Rational};

/// `∂p/∂x_var`, term by term.
pub fn partial(p: &Poly, var: usize) -> Poly {
    let terms = p.terms().iter().filter(|(e, _)| e[var] > 0).map(|(e, c)| {
        let mut e = e.clone();
        let k = e[var];
        e[var] -= 1;
        (e, c * Rational::from_integer(k.into()))
    });
    Poly::from_terms(p.chart(), terms.collect::<Vec<_>>())
}

/// Rank over ℚ by row reduction.
pub fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = Rational::one() / rows[r][c].clone();
        let pivot: Vec<Rational> = rows[r].iter().map(|x| x * &inv).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        rows[r] = pivot;
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// All exponent vectors with `Σ weights[i] e[i] = d`.
pub fn monomials(weights: &[u32], d: u64) -> Vec<Vec<u32>> {
    fn go(weights: &[u32], i: usize, left: u64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == weights.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let w = weights[i] as u64;
        for k in 0..=left / w {
            cur.push(k as u32);
            go(weights, i + 1, left - k * w, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(weights, 0, d, &mut Vec::new(), &mut out);
    out
}

/// All exponent vectors of total degree `< n`.
pub fn monomials_below(dim: usize, n: u64) -> Vec<Vec<u32>> {
    (0..n).flat_map(|d| monomials(&vec![1; dim], d)).collect()
}

fn frames(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for last in k - 1..n {
        for mut f in frames(last, k - 1) {
            f.push(last);
            out.push(f);
        }
    }
    out
}

/// Basis of `k`-vectors `x^a ∂_I` of weight `wdeg(x^a) - Σ_{i∈I} w_i = w`.
pub fn graded_basis(chart: &ChartRef, k: usize, w: i64) -> Vec<(Vec<usize>, Vec<u32>)> {
    let weights = chart.weights();
    let mut out = Vec::new();
    for f in frames(chart.dim(), k) {
        let d = w + f.iter().map(|&i| weights[i] as i64).sum::<i64>();
        if d >= 0 {
            for a in monomials(weights, d as u64) {
                out.push((f.clone(), a));
            }
        }
    }
    out
}

/// `dim H^k_w` of `d_π = [π, -]`, with `d_π` evaluated by the Schouten bracket.
pub fn brute_cohomology(p: &PoissonStructure, m: i64, k: usize, w: i64) -> usize {
    let chart = p.chart();
    let src = graded_basis(chart, k, w);
    if src.is_empty() {
        return 0;
    }
    let out_rank = differential_rank(p, k, w, m);
    let in_rank = if k == 0 { 0 } else { differential_rank(p, k - 1, w - m, m) };
    src.len() - out_rank - in_rank
}

fn differential_rank(p: &PoissonStructure, k: usize, w: i64, m: i64) -> usize {
    let chart = p.chart();
    let src = graded_basis(chart, k, w);
    let dst = graded_basis(chart, k + 1, w + m);
    if src.is_empty() || dst.is_empty() {
        return 0;
    }
    let index: HashMap<_, _> = dst.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let rows = src
        .iter()
        .map(|(frame, a)| {
            let e = Polyvector::monomial(Poly::monomial(chart, a.clone(), Rational::one()), frame).unwrap();
            let image = p.bivector().schouten(&e).unwrap();
            let mut row = vec![Rational::zero(); dst.len()];
            for (fr, coeff) in image.terms() {
                for (exps, c) in coeff.terms() {
                    let i = index[&(fr.clone(), exps.clone())];
                    row[i] += c;
                }
            }
            row
        })
        .collect();
    rank(rows)
}

/// `dim O/(f, ∂f) + m^N` computed on the truncated jet space of degree `< N`.
pub fn jet_tjurina(f: &Poly, n: u64) -> usize {
    let dim = f.chart().dim();
    let mut gens = vec![f.clone()];
    gens.extend((0..dim).map(|i| partial(f, i)));
    let basis = monomials_below(dim, n);
    let index: HashMap<_, _> = basis.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let mut rows = Vec::new();
    for g in &gens {
        for mono in &basis {
            let mut row = vec![Rational::zero(); basis.len()];
            let mut any = false;
            for (e, c) in g.terms() {
                let prod: Vec<u32> = e.iter().zip(mono).map(|(a, b)| a + b).collect();
                if let Some(&i) = index.get(&prod) {
                    row[i] += c;
                    any = true;
                }
            }
            if any {
                rows.push(row);
            }
        }
    }
    basis.len() - rank(rows)
}

/// Coefficients `c_k` of the modular field `Σ c_k x_k ∂_k` of a diagonal
/// quadratic structure `{x_i, x_j} = λ_ij x_i x_j`: the column sums of λ.
pub fn diagonal_modular_coefficients(lambda: &[Vec<Rational>]) -> Vec<Rational> {
    let n = lambda.len();
    (0..n).map(|k| (0..n).map(|i| lambda[i][k].clone()).sum()).collect()
}
