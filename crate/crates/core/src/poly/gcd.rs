//! Multivariate gcd by recursive content / primitive-part splitting with
//! subresultant pseudo-remainder sequences in the main variable.

use super::{Degree, Poly};
use crate::error::{Error, Result};
use crate::order::MonomialOrder;

/// Coefficients of `p` viewed as a polynomial in `var`, lowest degree first.
fn coeffs_in(p: &Poly, var: usize) -> Vec<Poly> {
    let deg = match p.degree_in(var) {
        Degree::NegInfinity => return Vec::new(),
        Degree::Finite(d) => d as usize,
    };
    let mut out = vec![Poly::zero(p.chart()); deg + 1];
    for (e, c) in p.terms() {
        let mut e2 = e.clone();
        let k = e2[var] as usize;
        e2[var] = 0;
        out[k].add_term(e2, c.clone());
    }
    out
}

fn from_coeffs(chart_of: &Poly, coeffs: &[Poly], var: usize) -> Poly {
    let mut out = Poly::zero(chart_of.chart());
    for (k, c) in coeffs.iter().enumerate() {
        for (e, x) in c.terms() {
            let mut e2 = e.clone();
            e2[var] += k as u32;
            out.add_term(e2, x.clone());
        }
    }
    out
}

fn trim(v: &mut Vec<Poly>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn normalize(p: Poly) -> Poly {
    p.monic(MonomialOrder::Grevlex)
}

/// Gcd of the coefficients of `p` in `var`.
fn content(p: &Poly, var: usize) -> Poly {
    let mut g: Option<Poly> = None;
    for c in coeffs_in(p, var).into_iter().filter(|c| !c.is_zero()) {
        g = Some(match g {
            None => normalize(c),
            Some(g) => gcd2(&g, &c),
        });
        if g.as_ref().is_some_and(|g| g.is_constant()) {
            break;
        }
    }
    g.unwrap_or_else(|| Poly::zero(p.chart()))
}

fn primitive_part(p: &Poly, var: usize) -> Poly {
    let c = content(p, var);
    p.div_exact(&c).expect("content divides its polynomial")
}

/// `lc(b)^(deg a - deg b + 1) * a mod b`, coefficient vectors in the main variable.
fn pseudo_remainder(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let db = b.len() - 1;
    let lcb = &b[db];
    let mut r = a.to_vec();
    let mut e = (a.len() - b.len() + 1) as u32;
    trim(&mut r);
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lcr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = &*c * lcb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] = &r[i + shift] - &(&lcr * bc);
        }
        trim(&mut r);
        e -= 1;
    }
    if e > 0 {
        let f = lcb.pow(e);
        for c in r.iter_mut() {
            *c = &*c * &f;
        }
    }
    r
}

/// Gcd of two polynomials that both involve `var` and are primitive in it.
fn subresultant_gcd(a: &Poly, b: &Poly, var: usize) -> Poly {
    let mut a = coeffs_in(a, var);
    let mut b = coeffs_in(b, var);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    let one = Poly::one(a[0].chart());
    let mut g = one.clone();
    let mut h = one.clone();
    loop {
        let delta = (a.len() - b.len()) as u32;
        let r = pseudo_remainder(&a, &b);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            return one;
        }
        let divisor = &g * &h.pow(delta);
        a = b;
        b = r
            .iter()
            .map(|c| c.div_exact(&divisor).expect("subresultant division is exact"))
            .collect();
        g = a[a.len() - 1].clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            d => g.pow(d).div_exact(&h.pow(d - 1)).expect("subresultant division is exact"),
        };
    }
    let template = &a[0];
    primitive_part(&from_coeffs(template, &b, var), var)
}

/// Gcd of two nonzero polynomials, monic under grevlex.
fn gcd2(a: &Poly, b: &Poly) -> Poly {
    if a.is_constant() || b.is_constant() {
        return Poly::one(a.chart());
    }
    let n = a.chart().dim();
    let var = (0..n).find(|&v| a.uses_var(v) || b.uses_var(v)).expect("nonconstant");
    if !a.uses_var(var) {
        return gcd2(a, &content(b, var));
    }
    if !b.uses_var(var) {
        return gcd2(&content(a, var), b);
    }
    let ca = content(a, var);
    let cb = content(b, var);
    let c = gcd2(&ca, &cb);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    normalize(&c * &subresultant_gcd(&pa, &pb, var))
}

/// Greatest common divisor of a list of polynomials, normalized to leading
/// coefficient 1 under grevlex. Zero entries are ignored.
pub fn gcd_multi(ps: &[Poly]) -> Result<Poly> {
    let mut nonzero = ps.iter().filter(|p| !p.is_zero());
    let first = nonzero.next().ok_or(Error::ZeroInput)?;
    let mut g = normalize(first.clone());
    for p in nonzero {
        if g.is_constant() {
            break;
        }
        if g.chart() != p.chart() {
            return Err(Error::ChartMismatch);
        }
        g = gcd2(&g, p);
    }
    Ok(g)
}

/// Whether `p` has no repeated factor, i.e. `gcd(p, dp/dx_1, ..., dp/dx_n)` is constant.
pub fn is_squarefree(p: &Poly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroInput);
    }
    if p.is_constant() {
        return Err(Error::ConstantInput);
    }
    let mut gens = vec![p.clone()];
    gens.extend(p.gradient());
    Ok(gcd_multi(&gens)?.is_constant())
}
