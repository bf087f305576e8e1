//! Log-symplectic and holonomicity diagnostics.
//!
//! The verdict pipeline is: a non-reduced degeneracy divisor rules out holonomicity;
//! on surfaces, a reduced one is equivalent to it; in higher dimension, a
//! positive-dimensional family of points where both `π` and `ζ` vanish is an
//! obstruction. Anything else is reported as "no obstruction found", which is not a
//! certificate.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{buchberger_with_budget, GroebnerBasis, QuotientDim, DEFAULT_BUDGET};
use crate::multivec::Polyvector;
use crate::order::MonomialOrder;
use crate::poisson::PoissonStructure;
use crate::poly::{gcd_multi, is_squarefree, Poly};

/// Pfaffian of `π` and whether its zero set is reduced. A nonzero constant
/// Pfaffian (symplectic structure) has an empty, hence reduced, divisor.
pub fn degeneracy_divisor(p: &PoissonStructure) -> Result<(Poly, bool)> {
    let f = p.pfaffian()?;
    if f.is_zero() {
        return Err(Error::DegenerateEverywhere);
    }
    if f.is_constant() {
        return Ok((f, true));
    }
    let reduced = is_squarefree(&f)?;
    Ok((f, reduced))
}

pub fn is_log_symplectic(p: &PoissonStructure) -> Result<bool> {
    Ok(degeneracy_divisor(p)?.1)
}

/// Points where `π` and `ζ` both vanish.
#[derive(Debug, Clone, Serialize)]
pub struct ZeroLeafLocus {
    pub ideal: GroebnerBasis,
    pub dimension: i64,
}

/// Zero set of every coefficient of `π` together with every component of `ζ`.
pub fn zero_leaf_locus(p: &PoissonStructure) -> Result<ZeroLeafLocus> {
    zero_leaf_locus_with_budget(p, DEFAULT_BUDGET)
}

pub fn zero_leaf_locus_with_budget(p: &PoissonStructure, budget: u64) -> Result<ZeroLeafLocus> {
    let mut gens: Vec<Poly> = p.bivector().coefficients().cloned().collect();
    gens.extend(p.modular_field().coefficients().cloned());
    if gens.is_empty() {
        gens.push(Poly::zero(p.chart()));
    }
    let ideal = buchberger_with_budget(&gens, MonomialOrder::Grevlex, budget)?;
    let dimension = ideal.ideal_dimension();
    Ok(ZeroLeafLocus { ideal, dimension })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    NotLogSymplectic,
    ObstructedByModularLeaves,
    SurfaceHolonomic,
    /// Not a holonomicity certificate.
    NoObstructionFound,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `gcd(f, ∂f)`, a nonconstant factor of the Pfaffian that appears squared.
    RepeatedFactor { pfaffian: Poly, factor: Poly },
    ZeroLeafIdeal { ideal: GroebnerBasis, dimension: i64 },
}

#[derive(Debug, Clone, Serialize)]
pub struct HolonomyVerdict {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
}

pub fn holonomy_verdict(p: &PoissonStructure) -> Result<HolonomyVerdict> {
    holonomy_verdict_with_budget(p, DEFAULT_BUDGET)
}

pub fn holonomy_verdict_with_budget(p: &PoissonStructure, budget: u64) -> Result<HolonomyVerdict> {
    let (f, reduced) = degeneracy_divisor(p)?;
    if !reduced {
        let mut all = vec![f.clone()];
        all.extend(f.gradient());
        let factor = gcd_multi(&all)?;
        return Ok(HolonomyVerdict {
            verdict: Verdict::NotLogSymplectic,
            witness: Some(Witness::RepeatedFactor { pfaffian: f, factor }),
        });
    }
    if p.chart().dim() == 2 {
        return Ok(HolonomyVerdict { verdict: Verdict::SurfaceHolonomic, witness: None });
    }
    let locus = zero_leaf_locus_with_budget(p, budget)?;
    if locus.dimension >= 1 {
        return Ok(HolonomyVerdict {
            verdict: Verdict::ObstructedByModularLeaves,
            witness: Some(Witness::ZeroLeafIdeal { ideal: locus.ideal, dimension: locus.dimension }),
        });
    }
    Ok(HolonomyVerdict { verdict: Verdict::NoObstructionFound, witness: None })
}

/// Leaves of a Poisson surface `f ∂w∧∂z`: the open leaf `f ≠ 0`, the smooth part of
/// `f = 0`, and the points of the singular scheme `(f, f_w, f_z)`.
#[derive(Debug, Clone, Serialize)]
pub struct SurfaceLeafReport {
    pub f: Poly,
    pub open_leaf: String,
    pub singular_ideal: GroebnerBasis,
    pub singular_dimension: i64,
    pub tjurina_total: QuotientDim,
    /// Set when `f` is not squarefree: the singular locus then contains whole
    /// components of the curve.
    pub contains_multiple_components: bool,
}

fn surface_pfaffian(p: &PoissonStructure) -> Result<Poly> {
    let n = p.chart().dim();
    if n != 2 {
        return Err(Error::NotSurface(n));
    }
    let f = p.pfaffian()?;
    if f.is_zero() {
        return Err(Error::DegenerateEverywhere);
    }
    Ok(f)
}

pub fn surface_leaf_report(p: &PoissonStructure) -> Result<SurfaceLeafReport> {
    surface_leaf_report_with_budget(p, DEFAULT_BUDGET)
}

pub fn surface_leaf_report_with_budget(p: &PoissonStructure, budget: u64) -> Result<SurfaceLeafReport> {
    let f = surface_pfaffian(p)?;
    let mut gens = vec![f.clone()];
    gens.extend(f.gradient());
    let singular_ideal = buchberger_with_budget(&gens, MonomialOrder::Grevlex, budget)?;
    let contains_multiple_components = !f.is_constant() && !is_squarefree(&f)?;
    Ok(SurfaceLeafReport {
        open_leaf: format!("{{{f} != 0}}"),
        singular_dimension: singular_ideal.ideal_dimension(),
        tjurina_total: singular_ideal.quotient_dimension(),
        singular_ideal,
        contains_multiple_components,
        f,
    })
}

/// Second Poisson cohomology of a log symplectic surface: `dim H² = b₂(U) + τ`,
/// valid when every singular point of the curve is quasi-homogeneous.
#[derive(Debug, Clone, Serialize)]
pub struct SurfaceH2Report {
    pub f: Poly,
    /// Total Tjurina number over the singular points of `f = 0`.
    pub tjurina_total: u64,
    /// Total Milnor number of `f` over the same points.
    pub milnor_total: u64,
    /// Saito's criterion: quasi-homogeneous everywhere iff Milnor and Tjurina
    /// totals agree.
    pub quasi_homogeneous: bool,
    pub formula: String,
    /// User-supplied `b0, b1, b2` of the complement `U`; never computed here.
    pub betti_u: Option<Vec<u64>>,
    /// Present only when the quasi-homogeneity check passed and Betti numbers were given.
    pub dim_h2: Option<u64>,
}

pub fn surface_h2_report(p: &PoissonStructure, betti_u: Option<&[u64]>) -> Result<SurfaceH2Report> {
    surface_h2_report_with_budget(p, betti_u, DEFAULT_BUDGET)
}

pub fn surface_h2_report_with_budget(
    p: &PoissonStructure,
    betti_u: Option<&[u64]>,
    budget: u64,
) -> Result<SurfaceH2Report> {
    let f = surface_pfaffian(p)?;
    if let Some(b) = betti_u {
        if b.len() != 3 {
            return Err(Error::BettiCount { expected: 3, found: b.len() });
        }
    }
    if !f.is_constant() && !is_squarefree(&f)? {
        return Err(Error::NotSquarefree(f.to_string()));
    }
    let (tjurina_total, milnor_total) = if f.is_constant() {
        (0, 0)
    } else {
        let mut gens = vec![f.clone()];
        gens.extend(f.gradient());
        let tau = buchberger_with_budget(&gens, MonomialOrder::Grevlex, budget)?
            .quotient_dimension()
            .finite()
            .expect("a reduced curve has isolated singular points");
        (tau, milnor_on_curve(&f, budget)?)
    };
    let quasi_homogeneous = tjurina_total == milnor_total;
    let dim_h2 = match betti_u {
        Some(b) if quasi_homogeneous => Some(b[2] + tjurina_total),
        _ => None,
    };
    let formula = match betti_u {
        Some(b) => format!("{} + {tjurina_total}", b[2]),
        None => format!("b2(U) + {tjurina_total}"),
    };
    Ok(SurfaceH2Report {
        f,
        tjurina_total,
        milnor_total,
        quasi_homogeneous,
        formula,
        betti_u: betti_u.map(<[u64]>::to_vec),
        dim_h2,
    })
}

/// `Σ μ_p` over the points of `f = 0` where `df` vanishes: `dim O/(f_w, f_z, f^N)` once
/// it stops growing in `N` (away from the curve `f^N` is a unit, on it nilpotent).
fn milnor_on_curve(f: &Poly, budget: u64) -> Result<u64> {
    let grad = f.gradient();
    let mut previous: Option<u64> = None;
    let mut power = f.clone();
    loop {
        let mut gens = grad.clone();
        gens.push(power.clone());
        let d = buchberger_with_budget(&gens, MonomialOrder::Grevlex, budget)?
            .quotient_dimension()
            .finite()
            .expect("singular points of a reduced curve are isolated");
        if previous == Some(d) {
            return Ok(d);
        }
        previous = Some(d);
        power = &power * f;
    }
}

/// `ζ` followed by `H_{x_i}` for each coordinate: generators of the modular foliation.
pub fn modular_foliation_generators(p: &PoissonStructure) -> Vec<Polyvector> {
    let mut out = vec![p.modular_field()];
    for i in 0..p.chart().dim() {
        out.push(p.hamiltonian(&Poly::var(p.chart(), i)).expect("same chart"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chart::{Chart, ChartRef};
    use crate::multivec::parse_polyvector;
    use crate::poly::{parse_poly, rat, Rational};

    fn wz() -> ChartRef {
        Chart::new(&["w", "z"]).unwrap()
    }

    fn surface(text: &str) -> PoissonStructure {
        PoissonStructure::surface(parse_poly(text, &wz()).unwrap()).unwrap()
    }

    fn lambda4() -> PoissonStructure {
        let lam: Vec<Vec<Rational>> = [[0, 1, 1, -2], [-1, 0, 1, 1], [-1, -1, 0, 1], [2, -1, -1, 0]]
            .iter()
            .map(|r| r.iter().map(|&x| rat(x)).collect())
            .collect();
        PoissonStructure::diagonal_quadratic(&Chart::numbered(4).unwrap(), &lam).unwrap()
    }

    #[test]
    fn divisors() {
        let (f, r) = degeneracy_divisor(&surface("w*z")).unwrap();
        assert_eq!(f.to_string(), "w*z");
        assert!(r);
        assert!(!degeneracy_divisor(&surface("w^2")).unwrap().1);
        let (f, r) = degeneracy_divisor(&lambda4()).unwrap();
        assert_eq!(f.to_string(), "-2*x1*x2*x3*x4");
        assert!(r);
        let c3 = Chart::numbered(3).unwrap();
        assert!(matches!(degeneracy_divisor(&PoissonStructure::zero(&c3)), Err(Error::OddDimension(3))));
        assert!(matches!(degeneracy_divisor(&PoissonStructure::zero(&wz())), Err(Error::DegenerateEverywhere)));
    }

    #[test]
    fn log_symplectic_examples() {
        assert!(is_log_symplectic(&PoissonStructure::standard_symplectic(&wz()).unwrap()).unwrap());
        assert!(!is_log_symplectic(&surface("w^2")).unwrap());
        assert!(is_log_symplectic(&surface("w^2 - z^3")).unwrap());
    }

    #[test]
    fn zero_leaves() {
        let z = zero_leaf_locus(&PoissonStructure::standard_symplectic(&wz()).unwrap()).unwrap();
        assert_eq!(z.dimension, -1);
        let z = zero_leaf_locus(&surface("w*z")).unwrap();
        assert_eq!(z.ideal.gens(), &[Poly::var(&wz(), 0), Poly::var(&wz(), 1)]);
        assert_eq!(z.dimension, 0);
        let z = zero_leaf_locus(&lambda4()).unwrap();
        let c = z.ideal.chart().clone();
        let expected: Vec<Poly> = ["x1*x4", "x2", "x3"].iter().map(|t| parse_poly(t, &c).unwrap()).collect();
        assert_eq!(z.ideal.gens(), expected.as_slice());
        assert_eq!(z.dimension, 1);
    }

    #[test]
    fn verdicts() {
        assert_eq!(holonomy_verdict(&surface("w^2")).unwrap().verdict, Verdict::NotLogSymplectic);
        assert_eq!(holonomy_verdict(&surface("w*z")).unwrap().verdict, Verdict::SurfaceHolonomic);
        let v = holonomy_verdict(&lambda4()).unwrap();
        assert_eq!(v.verdict, Verdict::ObstructedByModularLeaves);
        assert!(matches!(v.witness, Some(Witness::ZeroLeafIdeal { dimension: 1, .. })));
        // symplectic in dimension 4: nothing vanishes
        let c4 = Chart::numbered(4).unwrap();
        let s = PoissonStructure::standard_symplectic(&c4).unwrap();
        assert_eq!(holonomy_verdict(&s).unwrap().verdict, Verdict::NoObstructionFound);
        match holonomy_verdict(&surface("w^2*z")).unwrap().witness {
            Some(Witness::RepeatedFactor { factor, .. }) => assert_eq!(factor.to_string(), "w"),
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn surface_leaves() {
        let r = surface_leaf_report(&surface("w*z")).unwrap();
        assert_eq!((r.singular_dimension, r.tjurina_total), (0, QuotientDim::Finite(1)));
        let r = surface_leaf_report(&surface("w^2")).unwrap();
        assert_eq!(r.singular_ideal.gens(), &[Poly::var(&wz(), 0)]);
        assert_eq!((r.singular_dimension, r.tjurina_total), (1, QuotientDim::Infinite));
        assert!(r.contains_multiple_components);
        let r = surface_leaf_report(&surface("w^2 - z^3")).unwrap();
        assert_eq!((r.singular_dimension, r.tjurina_total), (0, QuotientDim::Finite(2)));
        assert!(matches!(surface_leaf_report(&lambda4()), Err(Error::NotSurface(4))));
    }

    #[test]
    fn h2_reports() {
        let r = surface_h2_report(&surface("w*z"), Some(&[1, 2, 1])).unwrap();
        assert_eq!(r.dim_h2, Some(2));
        assert!(r.quasi_homogeneous);
        let r = surface_h2_report(&surface("w*z"), None).unwrap();
        assert_eq!(r.formula, "b2(U) + 1");
        let r = surface_h2_report(&surface("w - z"), None).unwrap();
        assert_eq!(r.formula, "b2(U) + 0");
        assert!(matches!(surface_h2_report(&surface("w^2"), None), Err(Error::NotSquarefree(_))));
        // w^4 + z^5 + w^2 z^3 is the classic non-quasi-homogeneous germ: mu = 12, tau = 11
        let r = surface_h2_report(&surface("w^4 + z^5 + w^2*z^3"), Some(&[1, 1, 0])).unwrap();
        assert_eq!((r.milnor_total, r.tjurina_total), (12, 11));
        assert!(!r.quasi_homogeneous);
        assert_eq!(r.dim_h2, None);
    }

    #[test]
    fn tjurina_total_is_the_sum_of_local_numbers() {
        use crate::groebner::tjurina_at;
        let f = parse_poly("w*z*(w - z)", &wz()).unwrap();
        let r = surface_h2_report(&PoissonStructure::surface(f.clone()).unwrap(), None).unwrap();
        let local = tjurina_at(&f, &[rat(0), rat(0)], DEFAULT_BUDGET).unwrap();
        assert_eq!(QuotientDim::Finite(r.tjurina_total), local);
        // two nodes, at (0,0) and (1,0)
        let g = parse_poly("z*(z - w*(w - 1))", &wz()).unwrap();
        let r = surface_h2_report(&PoissonStructure::surface(g.clone()).unwrap(), None).unwrap();
        let sum: u64 = [[0, 0], [1, 0]]
            .iter()
            .map(|p| tjurina_at(&g, &[rat(p[0]), rat(p[1])], DEFAULT_BUDGET).unwrap().finite().unwrap())
            .sum();
        assert_eq!(r.tjurina_total, sum);
        assert_eq!(sum, 2);
    }

    #[test]
    fn foliation_generators() {
        let gens = modular_foliation_generators(&surface("w^2*z - z"));
        let c = wz();
        assert_eq!(gens[0], parse_polyvector("2*w*z dz - (w^2 - 1) dw", &c).unwrap());
        assert_eq!(gens[1], parse_polyvector("(w^2*z - z) dz", &c).unwrap());
        assert_eq!(gens[2], parse_polyvector("-(w^2*z - z) dw", &c).unwrap());
        let gens = modular_foliation_generators(&PoissonStructure::standard_symplectic(&c).unwrap());
        assert!(gens[0].is_zero());
        assert_eq!(gens[1], parse_polyvector("dz", &c).unwrap());
        assert!(modular_foliation_generators(&PoissonStructure::zero(&c)).iter().all(Polyvector::is_zero));
    }
}
