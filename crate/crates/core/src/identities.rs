//! Exact checks of the polyvector calculus identities, and a seeded random suite
//! that runs them over several charts and Poisson families.

use std::fmt;

use serde::Serialize;

use crate::chart::{Chart, ChartRef};
use crate::error::Result;
use crate::multivec::{parse_polyvector, OneForm, Polyvector};
use crate::poisson::PoissonStructure;
use crate::poly::Poly;
use crate::sample::Sampler;

fn signed(a: &Polyvector, odd: bool) -> Polyvector {
    if odd {
        -a
    } else {
        a.clone()
    }
}

fn add(a: &Polyvector, b: &Polyvector) -> Result<Polyvector> {
    a.checked_add(b)
}

fn sub(a: &Polyvector, b: &Polyvector) -> Result<Polyvector> {
    a.checked_sub(b)
}

/// `Δ(Δa) = 0`.
pub fn bv_squared(a: &Polyvector) -> bool {
    a.bv().bv().is_zero()
}

/// `Δ[a,b] = [Δa, b] − (−1)^{|a|} [a, Δb]`.
pub fn bv_derivation(a: &Polyvector, b: &Polyvector) -> Result<bool> {
    let lhs = a.schouten(b)?.bv();
    let rhs = sub(&a.bv().schouten(b)?, &signed(&a.schouten(&b.bv())?, a.degree() % 2 == 1))?;
    Ok(lhs == rhs)
}

/// `[a,b] = −(−1)^{(|a|−1)(|b|−1)} [b,a]`.
pub fn graded_antisymmetry(a: &Polyvector, b: &Polyvector) -> Result<bool> {
    let odd = shifted_odd(a, b);
    Ok(a.schouten(b)? == signed(&-b.schouten(a)?, odd))
}

/// `[a, b∧c] = [a,b]∧c + (−1)^{(|a|−1)|b|} b∧[a,c]`.
pub fn graded_leibniz(a: &Polyvector, b: &Polyvector, c: &Polyvector) -> Result<bool> {
    let lhs = a.schouten(&b.wedge(c)?)?;
    let odd = (a.degree() + 1) * b.degree() % 2 == 1;
    let rhs = add(&a.schouten(b)?.wedge(c)?, &signed(&b.wedge(&a.schouten(c)?)?, odd))?;
    Ok(lhs == rhs)
}

/// `[a,[b,c]] = [[a,b],c] + (−1)^{(|a|−1)(|b|−1)} [b,[a,c]]`.
pub fn graded_jacobi(a: &Polyvector, b: &Polyvector, c: &Polyvector) -> Result<bool> {
    let lhs = a.schouten(&b.schouten(c)?)?;
    let rhs = add(&a.schouten(b)?.schouten(c)?, &signed(&b.schouten(&a.schouten(c)?)?, shifted_odd(a, b)))?;
    Ok(lhs == rhs)
}

fn shifted_odd(a: &Polyvector, b: &Polyvector) -> bool {
    (a.degree() + 1) * (b.degree() + 1) % 2 == 1
}

/// `ι_{df}(a∧b) = ι_{df}a ∧ b + (−1)^{|a|} a ∧ ι_{df}b`, and `ι_{df}ξ = ξ(f)`.
pub fn contraction_derivation(f: &Poly, a: &Polyvector, b: &Polyvector) -> Result<bool> {
    let df = OneForm::exact(f);
    let lhs = a.wedge(b)?.contract(&df)?;
    let rhs = add(
        &a.contract(&df)?.wedge(b)?,
        &signed(&a.wedge(&b.contract(&df)?)?, a.degree() % 2 == 1),
    )?;
    let on_fields = match a.degree() {
        1 => a.contract(&df)?.coeff(&[]) == a.apply(f)?,
        _ => true,
    };
    Ok(lhs == rhs && on_fields)
}

/// `d_π d_π a = 0`.
pub fn dpi_squared(p: &PoissonStructure, a: &Polyvector) -> Result<bool> {
    Ok(p.lichnerowicz(&p.lichnerowicz(a)?)?.is_zero())
}

/// `L_{H_f} a = d_π ι_{df} a + ι_{df} d_π a`.
pub fn homotopy_hamiltonian(p: &PoissonStructure, f: &Poly, a: &Polyvector) -> Result<bool> {
    let df = OneForm::exact(f);
    let lhs = p.hamiltonian(f)?.lie_derivative(a)?;
    let rhs = add(&p.lichnerowicz(&a.contract(&df)?)?, &p.lichnerowicz(a)?.contract(&df)?)?;
    Ok(lhs == rhs)
}

/// `Δ d_π a + d_π Δ a = L_ζ a`.
pub fn homotopy_modular(p: &PoissonStructure, a: &Polyvector) -> Result<bool> {
    let lhs = add(&p.lichnerowicz(a)?.bv(), &p.lichnerowicz(&a.bv())?)?;
    Ok(lhs == p.modular_field().lie_derivative(a)?)
}

/// `ζ(f) = −Δ H_f`.
pub fn div_ham(p: &PoissonStructure, f: &Poly) -> Result<bool> {
    let lhs = Polyvector::function(p.modular_field().apply(f)?);
    Ok(lhs == -p.hamiltonian(f)?.bv())
}

/// `L_ζ π = 0`.
pub fn modular_symmetry(p: &PoissonStructure) -> Result<bool> {
    Ok(p.modular_field().lie_derivative(p.bivector())?.is_zero())
}

/// `[ζ, H_f] = H_{ζ(f)}`.
pub fn modular_hamiltonian(p: &PoissonStructure, f: &Poly) -> Result<bool> {
    let zeta = p.modular_field();
    Ok(zeta.schouten(&p.hamiltonian(f)?)? == p.hamiltonian(&zeta.apply(f)?)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Identity {
    BvSquared,
    BvDerivation,
    GradedAntisymmetry,
    GradedLeibniz,
    GradedJacobi,
    ContractionDerivation,
    DpiSquared,
    HomotopyHamiltonian,
    HomotopyModular,
    DivHam,
    ModularSymmetry,
    ModularHamiltonian,
}

impl Identity {
    pub const ALL: [Identity; 12] = [
        Identity::BvSquared,
        Identity::BvDerivation,
        Identity::GradedAntisymmetry,
        Identity::GradedLeibniz,
        Identity::GradedJacobi,
        Identity::ContractionDerivation,
        Identity::DpiSquared,
        Identity::HomotopyHamiltonian,
        Identity::HomotopyModular,
        Identity::DivHam,
        Identity::ModularSymmetry,
        Identity::ModularHamiltonian,
    ];

    pub fn formula(self) -> &'static str {
        match self {
            Identity::BvSquared => "Δ(Δa) = 0",
            Identity::BvDerivation => "Δ[a,b] = [Δa,b] − (−1)^|a| [a,Δb]",
            Identity::GradedAntisymmetry => "[a,b] = −(−1)^((|a|−1)(|b|−1)) [b,a]",
            Identity::GradedLeibniz => "[a,b∧c] = [a,b]∧c + (−1)^((|a|−1)|b|) b∧[a,c]",
            Identity::GradedJacobi => "[a,[b,c]] = [[a,b],c] + (−1)^((|a|−1)(|b|−1)) [b,[a,c]]",
            Identity::ContractionDerivation => "ι_df(a∧b) = ι_df a∧b + (−1)^|a| a∧ι_df b",
            Identity::DpiSquared => "d_π d_π a = 0",
            Identity::HomotopyHamiltonian => "L_{H_f} = d_π ι_df + ι_df d_π",
            Identity::HomotopyModular => "Δ d_π + d_π Δ = L_ζ",
            Identity::DivHam => "ζ(f) = −Δ H_f",
            Identity::ModularSymmetry => "L_ζ π = 0",
            Identity::ModularHamiltonian => "[ζ, H_f] = H_{ζ(f)}",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.formula())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityOutcome {
    pub identity: Identity,
    pub formula: &'static str,
    pub chart_dim: usize,
    pub cases: usize,
    pub failures: usize,
    /// Inputs of the first failing case, as text.
    pub first_failure: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub cases_per_chart: usize,
    pub outcomes: Vec<IdentityOutcome>,
}

impl SuiteReport {
    pub fn all_hold(&self) -> bool {
        self.outcomes.iter().all(|o| o.failures == 0)
    }
}

/// A random Poisson structure from the families available on `chart`.
pub fn random_poisson(s: &mut Sampler, chart: &ChartRef, case: usize) -> Result<PoissonStructure> {
    let n = chart.dim();
    let skew = |s: &mut Sampler| PoissonStructure::diagonal_quadratic(chart, &s.skew_matrix(n));
    match (n, case % 3) {
        (2, 0 | 1) => PoissonStructure::surface(s.poly(chart)),
        (3, 0) => PoissonStructure::jacobian3(&s.poly(chart)),
        (3, 1) => {
            let so3 = parse_polyvector("x1 dx2^dx3 - x2 dx1^dx3 + x3 dx1^dx2", chart)?;
            PoissonStructure::new(so3.scale(&Poly::constant(chart, s.coefficient())))
        }
        (4, 0) => {
            // product of two surfaces
            let f = s.poly(&Chart::numbered(2)?);
            let g = s.poly(&Chart::numbered(2)?);
            let lift = |p: &Poly, off: usize| {
                Poly::from_terms(
                    chart,
                    p.terms().iter().map(|(e, c)| {
                        let mut x = vec![0; 4];
                        x[off] = e[0];
                        x[off + 1] = e[1];
                        (x, c.clone())
                    }),
                )
            };
            let pi = Polyvector::from_terms(chart, 2, [(vec![0, 1], lift(&f, 0)), (vec![2, 3], lift(&g, 2))])?;
            PoissonStructure::new(pi)
        }
        _ => skew(s),
    }
}

/// Runs every identity on `cases_per_chart` random inputs for each `n ∈ {2, 3, 4}`.
pub fn run_suite(seed: u64, cases_per_chart: usize) -> Result<SuiteReport> {
    let mut outcomes = Vec::new();
    for n in 2..=4 {
        let chart = Chart::numbered(n)?;
        let mut s = Sampler::new(seed ^ (n as u64) << 32).with_degree(3).with_terms(3);
        let mut tally: Vec<(usize, Option<String>)> = vec![(0, None); Identity::ALL.len()];
        for case in 0..cases_per_chart {
            let a = s.any_polyvector(&chart);
            let b = s.any_polyvector(&chart);
            let c = s.any_polyvector(&chart);
            let f = s.poly(&chart);
            let p = random_poisson(&mut s, &chart, case)?;
            let checks = [
                bv_squared(&a),
                bv_derivation(&a, &b)?,
                graded_antisymmetry(&a, &b)?,
                graded_leibniz(&a, &b, &c)?,
                graded_jacobi(&a, &b, &c)?,
                contraction_derivation(&f, &a, &b)?,
                dpi_squared(&p, &a)?,
                homotopy_hamiltonian(&p, &f, &a)?,
                homotopy_modular(&p, &a)?,
                div_ham(&p, &f)?,
                modular_symmetry(&p)?,
                modular_hamiltonian(&p, &f)?,
            ];
            for (slot, ok) in tally.iter_mut().zip(checks) {
                if !ok {
                    slot.0 += 1;
                    slot.1.get_or_insert_with(|| {
                        format!("pi = {}; f = {}; a = {}; b = {}; c = {}", p.bivector(), f, a, b, c)
                    });
                }
            }
        }
        for (identity, (failures, first_failure)) in Identity::ALL.iter().zip(tally) {
            outcomes.push(IdentityOutcome {
                identity: *identity,
                formula: identity.formula(),
                chart_dim: n,
                cases: cases_per_chart,
                failures,
                first_failure,
            });
        }
    }
    Ok(SuiteReport { seed, cases_per_chart, outcomes })
}
