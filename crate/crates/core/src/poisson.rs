//! Poisson structures as validated bivectors, with Hamiltonian vector fields,
//! the Lichnerowicz differential, the Pfaffian and the modular vector field.
//!
//! With the bracket conventions of [`crate::multivec`]:
//!
//! * `H_f = ι_{df} π`, so `H_f(g) = {f, g} = ⟨π, df ∧ dg⟩`; for `π = f ∂w∧∂z` this gives
//!   `H_w = f ∂z` and `H_z = −f ∂w`;
//! * `d_π = [π, −]` and `d_π f = −H_f`;
//! * `ζ = Δπ`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::chart::{same_chart, ChartRef};
use crate::error::{Error, Result};
use crate::multivec::{OneForm, Polyvector};
use crate::poly::{Poly, Rational};

#[derive(Clone, Debug, PartialEq)]
pub struct PoissonStructure {
    pi: Polyvector,
    jacobiator_checked: bool,
}

/// First-order operator `ζ(f) + H_f` generating the top D-module cohomology.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DIdealGenerator {
    pub source: Poly,
    pub scalar_part: Poly,
    pub vector_part: Polyvector,
}

/// `[π, π]`, the trivector whose vanishing is the Jacobi identity.
pub fn jacobiator(pi: &Polyvector) -> Result<Polyvector> {
    if pi.degree() != 2 && !(pi.is_zero() && pi.chart().dim() < 2) {
        return Err(Error::DegreeMismatch { expected: 2, found: pi.degree() });
    }
    pi.schouten(pi)
}

/// Pfaffian of an arbitrary bivector on an even-dimensional chart.
pub fn pfaffian(pi: &Polyvector) -> Result<Poly> {
    let chart = pi.chart();
    let n = chart.dim();
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    if pi.degree() != 2 && !pi.is_zero() {
        return Err(Error::DegreeMismatch { expected: 2, found: pi.degree() });
    }
    let mut power = Polyvector::function(Poly::one(chart));
    let mut factorial = BigInt::one();
    for m in 1..=n / 2 {
        power = power.wedge(pi)?;
        factorial *= BigInt::from(m);
    }
    let top: Vec<usize> = (0..n).collect();
    Ok(power.coeff(&top).scale(&Rational::from_integer(factorial).recip()))
}

impl PoissonStructure {
    /// Validates `[π, π] = 0`.
    pub fn new(pi: Polyvector) -> Result<Self> {
        let j = jacobiator(&pi)?;
        if !j.is_zero() {
            return Err(Error::JacobiFailure { jacobiator: Box::new(j) });
        }
        Ok(PoissonStructure { pi, jacobiator_checked: true })
    }

    /// `f ∂_1 ∧ ∂_2` on a two-dimensional chart.
    pub fn surface(f: Poly) -> Result<Self> {
        let n = f.chart().dim();
        if n != 2 {
            return Err(Error::InvalidChart(format!("a surface needs a 2-chart, got dimension {n}")));
        }
        Self::new(Polyvector::monomial(f, &[0, 1])?)
    }

    /// The zero bivector.
    pub fn zero(chart: &ChartRef) -> Self {
        PoissonStructure { pi: Polyvector::zero(chart, 2), jacobiator_checked: true }
    }

    /// Constant symplectic structure `∂_1∧∂_2 + ∂_3∧∂_4 + ...` on an even chart.
    pub fn standard_symplectic(chart: &ChartRef) -> Result<Self> {
        let n = chart.dim();
        if n % 2 == 1 {
            return Err(Error::OddDimension(n));
        }
        let terms = (0..n / 2).map(|i| (vec![2 * i, 2 * i + 1], Poly::one(chart)));
        Self::new(Polyvector::from_terms(chart, 2, terms)?)
    }

    /// Jacobian structure on a 3-chart: `{x,y} = ∂F/∂z`, `{y,z} = ∂F/∂x`, `{z,x} = ∂F/∂y`.
    /// Every such bivector is Poisson and has `F` as a Casimir.
    pub fn jacobian3(f: &Poly) -> Result<Self> {
        let chart = f.chart();
        if chart.dim() != 3 {
            return Err(Error::InvalidChart(format!(
                "the Jacobian builder needs a 3-chart, got dimension {}",
                chart.dim()
            )));
        }
        let terms = vec![(vec![0, 1], f.d(2)), (vec![1, 2], f.d(0)), (vec![2, 0], f.d(1))];
        let pi = Polyvector::from_terms(chart, 2, terms)?;
        let p = Self::new(pi).expect("Jacobian bivectors always satisfy the Jacobi identity");
        debug_assert!(p.lichnerowicz(&Polyvector::function(f.clone())).unwrap().is_zero());
        Ok(p)
    }

    /// Log-canonical structure `Σ_{i<j} λ_ij (x_i ∂_i) ∧ (x_j ∂_j)` for a skew matrix `λ`.
    pub fn diagonal_quadratic(chart: &ChartRef, lambda: &[Vec<Rational>]) -> Result<Self> {
        let n = chart.dim();
        if lambda.len() != n || lambda.iter().any(|r| r.len() != n) {
            return Err(Error::NotSkew(format!("expected a {n}x{n} matrix")));
        }
        for i in 0..n {
            if !lambda[i][i].is_zero() {
                return Err(Error::NotSkew(format!("diagonal entry ({}, {}) is nonzero", i + 1, i + 1)));
            }
            for j in i + 1..n {
                if lambda[i][j] != -lambda[j][i].clone() {
                    return Err(Error::NotSkew(format!(
                        "entries ({}, {}) and ({}, {}) are not opposite",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        let mut terms = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let xx = &Poly::var(chart, i) * &Poly::var(chart, j);
                terms.push((vec![i, j], xx.scale(&lambda[i][j])));
            }
        }
        let p = Self::new(Polyvector::from_terms(chart, 2, terms)?)?;
        Ok(p)
    }

    pub fn chart(&self) -> &ChartRef {
        self.pi.chart()
    }

    pub fn bivector(&self) -> &Polyvector {
        &self.pi
    }

    pub fn jacobiator_checked(&self) -> bool {
        self.jacobiator_checked
    }

    /// Bracket `{x_i, x_j}` of two coordinates.
    pub fn bracket_of_coordinates(&self, i: usize, j: usize) -> Poly {
        self.pi.component(&[i, j])
    }

    /// `{f, g} = H_f(g)`.
    pub fn bracket(&self, f: &Poly, g: &Poly) -> Result<Poly> {
        self.hamiltonian(f)?.apply(g)
    }

    /// Hamiltonian vector field `H_f = π♯(df)`.
    pub fn hamiltonian(&self, f: &Poly) -> Result<Polyvector> {
        if !same_chart(f.chart(), self.chart()) {
            return Err(Error::ChartMismatch);
        }
        let h = self.pi.contract(&OneForm::exact(f))?;
        Ok(if h.is_zero() { Polyvector::zero(self.chart(), 1) } else { h })
    }

    /// Lichnerowicz differential `d_π a = [π, a]`.
    pub fn lichnerowicz(&self, a: &Polyvector) -> Result<Polyvector> {
        self.pi.schouten(a)
    }

    /// Coefficient of `∂_1∧...∧∂_n` in `π^{n/2} / (n/2)!`.
    pub fn pfaffian(&self) -> Result<Poly> {
        pfaffian(&self.pi)
    }

    /// Modular vector field `ζ = Δπ` for the standard covolume.
    pub fn modular_field(&self) -> Polyvector {
        let z = self.pi.bv();
        if z.is_zero() {
            Polyvector::zero(self.chart(), 1)
        } else {
            z
        }
    }

    /// `ζ(x_i) + H_{x_i}` for each coordinate `x_i`.
    pub fn dmodule_generators(&self) -> Vec<DIdealGenerator> {
        let zeta = self.modular_field();
        (0..self.chart().dim())
            .map(|i| {
                let x = Poly::var(self.chart(), i);
                DIdealGenerator {
                    scalar_part: zeta.apply(&x).expect("ζ is a vector field"),
                    vector_part: self.hamiltonian(&x).expect("same chart"),
                    source: x,
                }
            })
            .collect()
    }

    /// Whether `f` Poisson-commutes with everything.
    pub fn is_casimir(&self, f: &Poly) -> Result<bool> {
        Ok(self.hamiltonian(f)?.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chart::Chart;
    use crate::multivec::parse_polyvector;
    use crate::poly::{parse_poly, rat};

    fn lambda4() -> Vec<Vec<Rational>> {
        [[0, 1, 1, -2], [-1, 0, 1, 1], [-1, -1, 0, 1], [2, -1, -1, 0]]
            .iter()
            .map(|r| r.iter().map(|&x| rat(x)).collect())
            .collect()
    }

    #[test]
    fn accepts_surfaces_and_so3() {
        let c = Chart::new(&["w", "z"]).unwrap();
        assert!(PoissonStructure::surface(parse_poly("w^5 - z^2*w + 7", &c).unwrap()).is_ok());
        let x = Chart::new(&["x", "y", "z"]).unwrap();
        let so3 = parse_polyvector("x dy^dz + y dz^dx + z dx^dy", &x).unwrap();
        assert!(PoissonStructure::new(so3).is_ok());
    }

    #[test]
    fn rejects_non_poisson_bivector() {
        let x = Chart::new(&["x", "y", "z"]).unwrap();
        let pi = parse_polyvector("y dx^dy + x dx^dz", &x).unwrap();
        match PoissonStructure::new(pi) {
            Err(Error::JacobiFailure { jacobiator }) => {
                // hand expansion: [π,π] = 2 Σ_i (π ∂^R/∂θ_i) ∧ ∂π/∂x_i = 2y ∂x∧∂y∧∂z,
                // i.e. twice the cyclic sum {x,{y,z}} + {y,{z,x}} + {z,{x,y}} = y
                assert_eq!(*jacobiator, parse_polyvector("2*y dx^dy^dz", &x).unwrap());
            }
            other => panic!("expected a Jacobi failure, got {other:?}"),
        }
    }

    #[test]
    fn hamiltonians_on_a_surface() {
        let c = Chart::new(&["w", "z"]).unwrap();
        let f = parse_poly("w*z + z^3", &c).unwrap();
        let p = PoissonStructure::surface(f.clone()).unwrap();
        let w = Poly::var(&c, 0);
        let z = Poly::var(&c, 1);
        assert_eq!(p.hamiltonian(&w).unwrap(), Polyvector::monomial(f.clone(), &[1]).unwrap());
        assert_eq!(p.hamiltonian(&z).unwrap(), Polyvector::monomial(-f.clone(), &[0]).unwrap());
        assert!(p.hamiltonian(&Poly::from_int(&c, 4)).unwrap().is_zero());
        assert_eq!(p.bracket(&w, &z).unwrap(), f);
    }

    #[test]
    fn lichnerowicz_examples() {
        let c = Chart::new(&["w", "z"]).unwrap();
        let p = PoissonStructure::surface(parse_poly("w*z", &c).unwrap()).unwrap();
        let dw = p.lichnerowicz(&Polyvector::function(Poly::var(&c, 0))).unwrap();
        assert_eq!(dw, parse_polyvector("-w*z dz", &c).unwrap());
        assert!(p.lichnerowicz(p.bivector()).unwrap().is_zero());

        let c3 = Chart::new(&["w", "z", "t"]).unwrap();
        let q = PoissonStructure::new(parse_polyvector("dw^dz", &c3).unwrap()).unwrap();
        assert!(q.lichnerowicz(&Polyvector::function(Poly::var(&c3, 2))).unwrap().is_zero());
    }

    #[test]
    fn pfaffian_examples() {
        let c = Chart::new(&["w", "z"]).unwrap();
        let f = parse_poly("w^2 - z", &c).unwrap();
        assert_eq!(PoissonStructure::surface(f.clone()).unwrap().pfaffian().unwrap(), f);

        let c4 = Chart::numbered(4).unwrap();
        // not a Poisson bivector ({x2,{x3,x4}} = -1), so exercised through the free function
        let b = parse_polyvector("dx1^dx2 + x1 dx3^dx4", &c4).unwrap();
        assert!(PoissonStructure::new(b.clone()).is_err());
        assert_eq!(pfaffian(&b).unwrap(), Poly::var(&c4, 0));
        let p = PoissonStructure::new(parse_polyvector("x1 dx1^dx2 + dx3^dx4", &c4).unwrap()).unwrap();
        assert_eq!(p.pfaffian().unwrap(), Poly::var(&c4, 0));
        assert!(PoissonStructure::standard_symplectic(&c4).unwrap().pfaffian().unwrap().is_one());

        let c3 = Chart::numbered(3).unwrap();
        assert!(matches!(PoissonStructure::zero(&c3).pfaffian(), Err(Error::OddDimension(3))));
    }

    #[test]
    fn modular_field_examples() {
        let c = Chart::new(&["w", "z"]).unwrap();
        let f = parse_poly("w^3 + w*z^2 - 2*z", &c).unwrap();
        let p = PoissonStructure::surface(f.clone()).unwrap();
        let expected = Polyvector::vector_field(&c, &[-f.d(1), f.d(0)]).unwrap();
        assert_eq!(p.modular_field(), expected);
        let c4 = Chart::numbered(4).unwrap();
        assert!(PoissonStructure::standard_symplectic(&c4).unwrap().modular_field().is_zero());
    }

    #[test]
    fn diagonal_example() {
        let c4 = Chart::numbered(4).unwrap();
        let p = PoissonStructure::diagonal_quadratic(&c4, &lambda4()).unwrap();
        // c_k = Σ_{i<k} λ_ik − Σ_{j>k} λ_kj, evaluated by hand: (0, −1, 1, 0)
        let x = |i| Poly::var(&c4, i);
        let zeta = Polyvector::vector_field(&c4, &[x(0).scale(&rat(0)), -x(1), x(2), x(3).scale(&rat(0))])
            .unwrap();
        assert_eq!(p.modular_field(), zeta);
        assert_eq!(p.pfaffian().unwrap(), parse_poly("-2*x1*x2*x3*x4", &c4).unwrap());

        let c2 = Chart::new(&["w", "z"]).unwrap();
        let q = PoissonStructure::diagonal_quadratic(&c2, &[vec![rat(0), rat(1)], vec![rat(-1), rat(0)]])
            .unwrap();
        assert_eq!(q.bivector(), &parse_polyvector("w*z dw^dz", &c2).unwrap());
        assert!(matches!(
            PoissonStructure::diagonal_quadratic(&c2, &[vec![rat(0), rat(1)], vec![rat(1), rat(0)]]),
            Err(Error::NotSkew(_))
        ));
    }

    #[test]
    fn jacobian_builder() {
        let c = Chart::new(&["x", "y", "z"]).unwrap();
        let p = PoissonStructure::jacobian3(&parse_poly("x*y*z", &c).unwrap()).unwrap();
        assert_eq!(p.bivector(), &parse_polyvector("x*y dx^dy + y*z dy^dz + z*x dz^dx", &c).unwrap());
        let q = PoissonStructure::jacobian3(&parse_poly("1/3*(x^3 + y^3 + z^3)", &c).unwrap()).unwrap();
        assert_eq!(q.bracket_of_coordinates(0, 1), parse_poly("z^2", &c).unwrap());
        assert_eq!(q.bracket_of_coordinates(1, 2), parse_poly("x^2", &c).unwrap());
        assert_eq!(q.bracket_of_coordinates(2, 0), parse_poly("y^2", &c).unwrap());
        let f = parse_poly("1/3*x^3 + 1/3*y^3 + 1/3*z^3 + x*y*z", &c).unwrap();
        let r = PoissonStructure::jacobian3(&f).unwrap();
        assert!(r.lichnerowicz(&Polyvector::function(f.clone())).unwrap().is_zero());
        assert!(r.is_casimir(&f).unwrap());
    }

    #[test]
    fn dmodule_generator_examples() {
        let c = Chart::new(&["w", "z"]).unwrap();
        let f = parse_poly("w^2*z - z", &c).unwrap();
        let gens = PoissonStructure::surface(f.clone()).unwrap().dmodule_generators();
        // ζ = f_w ∂z − f_z ∂w, so ζ(w) = −f_z and ζ(z) = f_w
        assert_eq!(gens[0].scalar_part, -f.d(1));
        assert_eq!(gens[1].scalar_part, f.d(0));
        assert_eq!(gens[0].vector_part, Polyvector::monomial(f.clone(), &[1]).unwrap());

        let s = PoissonStructure::standard_symplectic(&c).unwrap().dmodule_generators();
        assert!(s[0].scalar_part.is_zero());
        assert_eq!(s[0].vector_part, parse_polyvector("dz", &c).unwrap());

        for g in PoissonStructure::zero(&c).dmodule_generators() {
            assert!(g.scalar_part.is_zero() && g.vector_part.is_zero());
        }
    }
}
