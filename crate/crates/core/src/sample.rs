//! Seeded random generators for polynomials, polyvectors and Poisson structures.
//!
//! Used by the randomized identity suites; a fixed seed reproduces a run exactly.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chart::ChartRef;
use crate::multivec::Polyvector;
use crate::poly::{ratio, Exponents, Poly};

pub const DEFAULT_SEED: u64 = 0x5eed_2018;

pub struct Sampler {
    rng: ChaCha8Rng,
    /// Maximum total degree of sampled coefficients.
    pub max_degree: u32,
    /// Maximum number of terms per sampled polynomial.
    pub max_terms: usize,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed), max_degree: 3, max_terms: 4 }
    }

    pub fn with_degree(mut self, max_degree: u32) -> Self {
        self.max_degree = max_degree;
        self
    }

    pub fn with_terms(mut self, max_terms: usize) -> Self {
        self.max_terms = max_terms;
        self
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// Small nonzero rational such as `-3/2`.
    pub fn coefficient(&mut self) -> num_rational::BigRational {
        let mut n = self.rng.gen_range(-5i64..=5);
        if n == 0 {
            n = 1;
        }
        let d = *[1i64, 1, 1, 2, 3].choose(&mut self.rng).expect("nonempty");
        ratio(n, d)
    }

    fn exponents(&mut self, n: usize, degree: u32) -> Exponents {
        let mut e = vec![0u32; n];
        for _ in 0..degree {
            e[self.rng.gen_range(0..n)] += 1;
        }
        e
    }

    /// Random polynomial of total degree at most `max_degree` (possibly zero).
    pub fn poly(&mut self, chart: &ChartRef) -> Poly {
        let count = self.rng.gen_range(0..=self.max_terms);
        let n = chart.dim();
        let terms: Vec<_> = (0..count)
            .map(|_| {
                let d = self.rng.gen_range(0..=self.max_degree);
                (self.exponents(n, d), self.coefficient())
            })
            .collect();
        Poly::from_terms(chart, terms)
    }

    pub fn nonzero_poly(&mut self, chart: &ChartRef) -> Poly {
        loop {
            let p = self.poly(chart);
            if !p.is_zero() {
                return p;
            }
        }
    }

    pub fn nonconstant_poly(&mut self, chart: &ChartRef) -> Poly {
        loop {
            let p = self.poly(chart);
            if !p.is_constant() {
                return p;
            }
        }
    }

    /// Random homogeneous polynomial of exact total degree `d` with unit weights.
    pub fn homogeneous_poly(&mut self, chart: &ChartRef, d: u32) -> Poly {
        let count = self.rng.gen_range(1..=self.max_terms.max(1));
        let n = chart.dim();
        let terms: Vec<_> = (0..count).map(|_| (self.exponents(n, d), self.coefficient())).collect();
        Poly::from_terms(chart, terms)
    }

    /// Random degree-`k` polyvector with random coefficients on a few frames.
    pub fn polyvector(&mut self, chart: &ChartRef, k: usize) -> Polyvector {
        let n = chart.dim();
        let k = k.min(n);
        let frames = crate::graded::subsets(n, k);
        let pick = self.rng.gen_range(1..=frames.len().min(3));
        let chosen: Vec<Vec<usize>> = frames.choose_multiple(&mut self.rng, pick).cloned().collect();
        let terms: Vec<_> = chosen.into_iter().map(|f| (f, self.poly(chart))).collect();
        Polyvector::from_terms(chart, k, terms).expect("well-formed sample")
    }

    /// Polyvector of a uniformly random degree `0..=n`.
    pub fn any_polyvector(&mut self, chart: &ChartRef) -> Polyvector {
        let k = self.rng.gen_range(0..=chart.dim());
        self.polyvector(chart, k)
    }

    /// Random skew-symmetric integer matrix with entries in `-3..=3`.
    pub fn skew_matrix(&mut self, n: usize) -> Vec<Vec<num_rational::BigRational>> {
        let mut m = vec![vec![ratio(0, 1); n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let v = self.rng.gen_range(-3i64..=3);
                m[i][j] = ratio(v, 1);
                m[j][i] = ratio(-v, 1);
            }
        }
        m
    }
}
