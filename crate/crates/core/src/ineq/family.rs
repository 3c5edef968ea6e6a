use crate::error::{domain, Result};
use crate::expansion::System;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::f64::consts::SQRT_2;

/// Highest polynomial degree allowed in a family member.
pub const MAX_DEGREE: usize = 10;
/// Seed of [`TestFamily::standard`].
pub const DEFAULT_SEED: u64 = 0x5eed;

/// `P(x) e^{−x/2}` with `P` given by its monomial coefficients.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyMember {
    pub name: String,
    pub poly: Vec<f64>,
}

impl FamilyMember {
    pub fn new(name: impl Into<String>, poly: Vec<f64>) -> Result<Self> {
        if poly.is_empty() || poly.len() > MAX_DEGREE + 1 {
            return Err(domain(format!("member polynomials need 1..={} coefficients", MAX_DEGREE + 1)));
        }
        if poly.iter().any(|c| !c.is_finite()) {
            return Err(domain("member coefficients must be finite"));
        }
        Ok(Self { name: name.into(), poly })
    }

    pub fn degree(&self) -> usize {
        self.poly.len() - 1
    }

    /// `P(x)`, Horner.
    pub fn poly_at(&self, x: f64) -> f64 {
        self.poly.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    /// `g(x) = P(x) e^{−x/2}`, a finite combination of `l_k^α`.
    pub fn eval(&self, x: f64) -> f64 {
        self.poly_at(x) * (-x / 2.0).exp()
    }

    /// The member carried into `system` so that its coefficients stay finite:
    /// `x^{α/2} g(x)` for `𝓛`, `√2 x^{α+½} g(x²)` for `φ`, `√2 g(x²)` for `ψ`,
    /// and `P(x) e^{−x²/2}` for Hermite.
    pub fn eval_in(&self, system: System, alpha: f64, x: f64) -> f64 {
        match system {
            System::LaguerreL => self.eval(x),
            System::LaguerreScriptL => x.powf(alpha / 2.0) * self.eval(x),
            System::LaguerrePhi => SQRT_2 * x.powf(alpha + 0.5) * self.eval(x * x),
            System::LaguerrePsi => SQRT_2 * self.eval(x * x),
            System::Hermite => self.poly_at(x) * (-x * x / 2.0).exp(),
        }
    }

    /// Number of basis coefficients that can be nonzero.
    pub fn span(&self) -> usize {
        self.poly.len()
    }
}

/// Named test functions, kept sorted by name.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TestFamily {
    pub members: Vec<FamilyMember>,
}

impl TestFamily {
    pub fn new(mut members: Vec<FamilyMember>) -> Result<Self> {
        members.sort_by(|a, b| a.name.cmp(&b.name));
        if members.windows(2).any(|w| w[0].name == w[1].name) {
            return Err(domain("member names must be unique"));
        }
        Ok(Self { members })
    }

    /// `x^j e^{−x/2}` for `j = 0..=10` plus five members with random
    /// degree-10 polynomials drawn from `seed`.
    ///
    /// Random coefficients are `u_j / j!` with `u_j` uniform in `[−1, 1]`,
    /// which keeps the monomials on comparable scales.
    pub fn seeded(seed: u64) -> Self {
        let mut members: Vec<FamilyMember> = (0..=MAX_DEGREE)
            .map(|j| {
                let mut poly = vec![0.0; j + 1];
                poly[j] = 1.0;
                FamilyMember { name: format!("monomial_{j:02}"), poly }
            })
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for r in 0..5 {
            let mut fact = 1.0;
            let poly = (0..=MAX_DEGREE)
                .map(|j| {
                    if j > 0 {
                        fact *= j as f64;
                    }
                    rng.random_range(-1.0..=1.0) / fact
                })
                .collect();
            members.push(FamilyMember { name: format!("random_{r}"), poly });
        }
        Self::new(members).expect("generated names are unique")
    }

    pub fn standard() -> Self {
        Self::seeded(DEFAULT_SEED)
    }

    /// Members of degree at most `d`.
    pub fn up_to_degree(&self, d: usize) -> Self {
        Self { members: self.members.iter().filter(|m| m.degree() <= d).cloned().collect() }
    }

    /// Every member multiplied by `lambda`.
    pub fn scaled(&self, lambda: f64) -> Self {
        let members = self
            .members
            .iter()
            .map(|m| FamilyMember { name: m.name.clone(), poly: m.poly.iter().map(|c| c * lambda).collect() })
            .collect();
        Self { members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

impl Default for TestFamily {
    fn default() -> Self {
        Self::standard()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_family_shape() {
        let f = TestFamily::standard();
        assert_eq!(f.len(), 16);
        assert!(f.members.windows(2).all(|w| w[0].name < w[1].name));
        assert!(f.members.iter().all(|m| m.degree() <= MAX_DEGREE));
        assert_eq!(f, TestFamily::seeded(DEFAULT_SEED));
        assert_ne!(f, TestFamily::seeded(DEFAULT_SEED + 1));
        assert_eq!(f.up_to_degree(6).len(), 7);
    }

    #[test]
    fn member_evaluation() {
        let m = FamilyMember::new("m", vec![1.0, 0.0, 2.0]).unwrap();
        assert_eq!(m.poly_at(3.0), 19.0);
        assert_eq!(m.eval(0.0), 1.0);
        assert!((m.eval_in(System::LaguerrePsi, 0.0, 2.0) - SQRT_2 * m.eval(4.0)).abs() < 1e-15);
        assert!(FamilyMember::new("x", vec![0.0; 12]).is_err());
    }
}
