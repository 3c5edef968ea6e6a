use super::Density;
use crate::error::{domain, Result};
use crate::quad::integrate_stieltjes;
use serde::{Deserialize, Serialize};

fn default_delta() -> f64 {
    1.0
}

/// A symbol measure: optional density plus atoms `(τ_n, a_n)`.
///
/// The symbol is `m(s) = ∫_{[0,∞)} e^{−st} dΨ(t)`. Atoms may sit at `τ = 0`
/// (e.g. the identity symbol), which makes `Ψ(0⁺) ≠ 0`; the `(H2)` check
/// then fails rather than the construction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SymbolSpec {
    #[serde(default)]
    pub density: Option<Density>,
    #[serde(default)]
    pub atoms: Vec<(f64, f64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma_hint: Option<f64>,
    #[serde(default = "default_delta")]
    pub delta: f64,
}

impl SymbolSpec {
    /// The zero measure (`m ≡ 0`).
    pub fn zero() -> Self {
        Self { density: None, atoms: Vec::new(), sigma_hint: None, delta: 1.0 }
    }

    pub fn with_density(d: Density) -> Self {
        Self { density: Some(d), ..Self::zero() }
    }

    pub fn atoms(atoms: Vec<(f64, f64)>) -> Self {
        Self { atoms, ..Self::zero() }
    }

    /// `m(s) = (s+c)^{−σ}`.
    pub fn frac_integral(sigma: f64, c: f64) -> Self {
        Self { sigma_hint: Some(sigma), ..Self::with_density(Density::FracIntegral { sigma, c }) }
    }

    /// `m(s) = ((s+shift)²+1)^{−α/2}`, default shift `(α+1)/2`.
    pub fn bessel_resolvent(alpha: f64) -> Self {
        Self { sigma_hint: Some(alpha), ..Self::with_density(Density::BesselResolvent { alpha, shift: None }) }
    }

    /// Heat semigroup `m(s) = e^{−τ(s+s₀)}` as the single atom `e^{−s₀τ} δ_τ`.
    pub fn heat(tau: f64, s0: f64) -> Self {
        Self::atoms(vec![(tau, (-s0 * tau).exp())])
    }

    /// Literal Stieltjes reading of `Ψ(t) = e^{−s₀t} H(t−τ)`: the jump at `τ`
    /// plus the continuous part `−s₀ e^{−s₀t}` on `t > τ`.
    pub fn heat_literal(tau: f64, s0: f64) -> Self {
        Self {
            density: Some(Density::ShiftedExp { coefficient: -s0, rate: s0, start: tau }),
            atoms: vec![(tau, (-s0 * tau).exp())],
            sigma_hint: None,
            delta: 1.0,
        }
    }

    /// Identity multiplier `m ≡ 1` (unit atom at the origin).
    pub fn identity() -> Self {
        Self::atoms(vec![(0.0, 1.0)])
    }

    /// Dirichlet-series symbol `m(s) = Σ_n a_n e^{−τ_n s}`.
    pub fn dirichlet(terms: Vec<(f64, f64)>) -> Self {
        Self::atoms(terms)
    }

    /// The measure multiplied by `c`.
    pub fn scaled(&self, c: f64) -> Self {
        Self {
            density: self.density.clone().map(|d| Density::Rescaled {
                inner: Box::new(d),
                amplitude: c,
                time_scale: 1.0,
                damping: 0.0,
            }),
            atoms: self.atoms.iter().map(|&(t, a)| (t, c * a)).collect(),
            sigma_hint: self.sigma_hint,
            delta: self.delta,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(d) = &self.density {
            d.validate()?;
        }
        for (i, &(t, a)) in self.atoms.iter().enumerate() {
            if !(t >= 0.0) || !t.is_finite() || !a.is_finite() {
                return Err(domain(format!("atom {i} must have finite tau >= 0 and finite weight")));
            }
            if i > 0 && !(t > self.atoms[i - 1].0) {
                return Err(domain("atom locations must be strictly increasing"));
            }
        }
        if !(self.delta > 0.0) || !self.delta.is_finite() {
            return Err(domain(format!("delta must be > 0, got {}", self.delta)));
        }
        if let Some(s) = self.sigma_hint {
            if !(s > 0.0) {
                return Err(domain(format!("sigma_hint must be > 0, got {s}")));
            }
        }
        Ok(())
    }

    /// Closed-form `m(s)` when the density has one; used as a test oracle.
    pub fn closed_form(&self, s: f64) -> Option<f64> {
        let d = match &self.density {
            Some(d) => d.laplace_closed_form(s)?,
            None => 0.0,
        };
        Some(d + self.atoms.iter().map(|&(t, a)| a * (-s * t).exp()).sum::<f64>())
    }
}

/// `m(s) = ∫ e^{−st} dΨ(t)` by Stieltjes quadrature.
pub fn symbol_value(sym: &SymbolSpec, s: f64) -> Result<f64> {
    if !(s >= 0.0) {
        return Err(domain(format!("symbol argument must be >= 0, got {s}")));
    }
    Ok(integrate_stieltjes(sym, &|t| (-s * t).exp())?.value)
}

/// `m(0), …, m(n−1)`.
pub fn symbol_values(sym: &SymbolSpec, n: usize) -> Result<Vec<f64>> {
    (0..n).map(|k| symbol_value(sym, k as f64)).collect()
}
