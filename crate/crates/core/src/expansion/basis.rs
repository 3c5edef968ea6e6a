use crate::error::{domain, Result};
use crate::specfun::{check_alpha, hermite_fns, laguerre_fns};
use serde::{Deserialize, Serialize};

/// The orthonormal systems: `l_k^α` in `L²(x^α dx)`, `𝓛_k^α = x^{α/2} l_k^α`
/// and `φ_k^α = √2 x^{α+1/2} l_k^α(x²)` in `L²(dx)`, `ψ_k^α = √2 l_k^α(x²)` in
/// `L²(x^{2α+1} dx)`, and Hermite functions `h_k` in `L²(ℝ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum System {
    LaguerreL,
    LaguerreScriptL,
    LaguerrePhi,
    LaguerrePsi,
    Hermite,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExpansionBasis {
    pub system: System,
    #[serde(default)]
    pub alpha: f64,
}

impl ExpansionBasis {
    pub fn new(system: System, alpha: f64) -> Result<Self> {
        let b = Self { system, alpha };
        b.validate()?;
        Ok(b)
    }

    pub fn laguerre(alpha: f64) -> Result<Self> {
        Self::new(System::LaguerreL, alpha)
    }

    pub fn hermite() -> Self {
        Self { system: System::Hermite, alpha: 0.0 }
    }

    pub fn validate(&self) -> Result<()> {
        if self.system != System::Hermite {
            check_alpha(self.alpha)?;
        }
        Ok(())
    }

    /// Exponent `γ` of the measure `x^γ dx` the system is orthonormal in.
    pub fn measure_exponent(&self) -> f64 {
        match self.system {
            System::LaguerreL => self.alpha,
            System::LaguerrePsi => 2.0 * self.alpha + 1.0,
            _ => 0.0,
        }
    }

    /// The first `n` basis functions at `x` (any real `x` for Hermite,
    /// `x ≥ 0` otherwise).
    pub fn eval_all(&self, n: usize, x: f64) -> Result<Vec<f64>> {
        let a = self.alpha;
        match self.system {
            System::Hermite => Ok(hermite_fns(n, x)),
            _ if !(x >= 0.0) => Err(domain(format!("Laguerre-type systems live on x >= 0, got {x}"))),
            System::LaguerreL => laguerre_fns(n, a, x),
            System::LaguerreScriptL => {
                let s = x.powf(a / 2.0);
                Ok(laguerre_fns(n, a, x)?.into_iter().map(|v| s * v).collect())
            }
            System::LaguerrePhi => {
                let s = std::f64::consts::SQRT_2 * x.powf(a + 0.5);
                Ok(laguerre_fns(n, a, x * x)?.into_iter().map(|v| s * v).collect())
            }
            System::LaguerrePsi => Ok(laguerre_fns(n, a, x * x)?
                .into_iter()
                .map(|v| std::f64::consts::SQRT_2 * v)
                .collect()),
        }
    }

    /// The `k`-th basis function at `x`.
    pub fn eval(&self, k: usize, x: f64) -> Result<f64> {
        Ok(self.eval_all(k + 1, x)?[k])
    }
}
