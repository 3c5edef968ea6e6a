use super::{symbol_value, SymbolSpec};
use crate::error::{domain, Result};
use crate::quad::{integrate_density, Estimate};
use serde::{Deserialize, Serialize};

/// `Ψ(t) = ∫_0^t φ + Σ_{τ_n ≤ t} a_n`.
pub fn psi_value(sym: &SymbolSpec, t: f64) -> Result<f64> {
    if !(t >= 0.0) {
        return Err(domain(format!("psi_value needs t >= 0, got {t}")));
    }
    let mut v = match &sym.density {
        Some(d) if t > 0.0 => integrate_density(d, &|_| 1.0, t, false, &[])?.value,
        _ => 0.0,
    };
    // Ψ(0) = 0 by convention: an atom at the origin enters only for t > 0.
    for &(tau, a) in &sym.atoms {
        if tau <= t && t > 0.0 {
            v += a;
        }
    }
    Ok(v)
}

/// Total variation `∫|φ| + Σ|a_n|`; a finite value certifies `(H1)`.
pub fn verify_h1(sym: &SymbolSpec) -> Result<Estimate> {
    sym.validate()?;
    let mut est = match &sym.density {
        Some(d) => {
            let e = integrate_density(d, &|_| 1.0, f64::INFINITY, true, &[])?;
            Estimate { value: e.value, ..e }
        }
        None => Estimate::zero(),
    };
    for &(_, a) in &sym.atoms {
        est.value += a.abs();
        est.abs_value += a.abs();
    }
    Ok(est)
}

/// Log–log fit `|Ψ(t)| ≈ C t^σ` on a geometric grid in `(0, δ]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct H2Fit {
    /// Fitted exponent; `+∞` when `Ψ ≡ 0` on the grid.
    pub sigma_fit: f64,
    pub c_fit: f64,
    /// `(t_j, Ψ(t_j))` samples used for the fit.
    pub samples: Vec<(f64, f64)>,
}

impl H2Fit {
    /// `(H2)` holds for `σ` if `sigma_fit ≥ σ − 0.05` and
    /// `|Ψ(t_j)| ≤ 1.1·C_fit·t_j^{sigma_fit}` on the grid.
    pub fn holds_for(&self, sigma: f64) -> bool {
        if self.sigma_fit == f64::INFINITY {
            return true;
        }
        self.sigma_fit >= sigma - 0.05
            && self
                .samples
                .iter()
                .all(|&(t, p)| p.abs() <= 1.1 * self.c_fit * t.powf(self.sigma_fit))
    }
}

const H2_POINTS: usize = 48;
const H2_DECADES: f64 = 6.0;

/// Fit `(H2)` on `[δ·10^{−6}, δ]`.
pub fn verify_h2(sym: &SymbolSpec, delta: f64) -> Result<H2Fit> {
    if !(delta > 0.0) {
        return Err(domain(format!("delta must be > 0, got {delta}")));
    }
    sym.validate()?;
    let ts: Vec<f64> = (0..H2_POINTS)
        .map(|j| delta * 10f64.powf(-H2_DECADES * (1.0 - j as f64 / (H2_POINTS - 1) as f64)))
        .collect();
    let samples: Vec<(f64, f64)> = ts.iter().map(|&t| Ok((t, psi_value(sym, t)?))).collect::<Result<_>>()?;
    let pts: Vec<(f64, f64)> = samples
        .iter()
        .filter(|(_, p)| p.abs() > 0.0)
        .map(|&(t, p)| (t.ln(), p.abs().ln()))
        .collect();
    if pts.len() < 2 {
        if pts.is_empty() {
            return Ok(H2Fit { sigma_fit: f64::INFINITY, c_fit: 0.0, samples });
        }
        // A single nonzero sample: treat as a jump inside the window.
        return Ok(H2Fit { sigma_fit: 0.0, c_fit: pts[0].1.exp(), samples });
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = sxy / sxx;
    let c_fit = (my - slope * mx).exp();
    Ok(H2Fit { sigma_fit: slope, c_fit, samples })
}

/// `max_{k ≤ k_max} |m(k)|`.
pub fn check_boundedness(sym: &SymbolSpec, k_max: usize) -> Result<f64> {
    let mut sup: f64 = 0.0;
    for k in 0..=k_max {
        sup = sup.max(symbol_value(sym, k as f64)?.abs());
    }
    Ok(sup)
}
