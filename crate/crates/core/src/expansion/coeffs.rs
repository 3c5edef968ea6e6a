use super::{ExpansionBasis, GridFunction, System};
use crate::error::{domain, Error, Result};
use crate::quad::gauss_generalized_laguerre;
use crate::specfun::laguerre_fns;
use crate::sum::{dot, CompensatedSum};
use crate::symbols::{symbol_values, SymbolSpec};
use serde::{Deserialize, Serialize};
use std::f64::consts::SQRT_2;

/// Truncated expansion coefficients `c_0, …, c_N` in a given basis.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoefficientVector {
    pub basis: ExpansionBasis,
    pub coeffs: Vec<f64>,
}

impl CoefficientVector {
    pub fn new(basis: ExpansionBasis, coeffs: Vec<f64>) -> Self {
        Self { basis, coeffs }
    }

    /// Unit vector `e_k` of length `n`.
    pub fn unit(basis: ExpansionBasis, k: usize, n: usize) -> Self {
        let mut c = vec![0.0; n];
        c[k] = 1.0;
        Self { basis, coeffs: c }
    }

    pub fn norm2(&self) -> f64 {
        dot(&self.coeffs, &self.coeffs).sqrt()
    }
}

/// `∫_0^∞ g(x) l_k^α(x) x^α dx` for `k < n` with a `q`-point Gauss–Laguerre rule.
fn laguerre_coeffs(g: &dyn Fn(f64) -> f64, alpha: f64, n: usize, q: usize) -> Result<Vec<f64>> {
    let rule = gauss_generalized_laguerre(q, alpha)?;
    let mut acc = vec![CompensatedSum::new(); n];
    for (&x, &w) in rule.nodes.iter().zip(&rule.scaled_weights) {
        let gx = g(x);
        if gx == 0.0 {
            continue;
        }
        let wg = w * gx;
        for (a, l) in acc.iter_mut().zip(laguerre_fns(n, alpha, x)?) {
            a.add(wg * l);
        }
    }
    Ok(acc.iter().map(|a| a.value()).collect())
}

/// Expansion coefficients of `f` in `basis`, `k < n`, using Gauss rules of
/// order `quad_order` matched to the basis measure.
///
/// Exact for `f` in the span of the first `quad_order` basis functions.
/// Hermite analysis splits `f` into even and odd parts and reduces each to a
/// Laguerre expansion in `u = x²` with `α = ∓1/2`.
pub fn analyze_fn(f: &dyn Fn(f64) -> f64, basis: ExpansionBasis, n: usize, quad_order: usize) -> Result<CoefficientVector> {
    basis.validate()?;
    if quad_order < n {
        return Err(Error::QuadratureOrder { have: quad_order, degree: n.saturating_sub(1), need: n });
    }
    let a = basis.alpha;
    let coeffs = match basis.system {
        System::LaguerreL => laguerre_coeffs(f, a, n, quad_order)?,
        System::LaguerreScriptL => laguerre_coeffs(&|y| f(y) * y.powf(-a / 2.0), a, n, quad_order)?,
        System::LaguerrePhi => {
            laguerre_coeffs(&|u| f(u.sqrt()) * u.powf(-a / 2.0 - 0.25) / SQRT_2, a, n, quad_order)?
        }
        System::LaguerrePsi => laguerre_coeffs(&|u| f(u.sqrt()) / SQRT_2, a, n, quad_order)?,
        System::Hermite => {
            let ne = n.div_ceil(2);
            let no = n / 2;
            let even = laguerre_coeffs(&|u| 0.5 * (f(u.sqrt()) + f(-u.sqrt())), -0.5, ne, quad_order)?;
            let odd = laguerre_coeffs(
                &|u| {
                    let y = u.sqrt();
                    0.5 * (f(y) - f(-y)) / y
                },
                0.5,
                no,
                quad_order,
            )?;
            (0..n).map(|k| if k % 2 == 0 { even[k / 2] } else { odd[k / 2] }).collect()
        }
    };
    Ok(CoefficientVector { basis, coeffs })
}

/// Analysis of sampled data; the samples are linearly interpolated (zero
/// outside the grid), so accuracy is limited by the grid resolution.
pub fn analyze(f: &GridFunction, basis: ExpansionBasis, n: usize, quad_order: usize) -> Result<CoefficientVector> {
    if basis.system == System::Hermite {
        return Err(Error::Invalid("Hermite analysis needs a function on the whole line".into()));
    }
    analyze_fn(&|x| f.interpolate_or_zero(x), basis, n, quad_order)
}

/// `Σ_k c_k b_k(x)`.
pub fn synthesize(cv: &CoefficientVector, x: f64) -> Result<f64> {
    let vals = cv.basis.eval_all(cv.coeffs.len(), x)?;
    Ok(dot(&cv.coeffs, &vals))
}

/// `c_k ↦ m_k ρ^{j(k)} c_k` with `j(k) = k` for Laguerre-type systems and
/// `j(k) = ⌊k/2⌋` for Hermite, so that each Hermite parity class is damped
/// like its Laguerre counterpart under the even/odd reduction.
pub fn apply_multiplier_values(cv: &CoefficientVector, m: &[f64], rho: f64) -> Result<CoefficientVector> {
    if !(rho > 0.0 && rho <= 1.0) {
        return Err(domain(format!("rho must lie in (0, 1], got {rho}")));
    }
    if m.len() < cv.coeffs.len() {
        return Err(domain("fewer symbol values than coefficients"));
    }
    let herm = cv.basis.system == System::Hermite;
    let coeffs = cv
        .coeffs
        .iter()
        .enumerate()
        .map(|(k, &c)| {
            let j = if herm { k / 2 } else { k };
            c * m[k] * rho.powi(j as i32)
        })
        .collect();
    Ok(CoefficientVector { basis: cv.basis, coeffs })
}

/// Regularized multiplier in coefficient space with `m_k = m(k)`.
pub fn apply_multiplier(cv: &CoefficientVector, sym: &SymbolSpec, rho: f64) -> Result<CoefficientVector> {
    let m = symbol_values(sym, cv.coeffs.len())?;
    apply_multiplier_values(cv, &m, rho)
}
