use crate::error::{domain, Error, Result};
use crate::specfun::{check_alpha, laguerre_log_normalized, ln_gamma};
use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RuleKind {
    GeneralizedLaguerre,
    Legendre,
}

/// A Gauss rule `∫ f w ≈ Σ weights[i] f(nodes[i])`.
///
/// For Laguerre rules of high order the smallest weights underflow; the
/// logarithms are kept in `log_weights` and `scaled_weights[i] =
/// weights[i]·e^{nodes[i]}` (all positive) for integrating `f·e^{−x}`-free
/// integrands.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadratureRule {
    pub kind: RuleKind,
    pub order: usize,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub log_weights: Vec<f64>,
    pub scaled_weights: Vec<f64>,
    pub alpha: Option<f64>,
}

impl QuadratureRule {
    /// `Σ w_i f(x_i)`.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        crate::sum::sum(self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)))
    }

    /// `Σ w_i e^{x_i} g(x_i)`; for Laguerre rules this approximates
    /// `∫ g(x) x^α dx`.
    pub fn integrate_scaled<F: Fn(f64) -> f64>(&self, g: F) -> f64 {
        crate::sum::sum(self.nodes.iter().zip(&self.scaled_weights).map(|(&x, &w)| w * g(x)))
    }
}

fn eig_tridiagonal(diag: &[f64], off: &[f64]) -> Result<Vec<f64>> {
    let n = diag.len();
    let mut m = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = diag[i];
        if i + 1 < n {
            m[(i, i + 1)] = off[i];
            m[(i + 1, i)] = off[i];
        }
    }
    let eig = nalgebra::SymmetricEigen::try_new(m, 1e-15, 10_000).ok_or(Error::EigenSolve(n))?;
    let mut v: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    v.sort_by(f64::total_cmp);
    Ok(v)
}

/// Gauss rule for the weight `x^α e^{−x}` on `(0, ∞)`, `1 ≤ n ≤ 512`.
///
/// Nodes are the eigenvalues of the Jacobi matrix, polished by Newton steps
/// on `L_n^α`; weights come from the Christoffel function
/// `1/w_i = Σ_{k<n} p_k(x_i)²` of the orthonormal polynomials.
pub fn gauss_generalized_laguerre(n: usize, alpha: f64) -> Result<QuadratureRule> {
    check_alpha(alpha)?;
    if !(1..=512).contains(&n) {
        return Err(domain(format!("rule order must be in 1..=512, got {n}")));
    }
    let diag: Vec<f64> = (0..n).map(|k| 2.0 * k as f64 + alpha + 1.0).collect();
    let off: Vec<f64> = (1..n).map(|k| (k as f64 * (k as f64 + alpha)).sqrt()).collect();
    let mut nodes = eig_tridiagonal(&diag, &off)?;
    let nf = n as f64;
    let c = (nf * (nf + alpha)).sqrt();
    for x in nodes.iter_mut() {
        for _ in 0..4 {
            let p = laguerre_log_normalized(n + 1, alpha, *x);
            let (sn, ln) = p[n];
            let (sm, lm) = p[n - 1];
            if sn == 0.0 {
                break;
            }
            let r = sn * sm * (lm - ln).exp();
            let dx = *x / (nf - c * r);
            if !dx.is_finite() {
                break;
            }
            *x -= dx;
            if dx.abs() <= 1e-16 * x.abs() {
                break;
            }
        }
    }
    nodes.sort_by(f64::total_cmp);
    let mut log_weights = Vec::with_capacity(n);
    for &x in &nodes {
        let p = laguerre_log_normalized(n, alpha, x);
        let mx = p.iter().map(|t| t.1).fold(f64::NEG_INFINITY, f64::max);
        let s: f64 = p.iter().map(|t| (2.0 * (t.1 - mx)).exp()).sum();
        log_weights.push(-(2.0 * mx + s.ln()));
    }
    // Normalize the zeroth moment exactly to Γ(α+1).
    let lse = {
        let m = log_weights.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        m + log_weights.iter().map(|l| (l - m).exp()).sum::<f64>().ln()
    };
    let shift = ln_gamma(alpha + 1.0) - lse;
    for l in log_weights.iter_mut() {
        *l += shift;
    }
    let weights = log_weights.iter().map(|l| l.exp()).collect();
    let scaled_weights = log_weights.iter().zip(&nodes).map(|(l, x)| (l + x).exp()).collect();
    Ok(QuadratureRule {
        kind: RuleKind::GeneralizedLaguerre,
        order: n,
        nodes,
        weights,
        log_weights,
        scaled_weights,
        alpha: Some(alpha),
    })
}

fn legendre_pair(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 1..n {
        let kf = k as f64;
        let p2 = ((2.0 * kf + 1.0) * x * p1 - kf * p0) / (kf + 1.0);
        p0 = p1;
        p1 = p2;
    }
    (p1, p0)
}

/// Gauss–Legendre rule on `[−1, 1]`, `1 ≤ n ≤ 512`.
pub fn gauss_legendre(n: usize) -> Result<QuadratureRule> {
    if !(1..=512).contains(&n) {
        return Err(domain(format!("rule order must be in 1..=512, got {n}")));
    }
    let diag = vec![0.0; n];
    let off: Vec<f64> = (1..n).map(|k| k as f64 / (4.0 * (k * k) as f64 - 1.0).sqrt()).collect();
    let mut nodes = eig_tridiagonal(&diag, &off)?;
    let nf = n as f64;
    let mut weights = Vec::with_capacity(n);
    for x in nodes.iter_mut() {
        for _ in 0..4 {
            let (pn, pm) = legendre_pair(n, *x);
            let dp = nf * (*x * pn - pm) / (*x * *x - 1.0);
            let dx = pn / dp;
            *x -= dx;
            if dx.abs() < 1e-17 {
                break;
            }
        }
        let (pn, pm) = legendre_pair(n, *x);
        let dp = nf * (*x * pn - pm) / (*x * *x - 1.0);
        weights.push(2.0 / ((1.0 - *x * *x) * dp * dp));
    }
    // Enforce exact antisymmetry of the nodes.
    for i in 0..n / 2 {
        let a = 0.5 * (nodes[n - 1 - i] - nodes[i]);
        nodes[i] = -a;
        nodes[n - 1 - i] = a;
        let w = 0.5 * (weights[i] + weights[n - 1 - i]);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    let log_weights = weights.iter().map(|w: &f64| w.ln()).collect();
    Ok(QuadratureRule {
        kind: RuleKind::Legendre,
        order: n,
        nodes,
        scaled_weights: weights.clone(),
        weights,
        log_weights,
        alpha: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::gamma;
    use approx::assert_relative_eq;

    #[test]
    fn laguerre_moments() {
        for &a in &[-0.5, 0.0, 0.5, 2.3] {
            let r = gauss_generalized_laguerre(10, a).unwrap();
            for j in 0..20 {
                let got = r.integrate(|x| x.powi(j));
                assert_relative_eq!(got, gamma(a + j as f64 + 1.0), max_relative = 1e-10);
            }
        }
    }

    #[test]
    fn laguerre_invariants_high_order() {
        let r = gauss_generalized_laguerre(200, 0.5).unwrap();
        assert!(r.nodes.windows(2).all(|w| w[0] < w[1]));
        assert!(r.scaled_weights.iter().all(|&w| w > 0.0 && w.is_finite()));
        assert_relative_eq!(r.integrate(|_| 1.0), gamma(1.5), max_relative = 1e-12);
        assert_relative_eq!(r.integrate(|x| x), gamma(2.5), max_relative = 1e-12);
    }

    #[test]
    fn legendre_moments() {
        let r = gauss_legendre(12).unwrap();
        assert_relative_eq!(r.integrate(|_| 1.0), 2.0, max_relative = 1e-14);
        assert_relative_eq!(r.integrate(|t| t * t), 2.0 / 3.0, max_relative = 1e-14);
        for j in 0..24 {
            let want = if j % 2 == 1 { 0.0 } else { 2.0 / (j as f64 + 1.0) };
            assert!((r.integrate(|t| t.powi(j)) - want).abs() < 1e-14);
        }
        assert!(r.weights.iter().all(|&w| w > 0.0));
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(gauss_generalized_laguerre(0, 0.0).is_err());
        assert!(gauss_generalized_laguerre(513, 0.0).is_err());
        assert!(gauss_generalized_laguerre(5, -1.0).is_err());
        assert!(gauss_legendre(0).is_err());
    }
}
