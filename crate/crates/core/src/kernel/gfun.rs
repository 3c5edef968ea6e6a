use crate::error::{domain, Result};
use crate::quad::{integrate_panels, integrate_stieltjes_hinted, Estimate, Tolerance};
use crate::specfun::{laguerre_fns, ln_gamma};
use crate::sum::CompensatedSum;
use crate::symbols::{symbol_values, verify_h1, SymbolSpec};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Lower limit `ρ₀` for the uniform kernel bound.
pub const RHO_MIN: f64 = 0.5;

/// Parameters of the regularized kernel
/// `g_ρ(x) = Γ(α+1)^{−1} Σ_k m_k ρ^k L_k^α(x) e^{−x/2}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KernelProfile {
    pub alpha: f64,
    pub sigma: f64,
    pub rho: f64,
    pub symbol: SymbolSpec,
}

impl KernelProfile {
    pub fn new(alpha: f64, sigma: f64, rho: f64, symbol: SymbolSpec) -> Result<Self> {
        let p = Self { alpha, sigma, rho, symbol };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.alpha >= 0.0) || !self.alpha.is_finite() {
            return Err(domain(format!("kernel alpha must be >= 0, got {}", self.alpha)));
        }
        if !(self.sigma > 0.0 && self.sigma < self.alpha + 1.0) {
            return Err(domain(format!("sigma must lie in (0, alpha+1), got {}", self.sigma)));
        }
        if !(self.rho > 0.0 && self.rho <= 1.0) {
            return Err(domain(format!("rho must lie in (0, 1], got {}", self.rho)));
        }
        self.symbol.validate()
    }

    pub fn with_rho(&self, rho: f64) -> Self {
        Self { rho, ..self.clone() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesValue {
    pub value: f64,
    /// Bound on the omitted terms `TV·Σ_{k≥K} ρ^k B_k / Γ(α+1)`.
    pub tail_bound: f64,
    pub terms: usize,
}

/// Truncated kernel series with precomputed coefficients, for evaluation at
/// many points.
#[derive(Debug, Clone)]
pub struct KernelSeries {
    alpha: f64,
    coeffs: Vec<f64>,
    tail_bound: f64,
}

/// `ln B_k` with `B_k = C(k+α, k)` for `α ≥ 0` (so `|L_k^α e^{−x/2}| ≤ B_k`)
/// and `B_k = 2` for `−1 < α < 0`.
fn ln_bound(k: usize, alpha: f64) -> f64 {
    if alpha >= 0.0 {
        ln_gamma(k as f64 + alpha + 1.0) - ln_gamma(k as f64 + 1.0) - ln_gamma(alpha + 1.0)
    } else {
        2f64.ln()
    }
}

fn tail_bound(alpha: f64, rho: f64, tv: f64, from: usize) -> f64 {
    if tv == 0.0 {
        return 0.0;
    }
    let lr = rho.ln();
    let mut s = 0.0;
    let mut k = from;
    loop {
        let t = (k as f64 * lr + ln_bound(k, alpha)).exp();
        s += t;
        // Past the peak of k^α ρ^k the terms decay at least geometrically
        // with ratio ((k+1+α)/(k+1))ρ.
        let ratio = (k as f64 + 1.0 + alpha) / (k as f64 + 1.0) * rho;
        if ratio < 1.0 && t <= 1e-18 * s {
            s += t * ratio / (1.0 - ratio);
            break;
        }
        if k > from + 10_000_000 {
            return f64::INFINITY;
        }
        k += 1;
    }
    tv * s * (-ln_gamma(alpha + 1.0)).exp()
}

impl KernelSeries {
    /// The first `terms` terms of the series for `profile` (`ρ < 1`).
    pub fn new(profile: &KernelProfile, terms: usize) -> Result<Self> {
        profile.validate()?;
        if profile.rho >= 1.0 {
            return Err(domain("the kernel series needs rho < 1; use kernel_integral at rho = 1"));
        }
        let tv = verify_h1(&profile.symbol)?.value;
        let m = symbol_values(&profile.symbol, terms)?;
        Ok(Self::from_values(profile.alpha, profile.rho, &m, tv))
    }

    /// Smallest truncation whose tail bound is at most `tol`.
    pub fn with_tolerance(profile: &KernelProfile, tol: f64) -> Result<Self> {
        profile.validate()?;
        if profile.rho >= 1.0 {
            return Err(domain("the kernel series needs rho < 1; use kernel_integral at rho = 1"));
        }
        let tv = verify_h1(&profile.symbol)?.value;
        let mut k = 1;
        while tail_bound(profile.alpha, profile.rho, tv, k) > tol {
            k = (k as f64 * 1.25).ceil() as usize;
            if k > 200_000 {
                return Err(domain("kernel series tolerance not reachable"));
            }
        }
        let m = symbol_values(&profile.symbol, k)?;
        Ok(Self::from_values(profile.alpha, profile.rho, &m, tv))
    }

    /// Series built from given symbol values `m_0, …, m_{K−1}` and total variation.
    pub fn from_values(alpha: f64, rho: f64, m: &[f64], tv: f64) -> Self {
        let lr = rho.ln();
        let lg = ln_gamma(alpha + 1.0);
        let coeffs = m
            .iter()
            .enumerate()
            .map(|(k, &mk)| {
                let kf = k as f64;
                mk * (kf * lr + 0.5 * (ln_gamma(kf + alpha + 1.0) - ln_gamma(kf + 1.0)) - lg).exp()
            })
            .collect();
        Self { alpha, coeffs, tail_bound: tail_bound(alpha, rho, tv, m.len()) }
    }

    pub fn terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn eval(&self, x: f64) -> Result<SeriesValue> {
        let l = laguerre_fns(self.coeffs.len(), self.alpha, x)?;
        let mut s = CompensatedSum::new();
        for (c, v) in self.coeffs.iter().zip(&l) {
            s.add(c * v);
        }
        Ok(SeriesValue { value: s.value(), tail_bound: self.tail_bound, terms: self.coeffs.len() })
    }
}

/// Partial sum of the kernel series with `terms` terms, plus a tail bound.
pub fn kernel_series(profile: &KernelProfile, x: f64, terms: usize) -> Result<SeriesValue> {
    KernelSeries::new(profile, terms)?.eval(x)
}

/// `g_ρ(x) = Γ(α+1)^{−1} e^{−x/2} ∫ Z_{α,x}(ρe^{−t}) dΨ(t)`.
///
/// Valid for `ρ ≤ 1`; at `ρ = 1` it needs `x > 0`.
pub fn kernel_integral(profile: &KernelProfile, x: f64) -> Result<Estimate> {
    profile.validate()?;
    if !(x >= 0.0) {
        return Err(domain(format!("x must be >= 0, got {x}")));
    }
    if profile.rho == 1.0 && x == 0.0 {
        return Err(domain("g(0) is undefined at rho = 1"));
    }
    let a = profile.alpha;
    let lr = profile.rho.ln();
    // e^{−x/2} Z_{α,x}(w) = (1−w)^{−α−1} exp(−x(1+w)/(2(1−w))), with 1−w
    // taken from expm1 for accuracy near w = 1.
    let f = |t: f64| {
        let lw = lr - t;
        let omw = -lw.exp_m1();
        if omw <= 0.0 {
            return 0.0;
        }
        let w = lw.exp();
        (-(a + 1.0) * omw.ln() - x * (1.0 + w) / (2.0 * omw)).exp()
    };
    let peak = x / (a + 1.0);
    let mut hints = vec![peak * 0.25, peak, peak * 4.0];
    if profile.rho < 1.0 {
        hints.push(1.0 - profile.rho);
    }
    hints.retain(|h| *h > 0.0 && *h < 60.0);
    let est = integrate_stieltjes_hinted(&profile.symbol, &f, &hints)?;
    Ok(est.scale((-ln_gamma(a + 1.0)).exp()))
}

/// `e^{−x/2} ∫_0^δ Z_{β,x}(ρe^{−t}) ρe^{−t} t^σ dt`, bounded by `C x^{σ−β}`.
pub fn truncated_kernel_integral(beta: f64, sigma: f64, rho: f64, delta: f64, x: f64) -> Result<f64> {
    if !(rho > 0.0 && rho <= 1.0) || !(delta > 0.0) || !(x > 0.0) || !(beta > -1.0) {
        return Err(domain("truncated_kernel_integral needs 0 < rho <= 1, delta > 0, x > 0, beta > -1"));
    }
    let lr = rho.ln();
    let f = |t: f64| {
        let lw = lr - t;
        let omw = -lw.exp_m1();
        if omw <= 0.0 {
            return 0.0;
        }
        let w = lw.exp();
        (-(beta + 1.0) * omw.ln() - x * (1.0 + w) / (2.0 * omw) + lw + sigma * t.ln()).exp()
    };
    let peak = x / (beta + 1.0);
    let mut breaks = vec![0.0];
    let mut b = 1e-12f64.max(peak * 1e-4);
    while b < delta {
        breaks.push(b);
        b *= 4.0;
    }
    breaks.push(delta);
    Ok(integrate_panels(&f, &breaks, Tolerance::rel(1e-12)).value)
}

/// One `(x, ρ)` sample of the kernel bound scan.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KernelRow {
    pub alpha: f64,
    pub sigma: f64,
    pub rho: f64,
    pub x: f64,
    pub g_rho: f64,
    /// `x^{α+1−σ} |g_ρ(x)|`.
    pub weighted_value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KernelBoundReport {
    pub rows: Vec<KernelRow>,
    /// `(ρ, sup_x x^{α+1−σ}|g_ρ(x)|)`.
    pub per_rho_sup: Vec<(f64, f64)>,
    pub sup: f64,
    /// Largest over smallest per-ρ supremum.
    pub spread: f64,
    pub pass: bool,
}

/// Scans `x^{α+1−σ}|g_ρ(x)|` over `grid × rho_list`.
///
/// Passes when every supremum is finite and the per-ρ suprema differ by
/// less than a factor 2.
pub fn verify_kernel_bound(profile: &KernelProfile, grid: &[f64], rho_list: &[f64]) -> Result<KernelBoundReport> {
    profile.validate()?;
    if !(profile.alpha > 0.0) {
        return Err(domain("the kernel bound is stated for alpha > 0"));
    }
    if rho_list.is_empty() || grid.is_empty() {
        return Err(domain("kernel bound scan needs a nonempty grid and rho list"));
    }
    for &r in rho_list {
        if !(r >= RHO_MIN && r <= 1.0) {
            return Err(domain(format!("rho must lie in [{RHO_MIN}, 1], got {r}")));
        }
    }
    if grid.iter().any(|&x| !(x > 0.0)) {
        return Err(domain("kernel bound grid must be positive"));
    }
    let jobs: Vec<(f64, f64)> = rho_list.iter().flat_map(|&r| grid.iter().map(move |&x| (r, x))).collect();
    let e = profile.alpha + 1.0 - profile.sigma;
    let rows = jobs
        .par_iter()
        .map(|&(rho, x)| {
            let g = kernel_integral(&profile.with_rho(rho), x)?.value;
            Ok(KernelRow {
                alpha: profile.alpha,
                sigma: profile.sigma,
                rho,
                x,
                g_rho: g,
                weighted_value: x.powf(e) * g.abs(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let per_rho_sup: Vec<(f64, f64)> = rho_list
        .iter()
        .map(|&r| {
            let s = rows.iter().filter(|w| w.rho == r).map(|w| w.weighted_value).fold(0.0, f64::max);
            (r, s)
        })
        .collect();
    let sup = per_rho_sup.iter().map(|p| p.1).fold(0.0, f64::max);
    let lo = per_rho_sup.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
    let spread = sup / lo;
    let pass = sup.is_finite() && per_rho_sup.iter().all(|p| p.1.is_finite()) && spread < 2.0;
    Ok(KernelBoundReport { rows, per_rho_sup, sup, spread, pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::{gamma, gen_fn_z};

    #[test]
    fn zero_symbol_gives_zero() {
        let p = KernelProfile::new(1.0, 0.5, 0.5, SymbolSpec::zero()).unwrap();
        assert_eq!(kernel_series(&p, 1.0, 20).unwrap().value, 0.0);
        assert_eq!(kernel_integral(&p, 1.0).unwrap().value, 0.0);
    }

    #[test]
    fn single_atom_matches_generating_function() {
        let (tau, w, a, rho): (f64, f64, f64, f64) = (0.4, 0.7, 0.5, 0.8);
        let p = KernelProfile::new(a, 0.5, rho, SymbolSpec::atoms(vec![(tau, w)])).unwrap();
        for x in [0.05f64, 1.0, 7.0] {
            let want = w * (-x / 2.0).exp() * gen_fn_z(a, x, rho * (-tau).exp()).unwrap() / gamma(a + 1.0);
            let s = KernelSeries::with_tolerance(&p, 1e-14).unwrap().eval(x).unwrap();
            assert!((s.value - want).abs() < 1e-12, "{x}");
            assert!((kernel_integral(&p, x).unwrap().value - want).abs() < 1e-14);
        }
    }

    #[test]
    fn series_matches_integral_frac() {
        let p = KernelProfile::new(0.0, 0.5, 0.5, SymbolSpec::frac_integral(0.5, 1.0)).unwrap();
        let s = KernelSeries::with_tolerance(&p, 1e-12).unwrap();
        let d = s.eval(1.0).unwrap().value - kernel_integral(&p, 1.0).unwrap().value;
        assert!(d.abs() < 1e-8, "{d}");
    }

    #[test]
    fn rho_to_one_is_cauchy() {
        // Reference values from an independent adaptive quadrature of the
        // same representation.
        let p = KernelProfile::new(1.0, 0.5, 0.999, SymbolSpec::frac_integral(0.5, 1.0)).unwrap();
        let refs = [(0.999, 0.383_153_612_730_534_8), (0.9999, 0.382_502_628_148_968), (1.0, 0.382_430_452_918_449)];
        let vals: Vec<f64> = refs.iter().map(|&(r, _)| kernel_integral(&p.with_rho(r), 1.0).unwrap().value).collect();
        for (v, (_, want)) in vals.iter().zip(refs) {
            assert!((v - want).abs() < 1e-10, "{v} vs {want}");
        }
        let d1 = (vals[0] - vals[1]).abs();
        let d2 = (vals[1] - vals[2]).abs();
        assert!(d1 < 1e-3 && d2 < 1e-4 && d2 < d1 / 5.0, "{d1} {d2}");
    }

    #[test]
    fn series_rejects_rho_one() {
        let p = KernelProfile::new(1.0, 0.5, 1.0, SymbolSpec::frac_integral(0.5, 1.0)).unwrap();
        assert!(kernel_series(&p, 1.0, 10).is_err());
    }

    #[test]
    fn profile_validation() {
        assert!(KernelProfile::new(1.0, 2.0, 0.5, SymbolSpec::zero()).is_err());
        assert!(KernelProfile::new(-0.5, 0.2, 0.5, SymbolSpec::zero()).is_err());
        assert!(KernelProfile::new(1.0, 0.5, 1.5, SymbolSpec::zero()).is_err());
    }

    #[test]
    fn atom_kernel_weight_vanishes_at_zero() {
        let p = KernelProfile::new(1.0, 0.5, 1.0, SymbolSpec::heat(0.5, 1.0)).unwrap();
        let grid = [1e-6, 1e-4, 1e-2];
        let r = verify_kernel_bound(&p, &grid, &[0.9, 1.0]).unwrap();
        for w in r.rows.windows(2).filter(|w| w[0].rho == w[1].rho) {
            assert!(w[0].weighted_value < w[1].weighted_value);
        }
    }

    #[test]
    fn truncated_kernel_bound_is_uniform() {
        let (beta, sigma) = (2.0, 0.5);
        let mut vals = Vec::new();
        for i in 0..25 {
            let x = 1e-3 * 10f64.powf(i as f64 * 0.2);
            for rho in [0.9, 0.999, 1.0] {
                vals.push(truncated_kernel_integral(beta, sigma, rho, 0.5, x).unwrap() * x.powf(beta - sigma));
            }
        }
        let mx = vals.iter().copied().fold(0.0, f64::max);
        assert!(mx.is_finite() && mx < 10.0, "{mx}");
    }
}
