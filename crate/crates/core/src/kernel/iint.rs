use crate::error::{domain, Error, Result};
use crate::quad::{integrate_panels, Estimate, Tolerance};
use serde::{Deserialize, Serialize};

/// Geometric mesh `[0, a0, 2a0, 4a0, …, 1]`.
fn graded_mesh(a0: f64) -> Vec<f64> {
    let mut m = vec![0.0];
    let mut a = a0;
    while a < 0.5 {
        m.push(a);
        a *= 2.0;
    }
    m.push(1.0);
    m
}

/// `∫_0^1 g(s) ds` where `g(s) ~ s^{e−1}` at 0: the first panel is mapped by
/// `s = a0·v^{1/e}`, the rest by a geometric mesh.
fn graded_integral(g: &dyn Fn(f64) -> f64, e: f64, a0: f64, tol: Tolerance) -> Estimate {
    let mesh = graded_mesh(a0);
    let inv = 1.0 / e;
    let head = |v: f64| {
        if v <= 0.0 {
            return 0.0;
        }
        let s = a0 * v.powf(inv);
        g(s) * a0 * inv * v.powf(inv - 1.0)
    };
    let mut est = integrate_panels(&head, &[0.0, 1.0], tol);
    est.add(&integrate_panels(g, &mesh[1..], tol));
    est
}

/// `I_{γ,k}(r) = ∫_{−1}^1 (1−t²)^k (1 − 2rt + r²)^{−γ/2} dt`, `k > −1`, `r ≥ 0`.
///
/// Each half of `[−1, 1]` is integrated in the distance to its endpoint on a
/// mesh graded toward the endpoint; on the right half the grading starts at
/// the scale `(1−r)²/(2r)` where the second factor turns over. At `r = 1`
/// the integral exists only for `γ < 2k + 2`.
pub fn i_integral(gamma: f64, k: f64, r: f64) -> Result<Estimate> {
    if !(k > -1.0) || !k.is_finite() {
        return Err(domain(format!("k must be > -1, got {k}")));
    }
    if !(gamma > 0.0) || !gamma.is_finite() {
        return Err(domain(format!("gamma must be > 0, got {gamma}")));
    }
    if !(r >= 0.0) || !r.is_finite() {
        return Err(domain(format!("r must be >= 0, got {r}")));
    }
    if r == 1.0 && gamma >= 2.0 * k + 2.0 {
        return Err(Error::Divergent(format!("I_(gamma={gamma}, k={k})(1) diverges since gamma >= 2k+2")));
    }
    let tol = Tolerance { rel: 1e-13, max_intervals: 20_000, ..Tolerance::default() };
    let h = gamma / 2.0;
    let d2 = (1.0 - r) * (1.0 - r);
    // Right half, s = 1 − t: s^k (2−s)^k ((1−r)² + 2rs)^{−γ/2}.
    let right = |s: f64| (k * (s * (2.0 - s)).ln() - h * (d2 + 2.0 * r * s).ln()).exp();
    let eps = if r > 0.0 { d2 / (2.0 * r) } else { f64::INFINITY };
    let (e_right, a_right) = if r == 1.0 {
        (k + 1.0 - h, 1.0 / 1024.0)
    } else {
        (k + 1.0, (eps / 8.0).min(1.0 / 1024.0))
    };
    let mut est = graded_integral(&right, e_right, a_right, tol);
    // Left half, u = 1 + t: u^k (2−u)^k ((1+r)² − 2ru)^{−γ/2}.
    let p2 = (1.0 + r) * (1.0 + r);
    let left = |u: f64| (k * (u * (2.0 - u)).ln() - h * (p2 - 2.0 * r * u).ln()).exp();
    est.add(&graded_integral(&left, k + 1.0, 1.0 / 1024.0, tol));
    Ok(est)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "regime", rename_all = "snake_case")]
pub enum Regime {
    Bounded,
    Log,
    Power { exponent: f64 },
}

/// One sample of the `r → 1` scan.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IRow {
    pub gamma: f64,
    pub k: f64,
    pub r: f64,
    pub i_value: f64,
    /// Local log–log slope of `I` against `1 − r` between neighbouring samples.
    pub fitted_exponent: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegimeReport {
    pub gamma: f64,
    pub k: f64,
    pub expected: Regime,
    pub observed: Regime,
    pub max_ratio: f64,
    /// `R²` of the linear fit of `I` against `ln(1/(1−r))`.
    pub log_r_squared: f64,
    /// Slope of that linear fit.
    pub log_slope: f64,
    /// Log–log exponent fitted on the last samples.
    pub power_exponent: f64,
    pub rows: Vec<IRow>,
    pub pass: bool,
}

const J_MIN: i32 = 3;
const J_MAX: i32 = 14;
const BOUNDED_RATIO: f64 = 1.05;
const LOG_R2: f64 = 0.999;
const POWER_WINDOW: usize = 6;
const POWER_TOL: f64 = 0.1;

fn linear_fit(x: &[f64], y: &[f64]) -> (f64, f64, f64) {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxx: f64 = x.iter().map(|a| (a - mx).powi(2)).sum();
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let syy: f64 = y.iter().map(|b| (b - my).powi(2)).sum();
    let slope = sxy / sxx;
    let r2 = if syy == 0.0 { 1.0 } else { sxy * sxy / (sxx * syy) };
    (slope, my - slope * mx, r2)
}

/// Classifies the growth of `I_{γ,k}(r)` at `r_j = 1 − 2^{−j}`, `j = 3..14`.
///
/// Bounded when consecutive ratios stay below 1.05; logarithmic when `I` is
/// linear in `ln(1/(1−r))` with `R² ≥ 0.999`; otherwise a power law whose
/// exponent is fitted on the last six samples. The expected regime follows
/// from comparing `γ` with `2k+2`; a power law must match `2k+2−γ` within 0.1.
pub fn verify_i_regimes(gamma: f64, k: f64) -> Result<RegimeReport> {
    let js: Vec<i32> = (J_MIN..=J_MAX).collect();
    let rs: Vec<f64> = js.iter().map(|&j| 1.0 - 2f64.powi(-j)).collect();
    let vals = rs.iter().map(|&r| Ok(i_integral(gamma, k, r)?.value)).collect::<Result<Vec<f64>>>()?;
    let ln_d: Vec<f64> = rs.iter().map(|r| (1.0 - r).ln()).collect();
    let ln_v: Vec<f64> = vals.iter().map(|v| v.ln()).collect();
    let n = vals.len();
    let rows = (0..n)
        .map(|i| {
            let (a, b) = if i + 1 < n { (i, i + 1) } else { (i - 1, i) };
            IRow {
                gamma,
                k,
                r: rs[i],
                i_value: vals[i],
                fitted_exponent: (ln_v[b] - ln_v[a]) / (ln_d[b] - ln_d[a]),
            }
        })
        .collect();
    let max_ratio = vals.windows(2).map(|w| w[1] / w[0]).fold(f64::NEG_INFINITY, f64::max);
    let xs: Vec<f64> = js.iter().map(|&j| j as f64 * std::f64::consts::LN_2).collect();
    let (log_slope, _, log_r_squared) = linear_fit(&xs, &vals);
    let (power_exponent, _, _) = linear_fit(&ln_d[n - POWER_WINDOW..], &ln_v[n - POWER_WINDOW..]);
    let observed = if max_ratio <= BOUNDED_RATIO {
        Regime::Bounded
    } else if log_r_squared >= LOG_R2 {
        Regime::Log
    } else {
        Regime::Power { exponent: power_exponent }
    };
    let crit = 2.0 * k + 2.0;
    let expected = if (gamma - crit).abs() <= 1e-12 {
        Regime::Log
    } else if gamma < crit {
        Regime::Bounded
    } else {
        Regime::Power { exponent: crit - gamma }
    };
    let pass = match (expected, observed) {
        (Regime::Bounded, Regime::Bounded) | (Regime::Log, Regime::Log) => true,
        (Regime::Power { exponent: e }, Regime::Power { exponent: o }) => (e - o).abs() <= POWER_TOL,
        _ => false,
    };
    Ok(RegimeReport { gamma, k, expected, observed, max_ratio, log_r_squared, log_slope, power_exponent, rows, pass })
}
