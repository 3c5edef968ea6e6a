use crate::error::{domain, Error, Result};
use crate::expansion::GridFunction;
use crate::quad::{gauss_generalized_laguerre, gk15, Estimate, HalfLine};
use crate::sum::CompensatedSum;

fn check_p(p: f64) -> Result<()> {
    if !(p >= 1.0 && p.is_finite()) {
        return Err(domain(format!("norm exponent must satisfy 1 <= p < inf, got {p}")));
    }
    Ok(())
}

/// Interpolant used between grid nodes: geometric when both samples share a
/// sign (exact for exponentials), linear otherwise.
fn segment(f0: f64, f1: f64, x0: f64, x1: f64) -> impl Fn(f64) -> f64 {
    let geometric = f0 * f1 > 0.0;
    let ratio = if geometric { (f1 / f0).ln() } else { 0.0 };
    move |x: f64| {
        let u = (x - x0) / (x1 - x0);
        if geometric {
            f0 * (ratio * u).exp()
        } else {
            f0 * (1.0 - u) + f1 * u
        }
    }
}

/// `(∫ |f|^p x^γ dx)^{1/p}` for sampled data.
///
/// Inside the grid the samples are joined by [`segment`] interpolants and
/// integrated panel by panel with 15-point Kronrod rules. Below the grid `|f|`
/// is continued as the power law through the first two samples, above it as
/// the exponential through the last two. A continuation that is not
/// integrable is reported as [`Error::Divergent`].
pub fn weighted_norm(f: &GridFunction, p: f64, gamma: f64) -> Result<f64> {
    check_p(p)?;
    let (x, v) = (&f.grid, &f.values);
    let n = x.len();
    let mut acc = CompensatedSum::new();
    for i in 0..n.saturating_sub(1) {
        let s = segment(v[i], v[i + 1], x[i], x[i + 1]);
        let g = |t: f64| s(t).abs().powf(p) * t.powf(gamma);
        acc.add(gk15(&g, x[i], x[i + 1]).0);
    }
    acc.add(head(x, v, p, gamma)?);
    acc.add(tail(x, v, p, gamma)?);
    Ok(acc.value().powf(1.0 / p))
}

fn head(x: &[f64], v: &[f64], p: f64, gamma: f64) -> Result<f64> {
    let f0 = v[0].abs();
    if f0 == 0.0 {
        return Ok(0.0);
    }
    let nu = if x.len() > 1 && v[1] != 0.0 { (v[1].abs() / f0).ln() / (x[1] / x[0]).ln() } else { 0.0 };
    let e = p * nu + gamma + 1.0;
    if !(e > 0.0) {
        return Err(Error::Divergent(format!(
            "|f|^p x^gamma behaves like x^{} near 0 (gamma = {gamma})",
            e - 1.0
        )));
    }
    Ok(f0.powf(p) * x[0].powf(gamma + 1.0) / e)
}

fn tail(x: &[f64], v: &[f64], p: f64, gamma: f64) -> Result<f64> {
    let n = x.len();
    let fl = v[n - 1].abs();
    if fl == 0.0 {
        return Ok(0.0);
    }
    let lambda = if n > 1 && v[n - 2] != 0.0 {
        (v[n - 2].abs() / fl).ln() / (x[n - 1] - x[n - 2])
    } else {
        0.0
    };
    if !(lambda > 0.0) {
        return Err(Error::Divergent(format!("samples do not decay at the end of the grid (x = {})", x[n - 1])));
    }
    // ∫_0^∞ e^{−pλs} (x_n + s)^γ ds with s = u/(pλ).
    let rate = p * lambda;
    let rule = gauss_generalized_laguerre(32, 0.0)?;
    let xn = x[n - 1];
    let s: f64 = rule.integrate(|u| (xn + u / rate).powf(gamma));
    Ok(fl.powf(p) * s / rate)
}

/// `(∫_0^∞ |f|^p x^γ dx)^{1/p}` for a function with `|f(x)| ~ x^ν` at 0.
///
/// `breakpoints` mark where `f` oscillates or has kinks. Divergence at 0
/// (`pν + γ + 1 ≤ 0`) or a non-negligible tail are errors.
pub fn weighted_norm_fn(f: &dyn Fn(f64) -> f64, p: f64, gamma: f64, nu: f64, breakpoints: &[f64]) -> Result<f64> {
    Ok(weighted_power_fn(f, p, gamma, nu, breakpoints)?.value.powf(1.0 / p))
}

/// `∫_0^∞ |f|^p x^γ dx` with its error estimate.
pub fn weighted_power_fn(
    f: &dyn Fn(f64) -> f64,
    p: f64,
    gamma: f64,
    nu: f64,
    breakpoints: &[f64],
) -> Result<Estimate> {
    check_p(p)?;
    let g = |x: f64| {
        let fx = f(x);
        if fx == 0.0 {
            0.0
        } else {
            fx.abs().powf(p) * x.powf(gamma)
        }
    };
    let est = HalfLine { integrand: &g, exponent: p * nu + gamma + 1.0, breakpoints, upper: f64::INFINITY }.integrate()?;
    if !est.value.is_finite() {
        return Err(Error::Divergent("weighted norm is not finite".into()));
    }
    Ok(est)
}

/// `(∫_ℝ |f|^p |x|^γ dx)^{1/p}` for `f` bounded near 0.
pub fn weighted_norm_line(f: &dyn Fn(f64) -> f64, p: f64, gamma: f64, breakpoints: &[f64]) -> Result<f64> {
    let right = weighted_power_fn(f, p, gamma, 0.0, breakpoints)?;
    let left = weighted_power_fn(&|x| f(-x), p, gamma, 0.0, breakpoints)?;
    Ok((right.value + left.value).powf(1.0 / p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn bump_has_unit_mass() {
        let e = 1e-13;
        let f = GridFunction::new(vec![0.5, 1.0 - e, 1.0, 2.0, 2.0 + e, 3.0], vec![0.0, 0.0, 1.0, 1.0, 0.0, 0.0], 0.0)
            .unwrap();
        assert_relative_eq!(weighted_norm(&f, 2.0, 0.0).unwrap(), 1.0, max_relative = 1e-12);
    }

    #[test]
    fn exponential_norms_on_grid() {
        let grid = GridFunction::geometric_grid(1e-6, 80.0, 16000).unwrap();
        let f = GridFunction::from_fn(grid.clone(), 0.0, |x| (-x / 2.0).exp()).unwrap();
        assert_relative_eq!(weighted_norm(&f, 2.0, 0.0).unwrap(), 1.0, max_relative = 1e-10);
        let f = GridFunction::from_fn(grid, 0.0, |x| x * (-x / 2.0).exp()).unwrap();
        assert_relative_eq!(weighted_norm(&f, 2.0, 0.0).unwrap(), 2f64.sqrt(), max_relative = 1e-6);
    }

    #[test]
    fn grid_divergence_detected() {
        let grid = GridFunction::geometric_grid(1e-3, 10.0, 50).unwrap();
        let f = GridFunction::from_fn(grid.clone(), 0.0, |x| (-x).exp()).unwrap();
        assert!(matches!(weighted_norm(&f, 2.0, -1.5), Err(Error::Divergent(_))));
        let f = GridFunction::from_fn(grid, 0.0, |x| x).unwrap();
        assert!(matches!(weighted_norm(&f, 2.0, 0.0), Err(Error::Divergent(_))));
    }

    #[test]
    fn function_norms() {
        let n = weighted_norm_fn(&|x| (-x / 2.0).exp(), 2.0, 0.0, 0.0, &[]).unwrap();
        assert_relative_eq!(n, 1.0, max_relative = 1e-13);
        let n = weighted_norm_fn(&|x| x * (-x / 2.0).exp(), 2.0, 0.0, 1.0, &[]).unwrap();
        assert_relative_eq!(n, 2f64.sqrt(), max_relative = 1e-13);
        // ∫ e^{−3x} x^{−1/2} dx = Γ(1/2)/√3.
        let n = weighted_norm_fn(&|x| (-x).exp(), 3.0, -0.5, 0.0, &[]).unwrap();
        assert_relative_eq!(n.powi(3), std::f64::consts::PI.sqrt() / 3f64.sqrt(), max_relative = 1e-12);
        assert!(weighted_norm_fn(&|x| (-x).exp(), 2.0, -1.0, 0.0, &[]).is_err());
        let n = weighted_norm_line(&|x: f64| (-x * x / 2.0).exp(), 2.0, 0.0, &[]).unwrap();
        assert_relative_eq!(n.powi(2), std::f64::consts::PI.sqrt(), max_relative = 1e-13);
    }
}
