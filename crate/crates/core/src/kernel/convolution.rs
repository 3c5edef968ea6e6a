use crate::error::{domain, Error, Result};
use crate::expansion::GridFunction;
use crate::quad::{integrate_panels, Estimate, Tolerance};
use crate::specfun::{ln_gamma, normalized_bessel};
use std::f64::consts::PI;

/// `c_α = Γ(α+1) / (√π Γ(α+1/2))`, so that `c_α ∫_0^π sin^{2α}θ dθ = 1`.
pub fn normalization_constant(alpha: f64) -> f64 {
    (ln_gamma(alpha + 1.0) - 0.5 * PI.ln() - ln_gamma(alpha + 0.5)).exp()
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha >= 0.0) || !alpha.is_finite() {
        return Err(domain(format!("convolutions are defined for alpha >= 0, got {alpha}")));
    }
    Ok(())
}

/// `(x, y)_θ = (x² + y² − 2xy cos θ)^{1/2}`, in a cancellation-free form.
fn dist(x: f64, y: f64, theta: f64) -> f64 {
    let s = (0.5 * theta).sin();
    ((x - y) * (x - y) + 4.0 * x * y * s * s).sqrt()
}

fn theta_tol() -> Tolerance {
    Tolerance { rel: 1e-12, max_intervals: 4000, ..Tolerance::default() }
}

/// Mesh on `[0, π]` graded toward `θ = 0`, where a kernel singular at the
/// origin is hit when `x = y`.
fn theta_mesh() -> Vec<f64> {
    let mut m = vec![0.0];
    let mut a = PI * 2f64.powi(-30);
    while a < PI / 2.0 {
        m.push(a);
        a *= 4.0;
    }
    m.push(PI);
    m
}

fn translate(f: &dyn Fn(f64) -> f64, alpha: f64, x: f64, y: f64, twisted: bool) -> f64 {
    let c = normalization_constant(alpha);
    let beta = alpha - 0.5;
    let g = |th: f64| {
        let s = th.sin();
        let w = if alpha == 0.0 { 1.0 } else { s.powf(2.0 * alpha) };
        let j = if twisted { normalized_bessel(beta, x * y * s).unwrap_or(f64::NAN) } else { 1.0 };
        f(dist(x, y, th)) * w * j
    };
    if x == 0.0 || y == 0.0 {
        // (x, y)_θ is constant and the Bessel factor is 1.
        return f(x + y);
    }
    c * integrate_panels(&g, &theta_mesh(), theta_tol()).value
}

/// Generalized Euclidean translation
/// `τ_x^E F(y) = c_α ∫_0^π F((x,y)_θ) sin^{2α}θ dθ`.
pub fn gen_translation_fn(f: &dyn Fn(f64) -> f64, alpha: f64, x: f64, y: f64) -> Result<f64> {
    check_alpha(alpha)?;
    Ok(translate(f, alpha, x, y, false))
}

/// Twisted translation, with the extra factor `𝒥_{α−1/2}(xy sin θ)`.
pub fn twisted_translation_fn(f: &dyn Fn(f64) -> f64, alpha: f64, x: f64, y: f64) -> Result<f64> {
    check_alpha(alpha)?;
    Ok(translate(f, alpha, x, y, true))
}

/// [`gen_translation_fn`] for sampled `F`; `[|x−y|, x+y]` must lie inside the grid.
pub fn gen_translation(f: &GridFunction, alpha: f64, x: f64, y: f64) -> Result<f64> {
    let (lo, hi) = ((x - y).abs(), x + y);
    if lo < f.x_min() {
        return Err(Error::Extrapolation { x: lo, lo: f.x_min(), hi: f.x_max() });
    }
    if hi > f.x_max() {
        return Err(Error::Extrapolation { x: hi, lo: f.x_min(), hi: f.x_max() });
    }
    gen_translation_fn(&|z| f.interpolate_or_zero(z), alpha, x, y)
}

fn convolve(
    f: &dyn Fn(f64) -> f64,
    g: &dyn Fn(f64) -> f64,
    alpha: f64,
    x: f64,
    y_max: f64,
    twisted: bool,
) -> Result<Estimate> {
    check_alpha(alpha)?;
    if !(x >= 0.0) || !(y_max > 0.0) {
        return Err(domain("convolution needs x >= 0 and y_max > 0"));
    }
    let outer = |y: f64| {
        let gy = g(y);
        if gy == 0.0 {
            return 0.0;
        }
        translate(f, alpha, x, y, twisted) * gy * y.powf(2.0 * alpha + 1.0)
    };
    let mut breaks = vec![0.0];
    if x > 0.0 && x < y_max {
        breaks.push(x);
    }
    breaks.push(y_max);
    let tol = Tolerance { rel: 1e-10, max_intervals: 2000, ..Tolerance::default() };
    Ok(integrate_panels(&outer, &breaks, tol))
}

/// `(F ⋆ G)(x) = ∫_0^{y_max} τ_x^E F(y) G(y) y^{2α+1} dy`.
pub fn gen_convolution(
    f: &dyn Fn(f64) -> f64,
    g: &dyn Fn(f64) -> f64,
    alpha: f64,
    x: f64,
    y_max: f64,
) -> Result<Estimate> {
    convolve(f, g, alpha, x, y_max, false)
}

/// `(F × G)(x) = ∫_0^{y_max} τ_x F(y) G(y) y^{2α+1} dy` with the twisted translation.
pub fn twisted_convolution(
    f: &dyn Fn(f64) -> f64,
    g: &dyn Fn(f64) -> f64,
    alpha: f64,
    x: f64,
    y_max: f64,
) -> Result<Estimate> {
    convolve(f, g, alpha, x, y_max, true)
}
