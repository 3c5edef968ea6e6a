use super::adaptive::{integrate_panels, Estimate, Tolerance};
use crate::error::{Error, Result};
use crate::symbols::{Density, SymbolSpec};

/// Start of the doubling-block tail region.
pub const TAIL_START: f64 = 60.0;
const TAIL_MAX: f64 = 1e7;
const TAIL_REL: f64 = 1e-12;
const REL_TOL: f64 = 1e-13;

/// Description of a half-line integral `∫_0^upper g(t) dt` where
/// `g(t) ~ t^{exponent−1}` as `t → 0`.
pub struct HalfLine<'a> {
    pub integrand: &'a dyn Fn(f64) -> f64,
    pub exponent: f64,
    pub breakpoints: &'a [f64],
    pub upper: f64,
}

impl HalfLine<'_> {
    /// Head panel with a power substitution for fractional exponents,
    /// adaptive middle panels on `[h, 60]`, then doubling blocks until the
    /// geometric tail estimate drops below `1e−12` of the running total.
    pub fn integrate(&self) -> Result<Estimate> {
        let e = self.exponent;
        if !(e > 0.0) {
            return Err(Error::Divergent(format!(
                "integrand behaves like t^{} at 0 (not integrable)",
                e - 1.0
            )));
        }
        let tol = Tolerance::rel(REL_TOL);
        let g = self.integrand;
        let upper = self.upper;
        if upper <= 0.0 {
            return Ok(Estimate::zero());
        }
        let first_break = self.breakpoints.iter().copied().filter(|&b| b > 0.0).fold(f64::INFINITY, f64::min);
        let h = 1f64.min(upper).min(first_break);
        let mut total = if e.is_finite() && (e.fract() != 0.0 || e < 1.0) {
            let inv = 1.0 / e;
            let sub = |v: f64| {
                if v <= 0.0 {
                    return 0.0;
                }
                let t = h * v.powf(inv);
                g(t) * h * inv * v.powf(inv - 1.0)
            };
            integrate_panels(&sub, &[0.0, 1.0], tol)
        } else {
            integrate_panels(g, &[0.0, h], tol)
        };
        let mid_end = upper.min(TAIL_START.max(h));
        if mid_end > h {
            let est = integrate_panels(g, &self.panel_breaks(h, mid_end), tol);
            total.add(&est);
        }
        if upper <= mid_end {
            return Ok(total);
        }
        let mut t = mid_end;
        let mut prev_abs = f64::NAN;
        loop {
            if t >= TAIL_MAX {
                return Err(Error::Divergent(format!(
                    "tail not negligible by t = {TAIL_MAX:e} (running total {:e})",
                    total.value
                )));
            }
            let t2 = (2.0 * t).min(upper);
            let block = integrate_panels(g, &self.panel_breaks(t, t2), tol);
            total.add(&block);
            if t2 >= upper {
                return Ok(total);
            }
            let scale = total.abs_value;
            if block.abs_value <= 1e-3 * TAIL_REL * scale || (block.abs_value == 0.0 && prev_abs == 0.0) {
                return Ok(total);
            } else {
                let r = block.abs_value / prev_abs;
                if r.is_finite() && r < 1.0 {
                    let tail = block.abs_value * r / (1.0 - r);
                    if tail <= TAIL_REL * scale {
                        total.error += tail;
                        return Ok(total);
                    }
                }
            }
            prev_abs = block.abs_value;
            t = t2;
        }
    }

    fn panel_breaks(&self, a: f64, b: f64) -> Vec<f64> {
        let mut v = vec![a];
        v.extend(self.breakpoints.iter().copied().filter(|&x| x > a && x < b));
        v.push(b);
        v
    }
}

/// `∫_0^upper f(t) φ(t) dt` for a density `φ` (or `∫ f |φ|` when `absolute`).
///
/// Rescaled densities are reduced to their inner density exactly, so the
/// Hermite-split symbols integrate on the same panels as the original.
///
/// `hints` are extra panel boundaries where `f` varies rapidly.
pub fn integrate_density(
    d: &Density,
    f: &dyn Fn(f64) -> f64,
    upper: f64,
    absolute: bool,
    hints: &[f64],
) -> Result<Estimate> {
    if let Density::Rescaled { inner, amplitude, time_scale, damping } = d {
        let (s, dd) = (*time_scale, *damping);
        let g = move |t: f64| f(s * t) * (-dd * s * t).exp();
        let amp = if absolute { amplitude.abs() } else { *amplitude };
        let inner_hints: Vec<f64> = hints.iter().map(|h| h / s).collect();
        return Ok(integrate_density(inner, &g, upper / s, absolute, &inner_hints)?.scale(amp * s));
    }
    let g = |t: f64| {
        let p = d.eval(t);
        if p == 0.0 {
            return 0.0;
        }
        f(t) * if absolute { p.abs() } else { p }
    };
    let mut breaks = d.breakpoints();
    breaks.extend(hints.iter().copied().filter(|h| h.is_finite() && *h > 0.0));
    breaks.sort_by(f64::total_cmp);
    breaks.dedup();
    HalfLine { integrand: &g, exponent: d.small_t_exponent(), breakpoints: &breaks, upper: upper.min(d.support_end()) }
        .integrate()
}

/// `∫_{[0,∞)} f dΨ = Σ_n a_n f(τ_n) + ∫ f(t) φ(t) dt`.
pub fn integrate_stieltjes(sym: &SymbolSpec, f: &dyn Fn(f64) -> f64) -> Result<Estimate> {
    integrate_stieltjes_hinted(sym, f, &[])
}

/// [`integrate_stieltjes`] with extra panel boundaries for the density part.
pub fn integrate_stieltjes_hinted(sym: &SymbolSpec, f: &dyn Fn(f64) -> f64, hints: &[f64]) -> Result<Estimate> {
    let mut est = match &sym.density {
        Some(d) => integrate_density(d, f, f64::INFINITY, false, hints)?,
        None => Estimate::zero(),
    };
    for &(tau, a) in &sym.atoms {
        let v = a * f(tau);
        est.value += v;
        est.abs_value += v.abs();
    }
    Ok(est)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn single_atom() {
        let sym = SymbolSpec::atoms(vec![(0.3, 1.7)]);
        let s: f64 = 2.0;
        let v = integrate_stieltjes(&sym, &|t| (-s * t).exp()).unwrap().value;
        assert_relative_eq!(v, 1.7 * (-0.3 * s).exp(), max_relative = 1e-15);
    }

    #[test]
    fn two_atoms_hand_sum() {
        let sym = SymbolSpec::atoms(vec![(0.5, 2.0), (1.5, -0.25)]);
        let v = integrate_stieltjes(&sym, &|t| (-3.0 * t).exp()).unwrap().value;
        let want = 2.0 * (-1.5f64).exp() - 0.25 * (-4.5f64).exp();
        assert_relative_eq!(v, want, max_relative = 1e-15);
    }

    #[test]
    fn fractional_density() {
        let sym = SymbolSpec::frac_integral(0.5, 1.0);
        for s in [0.0, 1.0, 7.5, 40.0] {
            let v = integrate_stieltjes(&sym, &|t| (-s * t).exp()).unwrap().value;
            assert_relative_eq!(v, (s + 1.0f64).powf(-0.5), max_relative = 1e-11);
        }
    }

    #[test]
    fn non_decaying_tail_is_divergent() {
        let sym = SymbolSpec::frac_integral(0.5, 0.0);
        assert!(matches!(integrate_stieltjes(&sym, &|_| 1.0), Err(Error::Divergent(_))));
    }

    #[test]
    fn non_integrable_origin_is_divergent() {
        let sym = SymbolSpec::with_density(Density::PowerLaw { coefficient: 1.0, exponent: -1.0, decay: 1.0 });
        assert!(matches!(integrate_stieltjes(&sym, &|_| 1.0), Err(Error::Divergent(_))));
    }
}
