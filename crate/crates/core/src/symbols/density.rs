use crate::error::{domain, Result};
use crate::specfun::{ln_gamma, normalized_bessel};
use serde::{Deserialize, Serialize};

/// Density part `φ = Ψ′` of a symbol measure.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Density {
    /// `t^{σ−1} e^{−ct} / Γ(σ)`, Laplace transform `(s+c)^{−σ}`.
    FracIntegral { sigma: f64, c: f64 },
    /// `J_ν(t) t^ν e^{−shift·t} / C_α` with `ν = (α−1)/2`,
    /// `C_α = 2^ν Γ(α/2)/√π`; Laplace transform `((s+shift)²+1)^{−α/2}`.
    BesselResolvent {
        alpha: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        shift: Option<f64>,
    },
    /// Linear interpolation of `(t, values)`, zero outside `[t_0, t_last]`.
    CustomTable { t: Vec<f64>, values: Vec<f64> },
    /// `coefficient · t^{exponent} e^{−decay·t}`.
    PowerLaw {
        coefficient: f64,
        exponent: f64,
        #[serde(default)]
        decay: f64,
    },
    /// `coefficient · e^{−rate·t}` for `t ≥ start`, zero before.
    ShiftedExp { coefficient: f64, rate: f64, start: f64 },
    /// `amplitude · e^{−damping·u} · inner(u / time_scale)`.
    Rescaled {
        inner: Box<Density>,
        amplitude: f64,
        time_scale: f64,
        #[serde(default)]
        damping: f64,
    },
}

impl Density {
    pub fn validate(&self) -> Result<()> {
        let finite = |v: f64, name: &str| {
            if v.is_finite() {
                Ok(())
            } else {
                Err(domain(format!("{name} must be finite")))
            }
        };
        match self {
            Density::FracIntegral { sigma, c } => {
                if !(*sigma > 0.0) || !sigma.is_finite() {
                    return Err(domain(format!("frac_integral sigma must be > 0, got {sigma}")));
                }
                finite(*c, "frac_integral c")
            }
            Density::BesselResolvent { alpha, shift } => {
                if !(*alpha > 0.0) || !alpha.is_finite() {
                    return Err(domain(format!("bessel_resolvent alpha must be > 0, got {alpha}")));
                }
                if let Some(s) = shift {
                    if !(*s >= 0.0) || !s.is_finite() {
                        return Err(domain(format!("bessel_resolvent shift must be >= 0, got {s}")));
                    }
                }
                Ok(())
            }
            Density::CustomTable { t, values } => {
                if t.len() != values.len() || t.len() < 2 {
                    return Err(domain("custom_table needs matching t/values with at least two points"));
                }
                if !(t[0] >= 0.0) || t.windows(2).any(|w| !(w[1] > w[0])) || !t.last().unwrap().is_finite() {
                    return Err(domain("custom_table t must be nonnegative, finite and strictly increasing"));
                }
                if values.iter().any(|v| !v.is_finite()) {
                    return Err(domain("custom_table values must be finite"));
                }
                Ok(())
            }
            Density::PowerLaw { coefficient, exponent, decay } => {
                finite(*coefficient, "power_law coefficient")?;
                finite(*exponent, "power_law exponent")?;
                finite(*decay, "power_law decay")
            }
            Density::ShiftedExp { coefficient, rate, start } => {
                finite(*coefficient, "shifted_exp coefficient")?;
                finite(*rate, "shifted_exp rate")?;
                if !(*start >= 0.0) || !start.is_finite() {
                    return Err(domain("shifted_exp start must be >= 0"));
                }
                Ok(())
            }
            Density::Rescaled { inner, amplitude, time_scale, damping } => {
                finite(*amplitude, "rescaled amplitude")?;
                finite(*damping, "rescaled damping")?;
                if !(*time_scale > 0.0) || !time_scale.is_finite() {
                    return Err(domain("rescaled time_scale must be > 0"));
                }
                inner.validate()
            }
        }
    }

    pub fn bessel_shift(alpha: f64, shift: Option<f64>) -> f64 {
        shift.unwrap_or((alpha + 1.0) / 2.0)
    }

    /// `φ(t)` for `t > 0`.
    pub fn eval(&self, t: f64) -> f64 {
        match self {
            Density::FracIntegral { sigma, c } => ((sigma - 1.0) * t.ln() - c * t - ln_gamma(*sigma)).exp(),
            Density::BesselResolvent { alpha, shift } => {
                let nu = (alpha - 1.0) / 2.0;
                let sh = Self::bessel_shift(*alpha, *shift);
                let j = normalized_bessel(nu, t).unwrap_or(f64::NAN);
                let log_c = 0.5 * std::f64::consts::PI.ln()
                    - nu * 4f64.ln()
                    - ln_gamma(nu + 1.0)
                    - ln_gamma(alpha / 2.0);
                j * ((alpha - 1.0) * t.ln() - sh * t + log_c).exp()
            }
            Density::CustomTable { t: ts, values } => {
                if t < ts[0] || t > *ts.last().unwrap() {
                    return 0.0;
                }
                let i = ts.partition_point(|&x| x <= t).clamp(1, ts.len() - 1);
                let (t0, t1) = (ts[i - 1], ts[i]);
                let u = (t - t0) / (t1 - t0);
                values[i - 1] * (1.0 - u) + values[i] * u
            }
            Density::PowerLaw { coefficient, exponent, decay } => coefficient * t.powf(*exponent) * (-decay * t).exp(),
            Density::ShiftedExp { coefficient, rate, start } => {
                if t < *start {
                    0.0
                } else {
                    coefficient * (-rate * t).exp()
                }
            }
            Density::Rescaled { inner, amplitude, time_scale, damping } => {
                amplitude * (-damping * t).exp() * inner.eval(t / time_scale)
            }
        }
    }

    /// Exponent `e` with `φ(t) ~ t^{e−1}` as `t → 0`; `∞` when `φ` vanishes
    /// near the origin.
    pub fn small_t_exponent(&self) -> f64 {
        match self {
            Density::FracIntegral { sigma, .. } => *sigma,
            Density::BesselResolvent { alpha, .. } => *alpha,
            Density::CustomTable { t, .. } => {
                if t[0] > 0.0 {
                    f64::INFINITY
                } else {
                    1.0
                }
            }
            Density::PowerLaw { exponent, .. } => exponent + 1.0,
            Density::ShiftedExp { start, .. } => {
                if *start > 0.0 {
                    f64::INFINITY
                } else {
                    1.0
                }
            }
            Density::Rescaled { inner, .. } => inner.small_t_exponent(),
        }
    }

    /// Points where `φ` is not smooth.
    pub fn breakpoints(&self) -> Vec<f64> {
        match self {
            Density::CustomTable { t, .. } => t.clone(),
            Density::ShiftedExp { start, .. } if *start > 0.0 => vec![*start],
            Density::Rescaled { inner, time_scale, .. } => {
                inner.breakpoints().into_iter().map(|b| b * time_scale).collect()
            }
            _ => Vec::new(),
        }
    }

    /// End of the support (`∞` for unbounded support).
    pub fn support_end(&self) -> f64 {
        match self {
            Density::CustomTable { t, .. } => *t.last().unwrap(),
            Density::Rescaled { inner, time_scale, .. } => inner.support_end() * time_scale,
            _ => f64::INFINITY,
        }
    }

    /// Closed-form Laplace transform `∫ e^{−st} φ(t) dt`, when known and
    /// convergent.
    pub fn laplace_closed_form(&self, s: f64) -> Option<f64> {
        match self {
            Density::FracIntegral { sigma, c } => (s + c > 0.0).then(|| (s + c).powf(-sigma)),
            Density::BesselResolvent { alpha, shift } => {
                let z = s + Self::bessel_shift(*alpha, *shift);
                (z > 0.0).then(|| (z * z + 1.0).powf(-alpha / 2.0))
            }
            Density::PowerLaw { coefficient, exponent, decay } => (*exponent > -1.0 && s + decay > 0.0)
                .then(|| coefficient * (ln_gamma(exponent + 1.0) - (exponent + 1.0) * (s + decay).ln()).exp()),
            Density::ShiftedExp { coefficient, rate, start } => {
                (s + rate > 0.0).then(|| coefficient * (-(s + rate) * start).exp() / (s + rate))
            }
            Density::Rescaled { inner, amplitude, time_scale, damping } => inner
                .laplace_closed_form((s + damping) * time_scale)
                .map(|v| amplitude * time_scale * v),
            Density::CustomTable { .. } => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn table_interpolates_linearly() {
        let d = Density::CustomTable { t: vec![0.0, 1.0, 3.0], values: vec![2.0, 4.0, 0.0] };
        assert_eq!(d.eval(0.5), 3.0);
        assert_eq!(d.eval(2.0), 2.0);
        assert_eq!(d.eval(3.5), 0.0);
        assert_eq!(d.support_end(), 3.0);
    }

    #[test]
    fn bessel_density_small_t() {
        // φ(t) ≈ t^{α−1}/Γ(α) near 0 (leading term of the normalization).
        let alpha: f64 = 1.4;
        let d = Density::BesselResolvent { alpha, shift: Some(0.0) };
        let t: f64 = 1e-6;
        let want = t.powf(alpha - 1.0) / statrs::function::gamma::gamma(alpha);
        assert_relative_eq!(d.eval(t), want, max_relative = 1e-5);
    }

    #[test]
    fn serde_tagged_form() {
        let d: Density = serde_json::from_str(r#"{"kind":"frac_integral","sigma":0.5,"c":1.0}"#).unwrap();
        assert_eq!(d, Density::FracIntegral { sigma: 0.5, c: 1.0 });
        let b: Density = serde_json::from_str(r#"{"kind":"bessel_resolvent","alpha":2.0}"#).unwrap();
        assert_eq!(b, Density::BesselResolvent { alpha: 2.0, shift: None });
    }

    #[test]
    fn validation() {
        assert!(Density::FracIntegral { sigma: 0.0, c: 1.0 }.validate().is_err());
        assert!(Density::BesselResolvent { alpha: 0.0, shift: None }.validate().is_err());
        assert!(Density::CustomTable { t: vec![1.0, 0.5], values: vec![0.0, 0.0] }.validate().is_err());
    }
}
