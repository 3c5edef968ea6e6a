use super::{ExpansionBasis, GridFunction, System};
use crate::error::{domain, Error, Result};
use std::f64::consts::SQRT_2;

/// Forward map from the `𝓛` system into `sys`, acting on samples
/// `(x_i, f(x_i))`: `W^α` (pointwise), `V` and `Z^α` (which move `x` to `√x`).
fn forward(sys: System, alpha: f64, x: f64, v: f64) -> (f64, f64) {
    match sys {
        System::LaguerreScriptL => (x, v),
        System::LaguerreL => (x, x.powf(-alpha / 2.0) * v),
        System::LaguerrePhi => {
            let y = x.sqrt();
            (y, (2.0 * y).sqrt() * v)
        }
        System::LaguerrePsi => {
            let y = x.sqrt();
            (y, SQRT_2 * y.powf(-alpha) * v)
        }
        System::Hermite => unreachable!(),
    }
}

/// Inverse of [`forward`].
fn backward(sys: System, alpha: f64, y: f64, v: f64) -> (f64, f64) {
    match sys {
        System::LaguerreScriptL => (y, v),
        System::LaguerreL => (y, y.powf(alpha / 2.0) * v),
        System::LaguerrePhi => (y * y, v / (2.0 * y).sqrt()),
        System::LaguerrePsi => (y * y, y.powf(alpha) * v / SQRT_2),
        System::Hermite => unreachable!(),
    }
}

/// Transfers sampled data between Laguerre-type systems through the pointwise
/// maps `W^α f(y) = y^{−α/2} f(y)`, `V f(y) = (2y)^{1/2} f(y²)`,
/// `Z^α f(y) = √2 y^{−α} f(y²)` and their inverses, so that the `k`-th basis
/// function of `from` is sent to the `k`-th basis function of `to`.
///
/// Grids are transformed exactly (`x ↦ √x` or `x ↦ x²`); no interpolation.
pub fn change_system(f: &GridFunction, from: ExpansionBasis, to: ExpansionBasis) -> Result<GridFunction> {
    if from.system == System::Hermite || to.system == System::Hermite {
        return Err(Error::Invalid("system changes are defined between Laguerre-type systems only".into()));
    }
    if from.alpha != to.alpha {
        return Err(domain(format!("system change needs equal alpha, got {} and {}", from.alpha, to.alpha)));
    }
    from.validate()?;
    let a = from.alpha;
    let (grid, values): (Vec<f64>, Vec<f64>) = f
        .grid
        .iter()
        .zip(&f.values)
        .map(|(&x, &v)| {
            let (x1, v1) = backward(from.system, a, x, v);
            forward(to.system, a, x1, v1)
        })
        .unzip();
    GridFunction::new(grid, values, to.measure_exponent())
}
