use super::{analyze_fn, synthesize, CoefficientVector, ExpansionBasis, GridFunction, System};
use crate::error::{Error, Result};

/// `T_β^α`: re-labels Laguerre coefficients from `l^α` to `l^β`.
pub fn transplant_coeffs(cv: &CoefficientVector, alpha_to: f64) -> Result<CoefficientVector> {
    if cv.basis.system != System::LaguerreL {
        return Err(Error::Invalid("transplantation acts on the l_k system".into()));
    }
    Ok(CoefficientVector { basis: ExpansionBasis::laguerre(alpha_to)?, coeffs: cv.coeffs.clone() })
}

/// `T_β^α f = Σ_{k<n} a_{α,k}(f) l_k^β`, sampled on `grid`.
pub fn transplant(
    f: &dyn Fn(f64) -> f64,
    alpha_from: f64,
    alpha_to: f64,
    n: usize,
    quad_order: usize,
    grid: Vec<f64>,
) -> Result<GridFunction> {
    let cv = analyze_fn(f, ExpansionBasis::laguerre(alpha_from)?, n, quad_order)?;
    let t = transplant_coeffs(&cv, alpha_to)?;
    let values = grid.iter().map(|&x| synthesize(&t, x)).collect::<Result<Vec<_>>>()?;
    GridFunction::new(grid, values, alpha_to)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::laguerre_fn;

    #[test]
    fn equal_parameters_is_identity() {
        let f = |x: f64| laguerre_fn(2, 0.3, x).unwrap() - 0.5 * laguerre_fn(4, 0.3, x).unwrap();
        let grid = vec![0.1, 1.0, 5.0];
        let g = transplant(&f, 0.3, 0.3, 8, 30, grid.clone()).unwrap();
        for (x, v) in grid.iter().zip(&g.values) {
            assert!((f(*x) - v).abs() < 1e-13);
        }
    }

    #[test]
    fn sends_l_alpha_to_l_beta() {
        let g = transplant(&|x| laguerre_fn(3, -0.5, x).unwrap(), -0.5, 1.0, 6, 30, vec![0.5, 2.0]).unwrap();
        for (x, v) in g.grid.iter().zip(&g.values) {
            assert!((laguerre_fn(3, 1.0, *x).unwrap() - v).abs() < 1e-12);
        }
    }
}
