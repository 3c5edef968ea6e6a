use super::{check_alpha, check_x};
use crate::error::{domain, Result};

/// Laguerre generating function `Z_{α,x}(w) = (1−w)^{−α−1} e^{−xw/(1−w)}`.
///
/// Extended by `Z_{α,x}(1) = 0` for `x > 0`; `w = 1, x = 0` is a pole.
pub fn gen_fn_z(alpha: f64, x: f64, w: f64) -> Result<f64> {
    check_alpha(alpha)?;
    check_x(x)?;
    if !(0.0..=1.0).contains(&w) {
        return Err(domain(format!("w must lie in [0, 1], got {w}")));
    }
    gen_fn_z_complement(alpha, x, w, 1.0 - w)
}

/// `Z_{α,x}(w)` with `1 − w` supplied separately, for callers that know it
/// to full relative precision (e.g. `w = ρe^{−t}` near 1).
pub fn gen_fn_z_complement(alpha: f64, x: f64, w: f64, one_minus_w: f64) -> Result<f64> {
    if one_minus_w <= 0.0 {
        if x > 0.0 {
            return Ok(0.0);
        }
        return Err(domain("Z_{alpha,0} has a pole at w = 1"));
    }
    Ok((-(alpha + 1.0) * one_minus_w.ln() - x * w / one_minus_w).exp())
}

/// `∂_w Z_{α,x}(w) = (α+1) Z_{α+1,x}(w) − x Z_{α+2,x}(w)`.
pub fn gen_fn_z_prime(alpha: f64, x: f64, w: f64) -> Result<f64> {
    Ok((alpha + 1.0) * gen_fn_z(alpha + 1.0, x, w)? - x * gen_fn_z(alpha + 2.0, x, w)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::laguerre_poly;
    use approx::assert_relative_eq;

    #[test]
    fn trivial_values() {
        assert_eq!(gen_fn_z(0.3, 2.0, 0.0).unwrap(), 1.0);
        assert_eq!(gen_fn_z(1.0, 2.0, 1.0).unwrap(), 0.0);
        assert!(gen_fn_z(1.0, 0.0, 1.0).is_err());
        assert!(gen_fn_z(1.0, 2.0, 1.0 - 1e-9).unwrap() < 1e-300);
        assert_relative_eq!(gen_fn_z_prime(0.4, 1.5, 0.0).unwrap(), 0.4 + 1.0 - 1.5, epsilon = 1e-15);
        assert_relative_eq!(gen_fn_z_prime(0.0, 0.0, 0.5).unwrap(), 4.0, epsilon = 1e-14);
    }

    #[test]
    fn derivative_matches_finite_differences() {
        for &a in &[0.0, 0.5, 2.0] {
            for &x in &[0.1, 1.0, 5.0] {
                for &w in &[0.1, 0.5, 0.8] {
                    let h = 1e-5;
                    let fd = (gen_fn_z(a, x, w + h).unwrap() - gen_fn_z(a, x, w - h).unwrap()) / (2.0 * h);
                    let d = gen_fn_z_prime(a, x, w).unwrap();
                    assert!((fd - d).abs() <= 1e-6 * d.abs().max(1.0), "{a} {x} {w}: {fd} vs {d}");
                }
            }
        }
    }

    #[test]
    fn partial_sums_converge() {
        let (a, x, w): (f64, f64, f64) = (0.5, 1.0, 0.5);
        let s: f64 = (0..200).map(|k| laguerre_poly(k, a, x).unwrap() * w.powi(k as i32)).sum();
        assert_relative_eq!(s, gen_fn_z(a, x, w).unwrap(), max_relative = 1e-13);
    }
}
