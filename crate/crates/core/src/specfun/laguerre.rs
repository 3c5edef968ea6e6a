use super::{check_alpha, check_x, ln_gamma};
use crate::error::Result;

/// Laguerre polynomial `L_k^α(x)` by upward three-term recurrence.
///
/// Tested for `x ≥ 0`, `k ≤ 500`.
pub fn laguerre_poly(k: usize, alpha: f64, x: f64) -> Result<f64> {
    check_alpha(alpha)?;
    check_x(x)?;
    let mut prev = 1.0;
    if k == 0 {
        return Ok(prev);
    }
    let mut cur = alpha + 1.0 - x;
    for j in 1..k {
        let jf = j as f64;
        let next = ((2.0 * jf + 1.0 + alpha - x) * cur - (jf + alpha) * prev) / (jf + 1.0);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Values of the orthonormal polynomials `p_k(x) = (k!/Γ(k+α+1))^{1/2} L_k^α(x)`
/// for `k < n`, each returned as `(sign, ln|p_k|)`.
///
/// The recurrence is run on rescaled quantities so that neither large `k`
/// nor large `x` overflows.
pub fn laguerre_log_normalized(n: usize, alpha: f64, x: f64) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    if n == 0 {
        return out;
    }
    let mut log_scale = -0.5 * ln_gamma(alpha + 1.0);
    let mut prev = 0.0;
    let mut cur = 1.0;
    push(&mut out, cur, log_scale);
    for k in 0..n.saturating_sub(1) {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + alpha - x) * cur - (kf * (kf + alpha)).sqrt() * prev)
            / ((kf + 1.0) * (kf + 1.0 + alpha)).sqrt();
        prev = cur;
        cur = next;
        if cur.abs() > 1e150 {
            prev /= 1e150;
            cur /= 1e150;
            log_scale += 150.0 * std::f64::consts::LN_10;
        }
        push(&mut out, cur, log_scale);
    }
    out
}

fn push(out: &mut Vec<(f64, f64)>, v: f64, log_scale: f64) {
    if v == 0.0 {
        out.push((0.0, f64::NEG_INFINITY));
    } else {
        out.push((v.signum(), v.abs().ln() + log_scale));
    }
}

/// Laguerre function `l_k^α(x) = (k!/Γ(k+α+1))^{1/2} e^{−x/2} L_k^α(x)`.
pub fn laguerre_fn(k: usize, alpha: f64, x: f64) -> Result<f64> {
    check_alpha(alpha)?;
    check_x(x)?;
    let (s, l) = laguerre_log_normalized(k + 1, alpha, x)[k];
    Ok(s * (l - 0.5 * x).exp())
}

/// `l_0^α(x), …, l_{n−1}^α(x)` in one recurrence pass.
pub fn laguerre_fns(n: usize, alpha: f64, x: f64) -> Result<Vec<f64>> {
    check_alpha(alpha)?;
    check_x(x)?;
    Ok(laguerre_log_normalized(n, alpha, x)
        .into_iter()
        .map(|(s, l)| s * (l - 0.5 * x).exp())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    /// Explicit finite series `Σ_j (−1)^j C(k+α, k−j) x^j / j!`, with the
    /// coefficients built by exact ratios.
    fn series_oracle(k: usize, alpha: f64, x: f64) -> f64 {
        let mut term: f64 = (1..=k).map(|i| (alpha + i as f64) / i as f64).product();
        let mut acc = term;
        for j in 1..=k {
            let jf = j as f64;
            term *= -x * (k as f64 - jf + 1.0) / (jf * (alpha + jf));
            acc += term;
        }
        acc
    }

    #[test]
    fn closed_forms() {
        assert_eq!(laguerre_poly(0, 0.7, 3.2).unwrap(), 1.0);
        assert_eq!(laguerre_poly(1, 0.5, 2.0).unwrap(), -0.5);
        assert_relative_eq!(laguerre_poly(2, 0.0, 1.0).unwrap(), -0.5, epsilon = 1e-15);
    }

    #[test]
    fn recurrence_matches_series() {
        for &alpha in &[-0.5, 0.0, 1.3] {
            for &x in &[0.1, 1.0, 4.0] {
                for k in 0..12 {
                    let r = laguerre_poly(k, alpha, x).unwrap();
                    let o = series_oracle(k, alpha, x); assert!((r - o).abs() <= 1e-10 * o.abs().max(1.0), "{k} {alpha} {x}: {r} {o}");
                }
            }
        }
    }

    #[test]
    fn function_low_order() {
        assert_relative_eq!(laguerre_fn(0, 0.0, 0.0).unwrap(), 1.0, max_relative = 1e-15);
        let a: f64 = 1.7;
        let x: f64 = 2.5;
        let want = (-x / 2.0).exp() / statrs::function::gamma::gamma(a + 1.0).sqrt();
        assert_relative_eq!(laguerre_fn(0, a, x).unwrap(), want, max_relative = 1e-14);
    }

    #[test]
    fn normalized_matches_poly() {
        let alpha = 0.5;
        let x = 3.0;
        for k in 0..30 {
            let lf = laguerre_fn(k, alpha, x).unwrap();
            let want = ((ln_gamma(k as f64 + 1.0) - ln_gamma(k as f64 + alpha + 1.0)) / 2.0 - x / 2.0).exp()
                * laguerre_poly(k, alpha, x).unwrap();
            assert_relative_eq!(lf, want, epsilon = 1e-13, max_relative = 1e-11);
        }
    }

    #[test]
    fn no_overflow_for_large_k_and_x() {
        for &x in &[0.0, 1.0, 50.0, 700.0, 1900.0] {
            let v = laguerre_fns(501, 2.3, x).unwrap();
            assert!(v.iter().all(|t| t.is_finite()), "x = {x}");
        }
    }

    #[test]
    fn rejects_domain() {
        assert!(laguerre_poly(1, -1.0, 1.0).is_err());
        assert!(laguerre_fn(1, 0.0, -0.1).is_err());
    }
}
