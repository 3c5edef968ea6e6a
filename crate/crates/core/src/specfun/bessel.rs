use super::ln_gamma;
use crate::error::{domain, Result};

const EPS: f64 = 1e-16;
const FPMIN: f64 = 1e-300;
const MAXIT: usize = 100_000;

/// Normalized Bessel function `𝒥_β(x) = Γ(β+1) J_β(x) / (x/2)^β`, `β ≥ −1/2`.
///
/// Power series for `x ≤ 2·max(1, β)`, Steed's continued-fraction method
/// above.
pub fn normalized_bessel(beta: f64, x: f64) -> Result<f64> {
    if !(beta >= -0.5) {
        return Err(domain(format!("normalized Bessel order must be >= -1/2, got {beta}")));
    }
    if !(x >= 0.0) || !x.is_finite() {
        return Err(domain(format!("normalized Bessel argument must be >= 0, got {x}")));
    }
    if x <= 2.0 * beta.max(1.0) {
        return Ok(series(beta, x));
    }
    let j = steed_j(beta, x);
    Ok(j * (ln_gamma(beta + 1.0) - beta * (0.5 * x).ln()).exp())
}

/// Bessel function of the first kind `J_ν(x)` for `ν ≥ −1/2`, `x ≥ 0`.
pub fn bessel_j(nu: f64, x: f64) -> Result<f64> {
    if !(nu >= -0.5) {
        return Err(domain(format!("Bessel order must be >= -1/2, got {nu}")));
    }
    if !(x >= 0.0) || !x.is_finite() {
        return Err(domain(format!("Bessel argument must be >= 0, got {x}")));
    }
    if x <= 2.0 * nu.max(1.0) {
        if x == 0.0 {
            return Ok(if nu == 0.0 { 1.0 } else { 0.0 });
        }
        return Ok(series(nu, x) * (nu * (0.5 * x).ln() - ln_gamma(nu + 1.0)).exp());
    }
    Ok(steed_j(nu, x))
}

fn series(beta: f64, x: f64) -> f64 {
    let q = -0.25 * x * x;
    let mut term = 1.0;
    let mut acc = 1.0;
    for m in 0..500 {
        let mf = m as f64;
        term *= q / ((mf + 1.0) * (mf + 1.0 + beta));
        acc += term;
        if term.abs() <= 1e-17 * acc.abs().max(1e-300) {
            break;
        }
    }
    acc
}

/// `J_ν(x)` for `x ≥ 2` via CF1 (ratio) and CF2 (Steed's complex fraction).
fn steed_j(nu: f64, x: f64) -> f64 {
    let nl = ((nu - x + 1.5).floor()).max(0.0) as usize;
    let xmu = nu - nl as f64;
    let xmu2 = xmu * xmu;
    let xi = 1.0 / x;
    let xi2 = 2.0 * xi;
    let w = xi2 / std::f64::consts::PI;

    let mut isign = 1.0;
    let mut h = nu * xi;
    if h.abs() < FPMIN {
        h = FPMIN;
    }
    let mut b = xi2 * nu;
    let mut d = 0.0;
    let mut c = h;
    for _ in 0..MAXIT {
        b += xi2;
        d = b - d;
        if d.abs() < FPMIN {
            d = FPMIN;
        }
        c = b - 1.0 / c;
        if c.abs() < FPMIN {
            c = FPMIN;
        }
        d = 1.0 / d;
        let del = c * d;
        h *= del;
        if d < 0.0 {
            isign = -isign;
        }
        if (del - 1.0).abs() < EPS {
            break;
        }
    }

    let mut rjl = isign * FPMIN;
    let mut rjpl = h * rjl;
    let rjl1 = rjl;
    let mut fact = nu * xi;
    for _ in 0..nl {
        let rjtemp = fact * rjl + rjpl;
        fact -= xi;
        rjpl = fact * rjtemp - rjl;
        rjl = rjtemp;
    }
    if rjl == 0.0 {
        rjl = EPS;
    }
    let f = rjpl / rjl;

    let mut a = 0.25 - xmu2;
    let mut p = -0.5 * xi;
    let mut q = 1.0;
    let br = 2.0 * x;
    let mut bi = 2.0;
    let mut fct = a * xi / (p * p + q * q);
    let mut cr = br + q * fct;
    let mut ci = bi + p * fct;
    let mut den = br * br + bi * bi;
    let mut dr = br / den;
    let mut di = -bi / den;
    let mut dlr = cr * dr - ci * di;
    let mut dli = cr * di + ci * dr;
    let mut temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    for i in 2..MAXIT {
        a += 2.0 * (i as f64 - 1.0);
        bi += 2.0;
        dr = a * dr + br;
        di = a * di + bi;
        if dr.abs() + di.abs() < FPMIN {
            dr = FPMIN;
        }
        fct = a / (cr * cr + ci * ci);
        cr = br + cr * fct;
        ci = bi - ci * fct;
        if cr.abs() + ci.abs() < FPMIN {
            cr = FPMIN;
        }
        den = dr * dr + di * di;
        dr /= den;
        di /= -den;
        dlr = cr * dr - ci * di;
        dli = cr * di + ci * dr;
        temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        if (dlr - 1.0).abs() + dli.abs() < EPS {
            break;
        }
    }
    let gam = (p - f) / q;
    let rjmu = (w / ((p - f) * gam + q)).sqrt().copysign(rjl);
    rjl1 * (rjmu / rjl)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn value_at_zero() {
        for &b in &[-0.5, 0.0, 0.5, 3.0] {
            assert_eq!(normalized_bessel(b, 0.0).unwrap(), 1.0);
        }
    }

    #[test]
    fn half_integer_closed_forms() {
        let mut worst: f64 = 0.0;
        for i in 1..400 {
            let x = i as f64 * 0.37;
            let j32 = 3.0 * (x.sin() / x.powi(3) - x.cos() / x.powi(2));
            for d in [
                normalized_bessel(0.5, x).unwrap() - x.sin() / x,
                normalized_bessel(-0.5, x).unwrap() - x.cos(),
                normalized_bessel(1.5, x).unwrap() - j32,
            ] {
                worst = worst.max(d.abs());
            }
        }
        assert!(worst < 5e-13, "{worst}");
    }

    #[test]
    fn integer_order_reference_values() {
        // Tabulated J_0, J_1 values.
        assert_relative_eq!(bessel_j(0.0, 10.0).unwrap(), -0.245_935_764_451_348_3, max_relative = 1e-13);
        assert_relative_eq!(bessel_j(1.0, 10.0).unwrap(), 0.043_472_746_168_861_44, max_relative = 1e-11);
        assert_relative_eq!(bessel_j(0.0, 1.0).unwrap(), 0.765_197_686_557_966_6, max_relative = 1e-14);
        assert_relative_eq!(bessel_j(2.0, 3.0).unwrap(), 0.486_091_260_585_891_1, max_relative = 1e-13);
    }

    #[test]
    fn branches_agree_at_switch() {
        for &b in &[-0.5, 0.0, 0.25, 1.0, 2.7] {
            let xs = 2.0 * f64::max(1.0, b);
            let lo = normalized_bessel(b, xs).unwrap();
            let hi = normalized_bessel(b, xs * (1.0 + 1e-12)).unwrap();
            assert!((lo - hi).abs() < 1e-11, "beta={b}: {lo} vs {hi}");
        }
    }

    #[test]
    fn bounded_by_one() {
        for &b in &[-0.5, -0.25, 0.0, 0.5, 1.0, 2.3] {
            for i in 0..=4000 {
                let x = i as f64 * 0.05;
                assert!(normalized_bessel(b, x).unwrap().abs() <= 1.0 + 1e-12);
            }
        }
    }

    #[test]
    fn rejects_low_order() {
        assert!(normalized_bessel(-0.6, 1.0).is_err());
    }
}
