/// Hermite functions `h_0(x), …, h_{n−1}(x)`.
///
/// Normalized in `L²(ℝ)`, with sign convention `h_k = (−1)^{⌊k/2⌋} H_k e^{−x²/2} / (2^k k! √π)^{1/2}`
/// so that `h_{2k}(x) = l_k^{−1/2}(x²)` and `h_{2k+1}(x) = x l_k^{1/2}(x²)` hold exactly.
pub fn hermite_fns(n: usize, x: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(n);
    if n == 0 {
        return out;
    }
    let mut log_scale = -0.5 * x * x - 0.25 * std::f64::consts::PI.ln();
    let mut prev = 0.0;
    let mut cur = 1.0;
    out.push(emit(0, cur, log_scale));
    for k in 0..n - 1 {
        let kf = k as f64;
        let next = (2.0 / (kf + 1.0)).sqrt() * x * cur - (kf / (kf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
        if cur.abs() > 1e150 {
            prev /= 1e150;
            cur /= 1e150;
            log_scale += 150.0 * std::f64::consts::LN_10;
        }
        out.push(emit(k + 1, cur, log_scale));
    }
    out
}

fn emit(k: usize, v: f64, log_scale: f64) -> f64 {
    if v == 0.0 {
        return 0.0;
    }
    let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
    sign * v.signum() * (v.abs().ln() + log_scale).exp()
}

/// Hermite function `h_k(x)`.
pub fn hermite_fn(k: usize, x: f64) -> f64 {
    hermite_fns(k + 1, x)[k]
}
