use lapmult_core::expansion::{apply_multiplier_values, CoefficientVector, ExpansionBasis};
use lapmult_core::ineq::{
    admissible_hermite, admissible_laguerre, lift_exponents, reduce_exponents, weighted_norm_fn, ExponentSet,
    PREDICATE_TOL,
};
use lapmult_core::kernel::{gen_translation_fn, i_integral};
use lapmult_core::specfun::{hermite_fn, laguerre_fn};
use lapmult_core::symbols::{symbol_values, SymbolSpec};
use lapmult_core::{analyze_fn, synthesize, System};
use proptest::prelude::*;

fn cfg(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

fn exponent_set() -> impl Strategy<Value = ExponentSet> {
    (1.05f64..6.0, 0.0f64..4.0, -1.5f64..1.5, -1.5f64..1.5, 0.01f64..3.0, -0.95f64..2.5).prop_map(
        |(p, dq, a, b, sigma, alpha)| ExponentSet { p, q: p + dq, a, b, sigma, alpha },
    )
}

proptest! {
    #![proptest_config(cfg(48))]

    #[test]
    fn analysis_is_linear(
        c1 in prop::collection::vec(-2.0f64..2.0, 8),
        c2 in prop::collection::vec(-2.0f64..2.0, 8),
        lam in -3.0f64..3.0,
        alpha in -0.9f64..2.0,
    ) {
        let b = ExpansionBasis::laguerre(alpha).unwrap();
        let f = CoefficientVector::new(b, c1.clone());
        let g = CoefficientVector::new(b, c2.clone());
        let h = |x: f64| lam * synthesize(&f, x).unwrap() + synthesize(&g, x).unwrap();
        let got = analyze_fn(&h, b, 8, 24).unwrap();
        for k in 0..8 {
            prop_assert!((got.coeffs[k] - (lam * c1[k] + c2[k])).abs() < 1e-10);
        }
    }

    #[test]
    fn multiplier_is_linear_and_abel_monotone(
        c in prop::collection::vec(-2.0f64..2.0, 12),
        lam in -3.0f64..3.0,
        r1 in 0.05f64..1.0,
        r2 in 0.05f64..1.0,
        sigma in 0.1f64..0.9,
    ) {
        let b = ExpansionBasis::laguerre(0.5).unwrap();
        let m = symbol_values(&SymbolSpec::frac_integral(sigma, 1.0), 12).unwrap();
        let cv = CoefficientVector::new(b, c.clone());
        let scaled = CoefficientVector::new(b, c.iter().map(|v| lam * v).collect());
        let a = apply_multiplier_values(&scaled, &m, r1).unwrap();
        let bb = apply_multiplier_values(&cv, &m, r1).unwrap();
        for k in 0..12 {
            prop_assert!((a.coeffs[k] - lam * bb.coeffs[k]).abs() <= 1e-14 * (1.0 + a.coeffs[k].abs()));
        }
        let (lo, hi) = if r1 < r2 { (r1, r2) } else { (r2, r1) };
        let n_lo = apply_multiplier_values(&cv, &m, lo).unwrap().norm2();
        let n_hi = apply_multiplier_values(&cv, &m, hi).unwrap().norm2();
        prop_assert!(n_lo <= n_hi * (1.0 + 1e-14));
    }

    #[test]
    fn hermite_laguerre_identities(k in 0usize..=20, x in 0.0f64..8.0) {
        let even = hermite_fn(2 * k, x) - laguerre_fn(k, -0.5, x * x).unwrap();
        let odd = hermite_fn(2 * k + 1, x) - x * laguerre_fn(k, 0.5, x * x).unwrap();
        prop_assert!(even.abs() <= 1e-10 && odd.abs() <= 1e-10);
    }

    #[test]
    fn laguerre_predicate_implies_displayed_inequalities(e in exponent_set()) {
        if admissible_laguerre(&e) {
            let g = 1.0 / e.q - 1.0 / e.p;
            let pc = e.p / (e.p - 1.0);
            prop_assert!(e.a < (e.alpha + 1.0) / pc);
            prop_assert!(e.b < (e.alpha + 1.0) / e.q);
            prop_assert!(g * (e.alpha + 0.5) <= e.a + e.b + PREDICATE_TOL);
            prop_assert!(e.a + e.b <= g * (e.alpha + 1.0) + e.sigma + PREDICATE_TOL);
            prop_assert!(e.sigma > 0.0 && e.sigma < e.alpha + 1.0);
        }
    }

    #[test]
    fn hermite_predicate_implies_displayed_inequalities(e in exponent_set()) {
        if admissible_hermite(&e) {
            let pc = e.p / (e.p - 1.0);
            prop_assert!(e.a < 1.0 / pc && e.b < 1.0 / e.q);
            prop_assert!(e.a + e.b >= -PREDICATE_TOL);
            prop_assert!(e.a + e.b <= 1.0 / e.q - 1.0 / e.p + 2.0 * e.sigma + PREDICATE_TOL);
            prop_assert!(e.sigma < 0.5);
        }
    }

    #[test]
    fn reductions_invert(e in exponent_set()) {
        for sys in [System::LaguerreScriptL, System::LaguerrePhi, System::LaguerrePsi] {
            let back = lift_exponents(&reduce_exponents(&e, sys), sys);
            prop_assert!((back.a - e.a).abs() < 1e-13 && (back.b - e.b).abs() < 1e-13);
        }
    }

    #[test]
    fn symbols_are_completely_monotone(sigma in 0.05f64..2.0, c in 0.2f64..3.0, tau in 0.05f64..2.0) {
        for sym in [SymbolSpec::frac_integral(sigma, c), SymbolSpec::heat(tau, c)] {
            let m = symbol_values(&sym, 12).unwrap();
            let mut d = m.clone();
            for j in 1..=4 {
                d = d.windows(2).map(|w| w[1] - w[0]).collect();
                let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                prop_assert!(d.iter().all(|v| sign * v >= -1e-12 * m[0]), "order {j}: {d:?}");
            }
        }
    }

    #[test]
    fn w_norm_identity(p in 1.2f64..4.0, rho in -0.5f64..2.0, alpha in 0.0f64..2.0) {
        // ‖x^{−α/2} f‖_{L^p(x^{ρ+α})} = ‖f‖_{L^p(x^δ)}, δ = ρ − α(p/2 − 1).
        let delta = rho - alpha * (p / 2.0 - 1.0);
        prop_assume!(delta > -0.9);
        let f = |x: f64| (1.0 + x) * (-x / 2.0).exp();
        let lhs = weighted_norm_fn(&|x| x.powf(-alpha / 2.0) * f(x), p, rho + alpha, -alpha / 2.0, &[]).unwrap();
        let rhs = weighted_norm_fn(&f, p, delta, 0.0, &[]).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-9 * rhs, "{lhs} {rhs}");
    }
}

proptest! {
    #![proptest_config(cfg(20))]

    #[test]
    fn i_integral_inversion_symmetry(gamma in 0.2f64..6.0, k in -0.8f64..3.0, r in 0.05f64..0.9) {
        let a = i_integral(gamma, k, r).unwrap().value;
        let b = r.powf(-gamma) * i_integral(gamma, k, 1.0 / r).unwrap().value;
        prop_assert!((a - b).abs() <= 1e-8 * a.abs());
    }

    #[test]
    fn power_kernel_translation_is_homogeneous(x in 0.2f64..3.0, y in 0.2f64..3.0, lam in 0.3f64..3.0) {
        // Dilation invariance behind the multiplicative-group convolution.
        let (alpha, sigma) = (1.0, 0.8);
        let e = 2.0 * (sigma - alpha - 1.0);
        prop_assume!((x - y).abs() > 0.05);
        let k = |z: f64| z.powf(e);
        let base = gen_translation_fn(&k, alpha, x, y).unwrap();
        let dilated = gen_translation_fn(&k, alpha, lam * x, lam * y).unwrap();
        prop_assert!((dilated - lam.powf(e) * base).abs() <= 1e-8 * dilated.abs());
    }
}

#[test]
fn sigma_monotonicity_on_lattice() {
    for alpha in [-0.5, 0.0, 1.0] {
        for p in [1.5, 2.0, 3.0] {
            for dq in [0.0, 1.0, 4.0] {
                for ia in -6..=6 {
                    for ib in -6..=6 {
                        let (a, b) = (ia as f64 * 0.15, ib as f64 * 0.15);
                        let mut prev = false;
                        for is in 1..20 {
                            let sigma = (alpha + 1.0) * is as f64 / 20.0;
                            let e = ExponentSet { p, q: p + dq, a, b, sigma, alpha };
                            let now = admissible_laguerre(&e);
                            assert!(!prev || now, "region shrank at {e:?}");
                            prev = now;
                        }
                    }
                }
            }
        }
    }
}
