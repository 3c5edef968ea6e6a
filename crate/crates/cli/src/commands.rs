use crate::config::{validate_iint, ExperimentConfig};
use crate::output::{num, Csv};
use anyhow::anyhow;
use lapmult_core::expansion::{apply_multiplier, CoefficientVector};
use lapmult_core::ineq::{run_experiment, TestFamily};
use lapmult_core::kernel::{i_integral, verify_i_regimes, verify_kernel_bound, KernelProfile};
use lapmult_core::quad::{integrate_panels, Tolerance};
use lapmult_core::specfun::{hermite_fn, hermite_fns, laguerre_fn, laguerre_fns, ln_gamma};
use lapmult_core::symbols::{check_boundedness, hermite_split, symbol_value, symbol_values, verify_h1, verify_h2};
use lapmult_core::{analyze_fn, synthesize, Error, ExpansionBasis, System};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

/// Why a command did not produce a report.
#[derive(Debug)]
pub enum Failure {
    /// Bad input: exit code 2.
    Config(anyhow::Error),
    /// A computation failed: exit code 1.
    Compute(anyhow::Error),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Config(_) => 2,
            Failure::Compute(_) => 1,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Config(e) => write!(f, "config error: {e:#}"),
            Failure::Compute(e) => write!(f, "computation failed: {e:#}"),
        }
    }
}

/// Domain errors come from inputs; everything else is a failed computation.
impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain(_) | Error::Invalid(_) | Error::QuadratureOrder { .. } => Failure::Config(e.into()),
            _ => Failure::Compute(e.into()),
        }
    }
}

fn config_err(e: anyhow::Error) -> Failure {
    Failure::Config(e)
}

/// Result of one subcommand: a JSON summary, an optional table, and whether
/// every check passed.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: &'static str,
    pub summary: Value,
    pub csv: Option<Csv>,
    pub pass: bool,
}

impl Report {
    pub fn exit_code(&self) -> u8 {
        if self.pass {
            0
        } else {
            1
        }
    }
}

type Outcome = Result<Report, Failure>;

/// `(H1)`, `(H2)` and `sup_k |m_k|` for the configured symbol.
pub fn symbol_check(cfg: &ExperimentConfig) -> Outcome {
    let sym = &cfg.symbol;
    let (h1_json, h1_ok) = match verify_h1(sym) {
        Ok(e) => {
            let ok = e.value.is_finite() && e.converged;
            (json!({"total_variation": e.value, "error": e.error, "converged": e.converged}), ok)
        }
        Err(Error::Divergent(msg)) => (json!({"total_variation": null, "divergent": msg}), false),
        Err(e) => return Err(e.into()),
    };
    let sigma = cfg.exponents.map(|e| e.sigma).or(sym.sigma_hint);
    let mut csv = Csv::new(&["t", "psi"]);
    // A density that is not integrable gives no symbol at all, so the later
    // checks are reported as failed rather than aborting the command.
    let (h2_json, h2_ok) = match verify_h2(sym, sym.delta) {
        Ok(fit) => {
            for &(t, p) in &fit.samples {
                csv.push(vec![num(t), num(p)]);
            }
            let ok = match sigma {
                Some(s) => fit.holds_for(s),
                None => fit.sigma_fit > 0.0,
            };
            let fit_sigma = if fit.sigma_fit.is_finite() { json!(fit.sigma_fit) } else { json!("inf") };
            (json!({"sigma_fit": fit_sigma, "c_fit": fit.c_fit, "delta": sym.delta, "sigma_required": sigma}), ok)
        }
        Err(Error::Divergent(msg)) => (json!({"sigma_fit": null, "divergent": msg, "sigma_required": sigma}), false),
        Err(e) => return Err(e.into()),
    };
    let (sup, bounded) = match check_boundedness(sym, cfg.truncation) {
        Ok(v) => (json!(v), v.is_finite()),
        Err(Error::Divergent(msg)) => (json!({"divergent": msg}), false),
        Err(e) => return Err(e.into()),
    };
    let summary = json!({
        "h1": h1_json,
        "h1_pass": h1_ok,
        "h2": h2_json,
        "h2_pass": h2_ok,
        "boundedness": {"k_max": cfg.truncation, "sup_abs_m": sup},
        "bounded_pass": bounded,
    });
    Ok(Report { command: "symbol-check", summary, csv: Some(csv), pass: h1_ok && h2_ok && bounded })
}

/// `x^{α+1−σ}|g_ρ(x)|` over the configured grid and `rho_list`.
pub fn kernel_bound(cfg: &ExperimentConfig) -> Outcome {
    let sigma = cfg
        .exponents
        .map(|e| e.sigma)
        .or(cfg.symbol.sigma_hint)
        .ok_or_else(|| config_err(anyhow!("kernel-bound needs exponents.sigma or symbol.sigma_hint")))?;
    let profile = KernelProfile::new(cfg.basis.alpha, sigma, cfg.rho_list[0], cfg.symbol.clone())
        .map_err(|e| config_err(e.into()))?;
    let rep = verify_kernel_bound(&profile, &cfg.grid.nodes(), &cfg.rho_list)?;
    let mut csv = Csv::new(&["x", "rho", "g_rho", "weighted"]);
    for r in &rep.rows {
        csv.push(vec![num(r.x), num(r.rho), num(r.g_rho), num(r.weighted_value)]);
    }
    let summary = json!({
        "alpha": profile.alpha,
        "sigma": sigma,
        "per_rho_sup": rep.per_rho_sup,
        "sup": rep.sup,
        "spread": rep.spread,
        "pass": rep.pass,
    });
    Ok(Report { command: "kernel-bound", summary, csv: Some(csv), pass: rep.pass })
}

/// Growth regime of `I_{γ,k}(r)` as `r → 1`, with an `r = 0` value and an
/// inversion-symmetry check.
pub fn iint_scan(gamma: f64, k: f64) -> Outcome {
    validate_iint(gamma, k).map_err(config_err)?;
    let rep = verify_i_regimes(gamma, k)?;
    // I(0) = B(1/2, k+1).
    let at_zero = i_integral(gamma, k, 0.0)?.value;
    let beta = (ln_gamma(0.5) + ln_gamma(k + 1.0) - ln_gamma(k + 1.5)).exp();
    let zero_err = (at_zero - beta).abs() / beta;
    let (r, inv) = (0.5, 2.0);
    let lhs = i_integral(gamma, k, inv)?.value;
    let rhs = inv.powf(-gamma) * i_integral(gamma, k, r)?.value;
    let sym_err = (lhs - rhs).abs() / rhs.abs();
    let mut csv = Csv::new(&["r", "i_value", "local_exponent"]);
    csv.push(vec![num(0.0), num(at_zero), "NaN".into()]);
    for row in &rep.rows {
        csv.push(vec![num(row.r), num(row.i_value), num(row.fitted_exponent)]);
    }
    let sanity = zero_err <= 1e-10 && sym_err <= 1e-8;
    let summary = json!({
        "gamma": gamma,
        "k": k,
        "expected": rep.expected,
        "observed": rep.observed,
        "max_ratio": rep.max_ratio,
        "log_r_squared": rep.log_r_squared,
        "log_slope": rep.log_slope,
        "power_exponent": rep.power_exponent,
        "regime_pass": rep.pass,
        "r0": {"value": at_zero, "expected": beta, "rel_error": zero_err},
        "symmetry": {"r": inv, "rel_error": sym_err},
        "pass": rep.pass && sanity,
    });
    Ok(Report { command: "iint-scan", summary, csv: Some(csv), pass: rep.pass && sanity })
}

/// Norm-ratio experiment over the seeded test family.
pub fn norm_experiment(cfg: &ExperimentConfig, seed: u64) -> Outcome {
    let e = cfg.exponent_set().map_err(config_err)?;
    let basis = cfg.basis().map_err(config_err)?;
    let fam = TestFamily::seeded(seed);
    let rep = run_experiment(&cfg.symbol, basis, &e, &fam, cfg.rho, cfg.truncation)?;
    let mut csv = Csv::new(&["member", "p_norm", "q_norm", "ratio"]);
    for r in &rep.rows {
        csv.push(vec![r.member.clone(), num(r.p_norm), num(r.q_norm), num(r.ratio)]);
    }
    let failed: Vec<Value> = rep
        .rows
        .iter()
        .filter_map(|r| r.error.as_ref().map(|m| json!({"member": r.member, "error": m})))
        .collect();
    let pass = failed.is_empty();
    let summary = json!({
        "basis": rep.basis,
        "exponents": rep.exponents,
        "rho": rep.rho,
        "truncation": rep.truncation,
        "seed": seed,
        "admissible": rep.admissible,
        "reduced_exponents": rep.verdict.reduced,
        "literal_admissible": rep.verdict.literal,
        "hypotheses": rep.hypotheses,
        "informative_only": rep.informative_only,
        "max_ratio": rep.max_ratio,
        "failed_members": failed,
    });
    Ok(Report { command: "norm-experiment", summary, csv: Some(csv), pass })
}

const PARITY_TOL: f64 = 1e-10;
const SPLIT_TOL: f64 = 1e-10;
const PATH_TOL: f64 = 1e-9;

fn worst(items: impl Iterator<Item = (f64, Value)>) -> (f64, Value) {
    items.fold((0.0, Value::Null), |acc, it| if it.0 > acc.0 { it } else { acc })
}

/// `∫_ℝ f h_k`, computed directly on the line for `k < n`.
fn hermite_coeffs_direct(f: &(dyn Fn(f64) -> f64 + Sync), n: usize) -> Vec<f64> {
    let breaks: Vec<f64> = (-24..=24).map(|i| i as f64 * 0.5).collect();
    let tol = Tolerance { rel: 1e-13, abs: 1e-15, ..Tolerance::default() };
    (0..n)
        .into_par_iter()
        .map(|k| integrate_panels(&|x: f64| f(x) * hermite_fn(k, x), &breaks, tol).value)
        .collect()
}

/// Parity identities, the split symbols, and the Hermite operator computed
/// on the line against its even/odd Laguerre reduction.
pub fn hermite_verify(cfg: &ExperimentConfig, seed: u64) -> Outcome {
    let xs: Vec<f64> = (0..=160).map(|i| i as f64 * 0.05).collect();
    let (parity_err, parity_at) = worst((0..=20usize).flat_map(|k| {
        xs.iter().map(move |&x| {
            let e = (hermite_fn(2 * k, x) - laguerre_fn(k, -0.5, x * x).unwrap()).abs();
            let o = (hermite_fn(2 * k + 1, x) - x * laguerre_fn(k, 0.5, x * x).unwrap()).abs();
            let (err, which) = if e >= o { (e, "even") } else { (o, "odd") };
            (err, json!({"k": k, "x": x, "identity": which}))
        })
    }));

    let sym = &cfg.symbol;
    let (s0, s1) = hermite_split(sym);
    let kmax = 40usize;
    let mut split_rows = Vec::with_capacity(kmax + 1);
    for k in 0..=kmax {
        let kf = k as f64;
        let (m_even, m_odd) = (symbol_value(sym, 2.0 * kf)?, symbol_value(sym, 2.0 * kf + 1.0)?);
        let (l0, l1) = (symbol_value(&s0, kf)?, symbol_value(&s1, kf)?);
        let rel = |a: f64, b: f64| if a == b { 0.0 } else { (a - b).abs() / b.abs().max(f64::MIN_POSITIVE) };
        split_rows.push((k, rel(l0, m_even), rel(l1, m_odd)));
    }
    let (split_err, split_at) = worst(
        split_rows
            .iter()
            .map(|&(k, e, o)| if e >= o { (e, json!({"k": k, "part": "even"})) } else { (o, json!({"k": k, "part": "odd"})) }),
    );

    let n = cfg.truncation;
    let rho = cfg.rho;
    let m = symbol_values(sym, n)?;
    let m0 = symbol_values(&s0, n.div_ceil(2))?;
    let m1 = symbol_values(&s1, n / 2)?;
    let fam = TestFamily::seeded(seed).up_to_degree(6);
    let grid: Vec<f64> = (-40..=40).map(|i| i as f64 * 0.1).collect();
    let member_errs: Vec<(f64, Value)> = fam
        .members
        .iter()
        .map(|mem| -> Result<(f64, Value), Failure> {
            let f = |x: f64| mem.eval_in(System::Hermite, 0.0, x);
            let c = hermite_coeffs_direct(&f, n);
            let herm: Vec<f64> = c.iter().enumerate().map(|(k, ck)| ck * m[k] * rho.powi((k / 2) as i32)).collect();
            let q = n + 24;
            let even = analyze_fn(&|u| 0.5 * (f(u.sqrt()) + f(-u.sqrt())), ExpansionBasis::laguerre(-0.5)?, m0.len(), q)?;
            let odd = analyze_fn(
                &|u| {
                    let y = u.sqrt();
                    0.5 * (f(y) - f(-y)) / y
                },
                ExpansionBasis::laguerre(0.5)?,
                m1.len().max(1),
                q,
            )?;
            let mut err: f64 = 0.0;
            let mut scale: f64 = 1.0;
            let mut at = 0.0;
            for &x in &grid {
                let h = hermite_fns(n, x);
                let via_h: f64 = herm.iter().zip(&h).map(|(a, b)| a * b).sum();
                let le = laguerre_fns(m0.len(), -0.5, x * x)?;
                let lo = laguerre_fns(m1.len(), 0.5, x * x)?;
                let ve: f64 = (0..m0.len()).map(|j| even.coeffs[j] * m0[j] * rho.powi(j as i32) * le[j]).sum();
                let vo: f64 = (0..m1.len()).map(|j| odd.coeffs[j] * m1[j] * rho.powi(j as i32) * lo[j]).sum();
                let d = (via_h - (ve + x * vo)).abs();
                scale = scale.max(via_h.abs());
                if d > err {
                    err = d;
                    at = x;
                }
            }
            let rel = err / scale;
            Ok((rel, json!({"member": mem.name, "x": at})))
        })
        .collect::<Result<_, _>>()?;
    let (path_err, path_at) = worst(member_errs.into_iter());

    let mut csv = Csv::new(&["k", "split_even_rel_error", "split_odd_rel_error"]);
    for &(k, e, o) in &split_rows {
        csv.push(vec![k.to_string(), num(e), num(o)]);
    }
    let checks = [
        ("parity", parity_err, PARITY_TOL, parity_at),
        ("split", split_err, SPLIT_TOL, split_at),
        ("operator_path", path_err, PATH_TOL, path_at),
    ];
    let pass = checks.iter().all(|c| c.1 <= c.2);
    let summary = Value::Object(
        checks
            .iter()
            .map(|(name, err, tol, at)| {
                (name.to_string(), json!({"max_error": err, "tolerance": tol, "pass": err <= tol, "worst": at}))
            })
            .chain(std::iter::once(("pass".to_string(), json!(pass))))
            .collect(),
    );
    Ok(Report { command: "hermite-verify", summary, csv: Some(csv), pass })
}

const TRANSPLANT_TOL: f64 = 1e-8;

/// `‖T_α^β T_β^α f − f‖₂` for seeded random `f` in the span of the first
/// `terms` functions, with both transplants done through function samples.
pub fn transplant_check(cfg: &ExperimentConfig, seed: u64) -> Outcome {
    let t = &cfg.transplant;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coeffs: Vec<f64> = (0..t.terms).map(|_| rng.random_range(-1.0..=1.0)).collect();
    let q = 2 * t.terms + 16;
    let mut csv = Csv::new(&["alpha", "beta", "l2_error"]);
    let mut worst_err: f64 = 0.0;
    for &(a, b) in &t.pairs {
        let cv = CoefficientVector::new(ExpansionBasis::laguerre(a)?, coeffs.clone());
        let f = |x: f64| synthesize(&cv, x).unwrap();
        let there = analyze_fn(&f, ExpansionBasis::laguerre(a)?, t.terms, q)?;
        let there = CoefficientVector::new(ExpansionBasis::laguerre(b)?, there.coeffs);
        let g = |x: f64| synthesize(&there, x).unwrap();
        let back = analyze_fn(&g, ExpansionBasis::laguerre(b)?, t.terms, q)?;
        let err = back.coeffs.iter().zip(&coeffs).map(|(x, y)| (x - y).powi(2)).sum::<f64>().sqrt();
        worst_err = worst_err.max(err);
        csv.push(vec![num(a), num(b), num(err)]);
    }
    let pass = worst_err <= TRANSPLANT_TOL;
    let summary = json!({
        "pairs": t.pairs,
        "terms": t.terms,
        "seed": seed,
        "max_error": worst_err,
        "tolerance": TRANSPLANT_TOL,
        "pass": pass,
    });
    Ok(Report { command: "transplant-check", summary, csv: Some(csv), pass })
}

/// `M_{m,ρ} f` in coefficient space, with `f` analyzed in `basis` to `n` terms.
pub fn coefficient_operator(
    f: &dyn Fn(f64) -> f64,
    basis: ExpansionBasis,
    sym: &lapmult_core::SymbolSpec,
    rho: f64,
    n: usize,
) -> Result<CoefficientVector, Failure> {
    let cv = analyze_fn(f, basis, n, n + 24)?;
    Ok(apply_multiplier(&cv, sym, rho)?)
}
