use super::exponents::{system_verdict, ExponentSet, SystemVerdict};
use super::family::{FamilyMember, TestFamily};
use super::norms::{weighted_norm_fn, weighted_norm_line};
use crate::error::{domain, Result};
use crate::expansion::{analyze_fn, apply_multiplier_values, synthesize, ExpansionBasis, System};
use crate::symbols::{symbol_values, verify_h1, verify_h2, SymbolSpec};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Breakpoints handed to the norm integrator; they bracket the oscillation
/// region of the low-order basis functions.
const NORM_BREAKS: [f64; 10] = [0.125, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0];

/// Status of `(H1)` and `(H2)` for the symbol of an experiment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HypothesisStatus {
    pub total_variation: Option<f64>,
    pub h1: bool,
    pub sigma_fit: Option<f64>,
    pub h2: bool,
}

impl HypothesisStatus {
    pub fn check(sym: &SymbolSpec, sigma: f64) -> Self {
        let tv = verify_h1(sym).ok().filter(|e| e.value.is_finite() && e.converged);
        let fit = verify_h2(sym, sym.delta).ok();
        Self {
            total_variation: tv.as_ref().map(|e| e.value),
            h1: tv.is_some(),
            sigma_fit: fit.as_ref().map(|f| f.sigma_fit).filter(|s| s.is_finite()),
            h2: fit.as_ref().is_some_and(|f| f.holds_for(sigma)),
        }
    }

    pub fn holds(&self) -> bool {
        self.h1 && self.h2
    }
}

/// One member's ratio `‖Mf‖_q / ‖f‖_p`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentRow {
    pub member: String,
    pub p_norm: f64,
    pub q_norm: f64,
    pub ratio: f64,
    /// Set when a norm could not be computed; the row is then left out of
    /// the maximum.
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub basis: ExpansionBasis,
    pub exponents: ExponentSet,
    pub rho: f64,
    pub truncation: usize,
    pub verdict: SystemVerdict,
    pub admissible: bool,
    pub hypotheses: HypothesisStatus,
    /// True unless the exponents are admissible and both hypotheses hold:
    /// a large ratio is then no evidence of unboundedness.
    pub informative_only: bool,
    /// Largest ratio over the members that did not fail.
    pub max_ratio: Option<f64>,
    pub rows: Vec<ExperimentRow>,
}

/// Weight exponent `γ` of `x^γ dx` and vanishing order `ν` at 0 of the
/// functions of `system`, for the domain (`source`) or target norm.
fn weight(system: System, e: &ExponentSet, source: bool) -> (f64, f64) {
    let al = e.alpha;
    let g = if source { e.a * e.p } else { -e.b * e.q };
    match system {
        System::LaguerreL => (al + g, 0.0),
        System::LaguerreScriptL => (g, al / 2.0),
        System::LaguerrePhi => (g, al + 0.5),
        System::LaguerrePsi | System::Hermite => (g, 0.0),
    }
}

fn norm(system: System, f: &(dyn Fn(f64) -> f64 + Sync), r: f64, gamma: f64, nu: f64) -> Result<f64> {
    if system == System::Hermite {
        weighted_norm_line(f, r, gamma, &NORM_BREAKS)
    } else {
        weighted_norm_fn(f, r, gamma, nu, &NORM_BREAKS)
    }
}

fn run_member(
    m: &FamilyMember,
    basis: ExpansionBasis,
    e: &ExponentSet,
    symbol: &[f64],
    rho: f64,
    n: usize,
) -> Result<(f64, f64)> {
    let sys = basis.system;
    let al = basis.alpha;
    let f = |x: f64| m.eval_in(sys, al, x);
    let cv = analyze_fn(&f, basis, n, n + 2 * m.span() + 8)?;
    let mf = apply_multiplier_values(&cv, symbol, rho)?;
    let mf_eval = |x: f64| synthesize(&mf, x).unwrap_or(f64::NAN);
    let (gp, nup) = weight(sys, e, true);
    let (gq, nuq) = weight(sys, e, false);
    let p_norm = norm(sys, &f, e.p, gp, nup)?;
    let q_norm = norm(sys, &mf_eval, e.q, gq, nuq)?;
    if !(p_norm.is_finite() && q_norm.is_finite()) {
        return Err(domain("non-finite norm"));
    }
    Ok((p_norm, q_norm))
}

/// Ratios `‖M_{m,ρ} f‖_{L^q(target weight)} / ‖f‖_{L^p(source weight)}` over
/// `family`, with `M` applied in coefficient space after truncation to `n`
/// terms.
///
/// The weights are those of the inequality for `basis.system` (see
/// [`ExponentSet`]); `e.alpha` is overwritten by `basis.alpha`. Members whose
/// norms fail are reported with an error and skipped in the maximum.
pub fn run_experiment(
    sym: &SymbolSpec,
    basis: ExpansionBasis,
    e: &ExponentSet,
    family: &TestFamily,
    rho: f64,
    n: usize,
) -> Result<ExperimentReport> {
    basis.validate()?;
    sym.validate()?;
    let e = ExponentSet { alpha: if basis.system == System::Hermite { e.alpha } else { basis.alpha }, ..*e };
    e.validate()?;
    if !(rho > 0.0 && rho <= 1.0) {
        return Err(domain(format!("rho must lie in (0, 1], got {rho}")));
    }
    if let Some(m) = family.members.iter().find(|m| m.span() > n) {
        return Err(domain(format!("truncation {n} is below the span of member {}", m.name)));
    }
    let symbol = symbol_values(sym, n)?;
    let rows: Vec<ExperimentRow> = family
        .members
        .par_iter()
        .map(|m| match run_member(m, basis, &e, &symbol, rho, n) {
            Ok((p_norm, q_norm)) => {
                ExperimentRow { member: m.name.clone(), p_norm, q_norm, ratio: q_norm / p_norm, error: None }
            }
            Err(err) => ExperimentRow {
                member: m.name.clone(),
                p_norm: f64::NAN,
                q_norm: f64::NAN,
                ratio: f64::NAN,
                error: Some(err.to_string()),
            },
        })
        .collect();
    let max_ratio = rows.iter().filter(|r| r.error.is_none()).map(|r| r.ratio).reduce(f64::max);
    let verdict = system_verdict(&e, basis.system);
    let hypotheses = HypothesisStatus::check(sym, e.sigma);
    Ok(ExperimentReport {
        basis,
        exponents: e,
        rho,
        truncation: n,
        admissible: verdict.admissible,
        informative_only: !(verdict.admissible && hypotheses.holds()),
        verdict,
        hypotheses,
        max_ratio,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn es(a: f64, b: f64, sigma: f64) -> ExponentSet {
        ExponentSet { p: 2.0, q: 2.0, a, b, sigma, alpha: 0.0 }
    }

    #[test]
    fn identity_symbol_preserves_norms() {
        let fam = TestFamily::standard();
        for basis in [ExpansionBasis::laguerre(0.0).unwrap(), ExpansionBasis::hermite()] {
            let r = run_experiment(&SymbolSpec::identity(), basis, &es(0.0, 0.0, 0.25), &fam, 1.0, 64).unwrap();
            assert!(r.rows.iter().all(|row| row.error.is_none()));
            assert!((r.max_ratio.unwrap() - 1.0).abs() < 1e-9, "{:?}", r.max_ratio);
            assert!(r.informative_only);
        }
    }

    #[test]
    fn heat_atom_bounded_by_first_eigenvalue() {
        let fam = TestFamily::standard();
        let b = ExpansionBasis::laguerre(0.0).unwrap();
        let r = run_experiment(&SymbolSpec::heat(1.0, 0.5), b, &es(0.0, 0.0, 0.5), &fam, 1.0, 64).unwrap();
        assert!(r.max_ratio.unwrap() <= (-0.5f64).exp() + 1e-9);
        // e^{−x/2} is an eigenfunction.
        let row = r.rows.iter().find(|row| row.member == "monomial_00").unwrap();
        assert!((row.ratio - (-0.5f64).exp()).abs() < 1e-10);
    }

    #[test]
    fn weights_follow_the_system() {
        let e = ExponentSet { p: 2.0, q: 3.0, a: 0.1, b: 0.2, sigma: 0.5, alpha: 1.0 };
        assert_eq!(weight(System::LaguerreL, &e, true), (1.2, 0.0));
        assert_eq!(weight(System::LaguerreL, &e, false), (1.0 - 0.6000000000000001, 0.0));
        assert_eq!(weight(System::LaguerrePhi, &e, true), (0.2, 1.5));
    }

    #[test]
    fn rejects_short_truncation() {
        let b = ExpansionBasis::laguerre(0.0).unwrap();
        assert!(run_experiment(&SymbolSpec::identity(), b, &es(0.0, 0.0, 0.5), &TestFamily::standard(), 1.0, 8).is_err());
    }
}
