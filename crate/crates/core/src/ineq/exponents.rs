use crate::error::{domain, Result};
use crate::expansion::System;
use serde::{Deserialize, Serialize};

/// Slack used by every comparison in the exponent predicates.
pub const PREDICATE_TOL: f64 = 1e-12;

/// Exponents of a weighted `L^p → L^q` inequality.
///
/// For the `l_k^α` system `(a, b)` are the exponents of
/// `‖Mf‖_{L^q(x^{α−bq})} ≤ C‖f‖_{L^p(x^{α+ap})}`. For the other Laguerre
/// systems the same two fields hold `(A, B)`, `(C, D)` or `(E, F)`, and for
/// Hermite they are the `|x|^{ap}`, `|x|^{−bq}` exponents.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExponentSet {
    pub p: f64,
    pub q: f64,
    pub a: f64,
    pub b: f64,
    pub sigma: f64,
    #[serde(default)]
    pub alpha: f64,
}

impl ExponentSet {
    pub fn new(p: f64, q: f64, a: f64, b: f64, sigma: f64, alpha: f64) -> Result<Self> {
        let e = Self { p, q, a, b, sigma, alpha };
        e.validate()?;
        Ok(e)
    }

    pub fn validate(&self) -> Result<()> {
        if !self.has_valid_pq() {
            return Err(domain(format!("need 1 < p <= q < inf, got p = {}, q = {}", self.p, self.q)));
        }
        if ![self.a, self.b, self.sigma, self.alpha].iter().all(|v| v.is_finite()) {
            return Err(domain("exponents must be finite"));
        }
        Ok(())
    }

    fn has_valid_pq(&self) -> bool {
        self.p > 1.0 && self.p <= self.q && self.q.is_finite()
    }

    /// Conjugate exponent `p′ = p/(p−1)`.
    pub fn p_conj(&self) -> f64 {
        self.p / (self.p - 1.0)
    }

    /// `1/q − 1/p ≤ 0`.
    pub fn gap(&self) -> f64 {
        1.0 / self.q - 1.0 / self.p
    }

    pub fn with_ab(self, a: f64, b: f64) -> Self {
        Self { a, b, ..self }
    }
}

fn lt(x: f64, y: f64) -> bool {
    x < y - PREDICATE_TOL
}

fn le(x: f64, y: f64) -> bool {
    x <= y + PREDICATE_TOL
}

/// Exponent conditions for the `l_k^α` system:
/// `a < (α+1)/p′`, `b < (α+1)/q` and
/// `(1/q−1/p)(α+½) ≤ a+b ≤ (1/q−1/p)(α+1) + σ`, with `0 < σ < α+1`.
pub fn admissible_laguerre(e: &ExponentSet) -> bool {
    let al = e.alpha;
    if e.validate().is_err() || !(al > -1.0) || !(e.sigma > 0.0 && lt(e.sigma, al + 1.0)) {
        return false;
    }
    let g = e.gap();
    let s = e.a + e.b;
    lt(e.a, (al + 1.0) / e.p_conj())
        && lt(e.b, (al + 1.0) / e.q)
        && le(g * (al + 0.5), s)
        && le(s, g * (al + 1.0) + e.sigma)
}

/// Exponent conditions for Hermite functions:
/// `a < 1/p′`, `b < 1/q`, `0 ≤ a+b ≤ 1/q − 1/p + 2σ`, with `0 < σ < ½`.
pub fn admissible_hermite(e: &ExponentSet) -> bool {
    if e.validate().is_err() || !(e.sigma > 0.0 && lt(e.sigma, 0.5)) {
        return false;
    }
    let s = e.a + e.b;
    lt(e.a, 1.0 / e.p_conj()) && lt(e.b, 1.0 / e.q) && le(0.0, s) && le(s, e.gap() + 2.0 * e.sigma)
}

/// Maps system exponents to the equivalent `(a, b)` of the `l_k^α` system.
///
/// The maps come from the pointwise isometries between the systems:
/// `𝓛_k = x^{α/2} l_k`, `φ_k(x) = √2 x^{α+½} l_k(x²)`, `ψ_k(x) = √2 l_k(x²)`.
/// Hermite exponents are returned unchanged.
pub fn reduce_exponents(e: &ExponentSet, system: System) -> ExponentSet {
    let (p, q, al) = (e.p, e.q, e.alpha);
    let script = |aa: f64, bb: f64| (aa + al * (0.5 - 1.0 / p), bb - al * (0.5 - 1.0 / q));
    let (a, b) = match system {
        System::LaguerreL | System::Hermite => (e.a, e.b),
        System::LaguerreScriptL => script(e.a, e.b),
        System::LaguerrePhi => script(e.a / 2.0 + 0.25 - 0.5 / p, e.b / 2.0 - 0.25 + 0.5 / q),
        System::LaguerrePsi => script(e.a / 2.0 - 0.5 / p - al / 2.0, e.b / 2.0 + 0.5 / q + al / 2.0),
    };
    e.with_ab(a, b)
}

/// Inverse of [`reduce_exponents`].
pub fn lift_exponents(e: &ExponentSet, system: System) -> ExponentSet {
    let (p, q, al) = (e.p, e.q, e.alpha);
    let (aa, bb) = (e.a - al * (0.5 - 1.0 / p), e.b + al * (0.5 - 1.0 / q));
    let (a, b) = match system {
        System::LaguerreL | System::Hermite => (e.a, e.b),
        System::LaguerreScriptL => (aa, bb),
        System::LaguerrePhi => (2.0 * (aa - 0.25 + 0.5 / p), 2.0 * (bb + 0.25 - 0.5 / q)),
        System::LaguerrePsi => (2.0 * (aa + 0.5 / p + al / 2.0), 2.0 * (bb - 0.5 / q - al / 2.0)),
    };
    e.with_ab(a, b)
}

/// Conditions for the `𝓛`, `φ`, `ψ` systems evaluated literally as displayed
/// for those systems, without going through the reduction. `None` for the
/// `l_k^α` and Hermite systems, which have no separate display.
///
/// For `p < q` the displayed upper bound `(·)(1/q−1/p)` is negative and this
/// predicate disagrees with the reduced one; both are reported.
pub fn literal_system_predicate(e: &ExponentSet, system: System) -> Option<bool> {
    let al = e.alpha;
    let g = e.gap();
    let s = e.a + e.b;
    let (ba, bb, lo, hi) = match system {
        System::LaguerreL | System::Hermite => return None,
        System::LaguerreScriptL => (al / 2.0 + 1.0 / e.p_conj(), al / 2.0 + 1.0 / e.q, g * (al + 1.0), e.sigma * g),
        System::LaguerrePhi => (
            al + 1.0 / e.p_conj() + 0.5,
            al + 1.0 / e.q + 0.5,
            g * (2.0 * al + 1.0),
            (2.0 * e.sigma - 1.0) * g,
        ),
        System::LaguerrePsi => {
            (2.0 * al + 1.0 + 1.0 / e.p_conj(), 1.0 / e.q, g * (2.0 * al + 1.0), (2.0 * e.sigma - 1.0) * g)
        }
    };
    let base = e.validate().is_ok() && al > -1.0 && e.sigma > 0.0 && lt(e.sigma, al + 1.0);
    Some(base && lt(e.a, ba) && lt(e.b, bb) && lt(lo, s) && le(s, hi))
}

/// Verdicts for one exponent set in one system.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SystemVerdict {
    pub system: System,
    /// Equivalent `l_k^α` exponents.
    pub reduced: ExponentSet,
    /// Verdict obtained through the reduction.
    pub admissible: bool,
    /// Verdict of the conditions as displayed for the system, if any.
    pub literal: Option<bool>,
}

pub fn system_verdict(e: &ExponentSet, system: System) -> SystemVerdict {
    let reduced = reduce_exponents(e, system);
    let admissible = match system {
        System::Hermite => admissible_hermite(e),
        _ => admissible_laguerre(&reduced),
    };
    SystemVerdict { system, reduced, admissible, literal: literal_system_predicate(e, system) }
}

/// Predicate for any system through the reduction to the `l_k^α` system;
/// Hermite sets use [`admissible_hermite`].
pub fn admissible_system(e: &ExponentSet, system: System) -> bool {
    system_verdict(e, system).admissible
}

#[cfg(test)]
mod tests {
    use super::*;

    fn es(p: f64, q: f64, a: f64, b: f64, sigma: f64, alpha: f64) -> ExponentSet {
        ExponentSet { p, q, a, b, sigma, alpha }
    }

    #[test]
    fn laguerre_examples() {
        assert!(admissible_laguerre(&es(2.0, 2.0, 0.0, 0.0, 0.5, 0.0)));
        assert!(!admissible_laguerre(&es(2.0, 2.0, 0.6, 0.0, 0.5, 0.0)));
        assert!(admissible_laguerre(&es(2.0, 2.0, 0.0, 0.0, 1e-9, 0.0)));
        // a + b at the upper bound is included, a at its bound is not.
        assert!(admissible_laguerre(&es(2.0, 2.0, 0.2, 0.3, 0.5, 0.0)));
        assert!(!admissible_laguerre(&es(2.0, 2.0, 0.5, 0.0, 0.6, 0.0)));
        assert!(!admissible_laguerre(&es(2.0, 2.0, 0.0, 0.0, 1.0, 0.0)));
        assert!(!admissible_laguerre(&es(3.0, 2.0, 0.0, 0.0, 0.5, 0.0)));
    }

    #[test]
    fn hermite_examples() {
        assert!(admissible_hermite(&es(2.0, 2.0, 0.0, 0.0, 0.25, 0.0)));
        assert!(!admissible_hermite(&es(2.0, 2.0, 0.0, 0.6, 0.25, 0.0)));
        assert!(admissible_hermite(&es(2.0, 4.0, 0.0, 0.0, 0.25, 0.0)));
        assert!(!admissible_hermite(&es(2.0, 4.0, 0.0, 0.0, 0.1, 0.0)));
        assert!(!admissible_hermite(&es(2.0, 2.0, 0.0, 0.0, 0.5, 0.0)));
    }

    #[test]
    fn reduction_is_identity_at_alpha_zero_for_script_l() {
        let e = es(1.5, 3.0, 0.1, -0.2, 0.4, 0.0);
        assert_eq!(reduce_exponents(&e, System::LaguerreScriptL), e);
        assert_eq!(admissible_system(&e, System::LaguerreScriptL), admissible_laguerre(&e));
        assert_eq!(admissible_system(&e, System::LaguerreL), admissible_laguerre(&e));
    }

    #[test]
    fn reductions_round_trip() {
        let e = es(1.7, 2.9, 0.13, -0.31, 0.6, 1.4);
        for sys in [System::LaguerreScriptL, System::LaguerrePhi, System::LaguerrePsi] {
            let back = lift_exponents(&reduce_exponents(&e, sys), sys);
            assert!((back.a - e.a).abs() < 1e-15 && (back.b - e.b).abs() < 1e-15, "{sys:?}");
        }
        let l = es(2.0, 2.0, 0.3, 0.1, 0.5, 1.0);
        let up = lift_exponents(&l, System::LaguerreScriptL);
        assert_eq!(up.a, 0.3 - 1.0 * (0.5 - 0.5));
        let l = es(4.0, 4.0, 0.3, 0.1, 0.5, 1.0);
        let up = lift_exponents(&l, System::LaguerreScriptL);
        assert!((up.a - (0.3 - 0.25)).abs() < 1e-15 && (up.b - (0.1 + 0.25)).abs() < 1e-15);
    }

    #[test]
    fn spot_value_script_l() {
        let e = es(2.0, 2.0, 0.0, 0.0, 0.5, 1.0);
        let v = system_verdict(&e, System::LaguerreScriptL);
        assert_eq!((v.reduced.a, v.reduced.b), (0.0, 0.0));
        assert!(v.admissible);
        // The displayed range degenerates to 0 < A+B <= 0 when p = q.
        assert_eq!(v.literal, Some(false));
    }

    #[test]
    fn strict_bounds_of_other_systems_match_reduction() {
        // The single-exponent bounds agree between the two readings.
        let al = 0.7;
        let (p, q) = (2.0, 3.0);
        let e = es(p, q, 0.0, 0.0, 0.5, al);
        let bound_c = al + (1.0 - 1.0 / p) + 0.5;
        let at = reduce_exponents(&e.with_ab(bound_c, 0.0), System::LaguerrePhi);
        assert!((at.a - (al + 1.0) / e.p_conj()).abs() < 1e-14);
        let bound_f = 1.0 / q;
        let at = reduce_exponents(&e.with_ab(0.0, bound_f), System::LaguerrePsi);
        assert!((at.b - (al + 1.0) / q).abs() < 1e-14);
    }
}
