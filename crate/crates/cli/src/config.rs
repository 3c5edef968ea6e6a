use anyhow::{bail, ensure, Context, Result};
use lapmult_core::ineq::ExponentSet;
use lapmult_core::{ExpansionBasis, GridFunction, SymbolSpec, System};
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};

/// Largest truncation accepted; the analysis rules need a few extra nodes.
pub const MAX_TRUNCATION: usize = 480;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisConfig {
    pub system: System,
    #[serde(default)]
    pub alpha: f64,
}

impl Default for BasisConfig {
    fn default() -> Self {
        Self { system: System::LaguerreL, alpha: 0.0 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExponentConfig {
    pub p: f64,
    pub q: f64,
    #[serde(default)]
    pub a: f64,
    #[serde(default)]
    pub b: f64,
    pub sigma: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    pub x_min: f64,
    pub x_max: f64,
    pub points: usize,
}

impl Default for GridConfig {
    fn default() -> Self {
        Self { x_min: 1e-3, x_max: 50.0, points: 40 }
    }
}

impl GridConfig {
    pub fn nodes(&self) -> Vec<f64> {
        GridFunction::geometric_grid(self.x_min, self.x_max, self.points).expect("validated grid")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IintConfig {
    pub gamma: f64,
    pub k: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransplantConfig {
    pub pairs: Vec<(f64, f64)>,
    pub terms: usize,
}

impl Default for TransplantConfig {
    fn default() -> Self {
        Self { pairs: vec![(-0.5, 1.0), (0.5, 2.0)], terms: 26 }
    }
}

fn default_rho_list() -> Vec<f64> {
    vec![0.9, 0.99, 0.999]
}

fn default_truncation() -> usize {
    64
}

fn default_rho() -> f64 {
    1.0
}

/// Everything a subcommand may read. Sections a command does not use are
/// ignored by it but still validated.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub symbol: SymbolSpec,
    #[serde(default)]
    pub basis: BasisConfig,
    #[serde(default)]
    pub exponents: Option<ExponentConfig>,
    #[serde(default)]
    pub grid: GridConfig,
    #[serde(default = "default_rho_list")]
    pub rho_list: Vec<f64>,
    /// Abel parameter of the norm experiment.
    #[serde(default = "default_rho")]
    pub rho: f64,
    #[serde(default = "default_truncation")]
    pub truncation: usize,
    #[serde(default)]
    pub output_dir: Option<PathBuf>,
    #[serde(default)]
    pub iint: Option<IintConfig>,
    #[serde(default)]
    pub transplant: TransplantConfig,
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: Self = serde_json::from_str(text).context("malformed config JSON")?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
        Self::from_json(&text).with_context(|| format!("invalid config {}", path.display()))
    }

    pub fn validate(&self) -> Result<()> {
        self.symbol.validate().context("symbol")?;
        self.basis().context("basis")?;
        if let Some(e) = &self.exponents {
            ExponentSet::new(e.p, e.q, e.a, e.b, e.sigma, self.basis.alpha).context("exponents")?;
        }
        let g = &self.grid;
        ensure!(
            g.x_min > 0.0 && g.x_max > g.x_min && g.x_max.is_finite() && g.points >= 2,
            "grid needs 0 < x_min < x_max < inf and at least two points"
        );
        ensure!(!self.rho_list.is_empty(), "rho_list must not be empty");
        for &r in &self.rho_list {
            ensure!(r > 0.0 && r <= 1.0, "rho_list entries must lie in (0, 1], got {r}");
        }
        ensure!(self.rho > 0.0 && self.rho <= 1.0, "rho must lie in (0, 1], got {}", self.rho);
        ensure!(
            (1..=MAX_TRUNCATION).contains(&self.truncation),
            "truncation must lie in 1..={MAX_TRUNCATION}, got {}",
            self.truncation
        );
        if let Some(i) = &self.iint {
            validate_iint(i.gamma, i.k)?;
        }
        let t = &self.transplant;
        ensure!(t.terms >= 1 && t.terms <= MAX_TRUNCATION, "transplant terms must lie in 1..={MAX_TRUNCATION}");
        for &(a, b) in &t.pairs {
            ensure!(a > -1.0 && b > -1.0 && a.is_finite() && b.is_finite(), "transplant parameters must exceed -1");
        }
        Ok(())
    }

    pub fn basis(&self) -> Result<ExpansionBasis> {
        Ok(ExpansionBasis::new(self.basis.system, self.basis.alpha)?)
    }

    pub fn exponent_set(&self) -> Result<ExponentSet> {
        let Some(e) = self.exponents else { bail!("this command needs an `exponents` section") };
        Ok(ExponentSet::new(e.p, e.q, e.a, e.b, e.sigma, self.basis.alpha)?)
    }
}

pub fn validate_iint(gamma: f64, k: f64) -> Result<()> {
    ensure!(k > -1.0 && k.is_finite(), "k must exceed -1, got {k}");
    ensure!(gamma > 0.0 && gamma.is_finite(), "gamma must be positive, got {gamma}");
    Ok(())
}
