//! Special functions: Laguerre and Hermite functions, normalized Bessel
//! functions and the Laguerre generating function.

mod bessel;
mod genfn;
mod hermite;
mod laguerre;

pub use bessel::{bessel_j, normalized_bessel};
pub use genfn::{gen_fn_z, gen_fn_z_complement, gen_fn_z_prime};
pub use hermite::{hermite_fn, hermite_fns};
pub use laguerre::{laguerre_fn, laguerre_fns, laguerre_log_normalized, laguerre_poly};

use crate::error::{domain, Result};
use serde::{Deserialize, Serialize};

pub use statrs::function::gamma::ln_gamma;
#[cfg(test)]
pub(crate) use statrs::function::gamma::gamma;

/// Laguerre type parameter `α > −1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BasisParam {
    pub alpha: f64,
}

impl BasisParam {
    pub fn new(alpha: f64) -> Result<Self> {
        check_alpha(alpha)?;
        Ok(Self { alpha })
    }
}

/// Expansion index `k` paired with the parameter it indexes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenIndex {
    pub k: usize,
    pub alpha: f64,
}

impl EigenIndex {
    /// Eigenvalue `k + (α+1)/2` of the Laguerre operator.
    pub fn eigenvalue(&self) -> f64 {
        self.k as f64 + (self.alpha + 1.0) / 2.0
    }

    /// `ν = 4k + 2α + 2`, the turning-point scale of `l_k^α`.
    pub fn nu(&self) -> f64 {
        4.0 * self.k as f64 + 2.0 * self.alpha + 2.0
    }
}

pub(crate) fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha > -1.0) || !alpha.is_finite() {
        return Err(domain(format!("alpha must be > -1, got {alpha}")));
    }
    Ok(())
}

pub(crate) fn check_x(x: f64) -> Result<()> {
    if !(x >= 0.0) || !x.is_finite() {
        return Err(domain(format!("x must be finite and >= 0, got {x}")));
    }
    Ok(())
}
