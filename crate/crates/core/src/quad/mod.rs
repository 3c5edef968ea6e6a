//! Quadrature: Gauss rules, adaptive Gauss–Kronrod, Laplace–Stieltjes
//! integration.

mod adaptive;
mod rules;
mod stieltjes;

pub use adaptive::{gk15, integrate_adaptive, integrate_panels, Estimate, Tolerance};
pub use rules::{gauss_generalized_laguerre, gauss_legendre, QuadratureRule, RuleKind};
pub use stieltjes::{integrate_density, integrate_stieltjes, integrate_stieltjes_hinted, HalfLine, TAIL_START};
