//! Analysis and synthesis in the Laguerre-type and Hermite systems.

mod basis;
mod coeffs;
mod grid;
mod systems;
mod transplant;

pub use basis::{ExpansionBasis, System};
pub use coeffs::{analyze, analyze_fn, apply_multiplier, apply_multiplier_values, synthesize, CoefficientVector};
pub use grid::GridFunction;
pub use systems::change_system;
pub use transplant::{transplant, transplant_coeffs};

/// Default truncation order for expansions.
pub const DEFAULT_TRUNCATION: usize = 64;
