//! Laplace–Stieltjes symbol measures `dΨ = φ dt + Σ a_n δ_{τ_n}`.

mod density;
mod hypotheses;
mod spec;
mod split;

pub use density::Density;
pub use hypotheses::{check_boundedness, psi_value, verify_h1, verify_h2, H2Fit};
pub use spec::{symbol_value, symbol_values, SymbolSpec};
pub use split::hermite_split;
