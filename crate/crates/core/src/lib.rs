//! Multipliers of Laplace-transform type for Laguerre and Hermite expansions.
//!
//! The crate is organised bottom-up:
//!
//! - [`specfun`]: Laguerre, Hermite and normalized Bessel functions, and the
//!   Laguerre generating function.
//! - [`quad`]: Gauss rules, adaptive Gauss–Kronrod integration and
//!   Laplace–Stieltjes integration against `(density, atoms)` measures.
//! - [`symbols`]: symbol measures, hypothesis checks and the Hermite split.
//! - [`expansion`]: analysis/synthesis in the five orthonormal systems,
//!   coefficient multipliers, system changes and transplantation.
//! - [`kernel`]: the regularized kernel, the model integral `I_{γ,k}`, and
//!   generalized/twisted convolutions.
//! - [`ineq`]: weighted norms, exponent predicates and norm experiments.

pub mod error;
pub mod expansion;
pub mod ineq;
pub mod kernel;
pub mod quad;
pub mod specfun;
pub mod sum;
pub mod symbols;

pub use error::{Error, Result};
pub use expansion::{
    analyze, analyze_fn, apply_multiplier, change_system, synthesize, transplant, CoefficientVector,
    ExpansionBasis, GridFunction, System,
};
pub use ineq::{
    admissible_hermite, admissible_laguerre, admissible_system, run_experiment, weighted_norm,
    ExperimentReport, ExponentSet, TestFamily,
};
pub use kernel::{
    gen_convolution, gen_translation, i_integral, kernel_integral, kernel_series,
    twisted_convolution, verify_i_regimes, verify_kernel_bound, KernelProfile, Regime,
};
pub use quad::{
    gauss_generalized_laguerre, gauss_legendre, integrate_adaptive, integrate_stieltjes, Estimate,
    QuadratureRule, RuleKind, Tolerance,
};
pub use specfun::{
    gen_fn_z, gen_fn_z_prime, hermite_fn, laguerre_fn, laguerre_poly, normalized_bessel, BasisParam,
    EigenIndex,
};
pub use symbols::{
    check_boundedness, hermite_split, psi_value, symbol_value, verify_h1, verify_h2, Density,
    SymbolSpec,
};
