//! The regularized kernel `g_ρ`, the model integral `I_{γ,k}`, and the
//! generalized Euclidean and twisted convolutions.

mod convolution;
mod gfun;
mod iint;

pub use convolution::{
    gen_convolution, gen_translation, gen_translation_fn, normalization_constant, twisted_convolution,
    twisted_translation_fn,
};
pub use gfun::{
    truncated_kernel_integral, kernel_integral, kernel_series, verify_kernel_bound, KernelBoundReport, KernelProfile,
    KernelRow, KernelSeries, SeriesValue, RHO_MIN,
};
pub use iint::{i_integral, verify_i_regimes, IRow, Regime, RegimeReport};
