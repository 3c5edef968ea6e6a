//! Weighted norms, exponent predicates and norm-ratio experiments.

mod experiment;
mod exponents;
mod family;
mod norms;

pub use experiment::{run_experiment, ExperimentReport, ExperimentRow, HypothesisStatus};
pub use exponents::{
    admissible_hermite, admissible_laguerre, admissible_system, lift_exponents, literal_system_predicate,
    reduce_exponents, system_verdict, ExponentSet, SystemVerdict, PREDICATE_TOL,
};
pub use family::{FamilyMember, TestFamily, DEFAULT_SEED, MAX_DEGREE};
pub use norms::{weighted_norm, weighted_norm_fn, weighted_norm_line, weighted_power_fn};
