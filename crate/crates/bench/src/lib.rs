//! Shared inputs for the benchmarks.

use lapmult_core::SymbolSpec;

/// Symbols exercised by the kernel and experiment benchmarks.
pub fn builtin_symbols(alpha: f64) -> Vec<(&'static str, SymbolSpec)> {
    vec![
        ("frac_integral", SymbolSpec::frac_integral(0.5, 1.0)),
        ("heat", SymbolSpec::heat(1.0, (alpha + 1.0) / 2.0)),
        ("bessel_resolvent", SymbolSpec::bessel_resolvent(alpha)),
    ]
}
