use super::{Density, SymbolSpec};

/// Even/odd split of a symbol for Hermite expansions.
///
/// Returns `(Ψ₀, Ψ₁)` with `Ψ₀(u) = Ψ(u/2)` and
/// `Ψ₁(u) = ∫_0^{u/2} e^{−τ} dΨ(τ)`, so that `𝔏Ψ₀(k) = m(2k)` and
/// `𝔏Ψ₁(k) = m(2k+1)`.
pub fn hermite_split(sym: &SymbolSpec) -> (SymbolSpec, SymbolSpec) {
    let rescale = |damping: f64| {
        sym.density.clone().map(|d| Density::Rescaled {
            inner: Box::new(d),
            amplitude: 0.5,
            time_scale: 2.0,
            damping,
        })
    };
    let sym0 = SymbolSpec {
        density: rescale(0.0),
        atoms: sym.atoms.iter().map(|&(t, a)| (2.0 * t, a)).collect(),
        sigma_hint: sym.sigma_hint,
        delta: 2.0 * sym.delta,
    };
    let sym1 = SymbolSpec {
        density: rescale(0.5),
        atoms: sym.atoms.iter().map(|&(t, a)| (2.0 * t, (-t).exp() * a)).collect(),
        sigma_hint: sym.sigma_hint,
        delta: 2.0 * sym.delta,
    };
    (sym0, sym1)
}
