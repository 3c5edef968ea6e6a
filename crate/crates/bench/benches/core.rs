use criterion::{criterion_group, criterion_main, Criterion};
use lapmult_bench::builtin_symbols;
use lapmult_core::ineq::{run_experiment, ExponentSet, TestFamily};
use lapmult_core::kernel::{i_integral, kernel_integral, KernelProfile, KernelSeries};
use lapmult_core::specfun::{laguerre_fns, normalized_bessel};
use lapmult_core::{gauss_generalized_laguerre, ExpansionBasis};
use std::hint::black_box;

fn special_functions(c: &mut Criterion) {
    c.bench_function("laguerre_fns n=64", |b| b.iter(|| laguerre_fns(64, black_box(0.5), black_box(17.3))));
    c.bench_function("normalized_bessel", |b| b.iter(|| normalized_bessel(black_box(0.5), black_box(11.0))));
    c.bench_function("gauss_laguerre n=200", |b| b.iter(|| gauss_generalized_laguerre(black_box(200), 0.5)));
}

fn kernels(c: &mut Criterion) {
    let mut g = c.benchmark_group("kernel");
    for (name, sym) in builtin_symbols(1.0) {
        let p = KernelProfile::new(1.0, 0.5, 0.5, sym).unwrap();
        let series = KernelSeries::with_tolerance(&p, 1e-12).unwrap();
        g.bench_function(format!("series/{name}"), |b| b.iter(|| series.eval(black_box(2.0))));
        g.bench_function(format!("integral/{name}"), |b| b.iter(|| kernel_integral(&p, black_box(2.0))));
    }
    g.bench_function("i_integral near 1", |b| b.iter(|| i_integral(5.0, 0.5, black_box(0.999))));
    g.finish();
}

fn experiments(c: &mut Criterion) {
    let fam = TestFamily::standard().up_to_degree(4);
    let e = ExponentSet { p: 2.0, q: 3.0, a: 0.1, b: 0.05, sigma: 0.5, alpha: 0.5 };
    let basis = ExpansionBasis::laguerre(0.5).unwrap();
    let (_, sym) = builtin_symbols(0.5).remove(0);
    let mut g = c.benchmark_group("experiment");
    g.sample_size(10);
    g.bench_function("norm ratios", |b| b.iter(|| run_experiment(&sym, basis, &e, &fam, 1.0, 32)));
    g.finish();
}

criterion_group!(benches, special_functions, kernels, experiments);
criterion_main!(benches);
