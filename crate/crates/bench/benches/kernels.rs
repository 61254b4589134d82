use criterion::{criterion_group, criterion_main, Criterion};
use densepart_bench::{random_matrix, sign_matrix};
use densepart_core::moments::{connected_sums, h_derivatives_enumerated, DEFAULT_ENUM_BUDGET};
use densepart_core::oracle::{den_exact, h_coeffs_exact};
use densepart_core::phi::build_phi;
use densepart_core::pipeline::{approx_direct, extract_subset, ApproxConfig, ExtractEngine};
use densepart_core::roots::poly_roots;
use densepart_core::series::{truncated_compose, TruncatedSeries};
use densepart_core::Graph;
use std::hint::black_box;

fn bench_connected_sums(c: &mut Criterion) {
    let w = random_matrix(100, 0.3, 1);
    c.bench_function("connected_sums_n100", |b| {
        b.iter(|| black_box(connected_sums(black_box(&w))))
    });
}

fn bench_enumerated_derivatives(c: &mut Criterion) {
    let w = random_matrix(10, 0.3, 2);
    c.bench_function("h_derivatives_enumerated_n10_k3", |b| {
        b.iter(|| h_derivatives_enumerated(black_box(&w), 4, 3, DEFAULT_ENUM_BUDGET).unwrap())
    });
}

fn bench_den_exact(c: &mut Criterion) {
    let g = Graph::random_gnp(20, 0.5, 3).unwrap();
    c.bench_function("den_exact_n20_m5", |b| {
        b.iter(|| den_exact(black_box(&g), 5, 0.8).unwrap())
    });
}

fn bench_h_coeffs(c: &mut Criterion) {
    let w = sign_matrix(150, 4);
    c.bench_function("h_coeffs_exact_n150_m3", |b| {
        b.iter(|| h_coeffs_exact(black_box(&w), 3).unwrap())
    });
}

fn bench_roots(c: &mut Criterion) {
    let w = random_matrix(12, 0.4, 5);
    let p = h_coeffs_exact(&w, 7).unwrap();
    c.bench_function("poly_roots_deg21", |b| {
        b.iter(|| poly_roots(black_box(&p)).unwrap())
    });
}

fn bench_compose(c: &mut Criterion) {
    let phi = build_phi(0.3).unwrap();
    let r = 24usize;
    let outer = TruncatedSeries::new((0..=r).map(|k| 1.0 / (k + 1) as f64).collect());
    let inner = phi.truncated(r);
    c.bench_function("truncated_compose_r24", |b| {
        b.iter(|| truncated_compose(black_box(&outer), black_box(&inner), r).unwrap())
    });
}

fn bench_direct_method(c: &mut Criterion) {
    let g = Graph::random_gnp(100, 0.5, 6).unwrap();
    let cfg = ApproxConfig::direct_alpha(10, 0.2, 3);
    c.bench_function("approx_direct_n100_order3", |b| {
        b.iter(|| approx_direct(black_box(&g), &cfg).unwrap())
    });
}

fn bench_extraction(c: &mut Criterion) {
    let g = Graph::random_gnp(12, 0.5, 7).unwrap();
    c.bench_function("extract_exact_n12_m4", |b| {
        b.iter(|| extract_subset(black_box(&g), 4, 1.0, ExtractEngine::Exact).unwrap())
    });
}

criterion_group!(
    kernels,
    bench_connected_sums,
    bench_enumerated_derivatives,
    bench_den_exact,
    bench_h_coeffs,
    bench_roots,
    bench_compose,
    bench_direct_method,
    bench_extraction
);
criterion_main!(kernels);
