use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use kronecker::sweep::SweepConfig;
use kronecker::*;
use kronecker_bench::factors;

fn bench_kappa(c: &mut Criterion) {
    let mut group = c.benchmark_group("kappa");
    for (name, graph) in factors() {
        group.bench_with_input(BenchmarkId::new("factor", name), &graph, |b, g| {
            b.iter(|| kappa(black_box(g)).unwrap())
        });
        let product = product_with_complete(&graph, 4).unwrap().into_graph();
        group.bench_with_input(BenchmarkId::new("product_k4", name), &product, |b, g| {
            b.iter(|| kappa(black_box(g)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("closed_form_k4", name), &graph, |b, g| {
            b.iter(|| kappa_product_fast(black_box(g), 4).unwrap())
        });
    }
    group.finish();
}

fn bench_cuts(c: &mut Criterion) {
    let mut group = c.benchmark_group("cuts");
    for (name, graph) in factors() {
        group.bench_with_input(BenchmarkId::new("min_vertex_cut", name), &graph, |b, g| {
            b.iter(|| min_vertex_cut(black_box(g)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("witness_cut_k4", name), &graph, |b, g| {
            b.iter(|| witness_cut(black_box(g), 4).unwrap())
        });
    }
    let petersen = graph::named::petersen();
    group.bench_function("brute_force_kappa/petersen", |b| {
        b.iter(|| brute_force_kappa(black_box(&petersen), 12).unwrap())
    });
    group.finish();
}

fn bench_io(c: &mut Criterion) {
    let product = product_with_complete(&graph::named::petersen(), 5)
        .unwrap()
        .into_graph();
    let encoded = write_graph6(&product);
    c.bench_function("graph6/write_petersen_k5", |b| {
        b.iter(|| write_graph6(black_box(&product)))
    });
    c.bench_function("graph6/parse_petersen_k5", |b| {
        b.iter(|| parse_graph6(black_box(&encoded)).unwrap())
    });
}

fn bench_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    group.bench_function("exhaustive_m4_n3", |b| {
        b.iter(|| run_sweep(&SweepConfig::exhaustive(4, vec![3])).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_kappa, bench_cuts, bench_io, bench_sweep);
criterion_main!(benches);
