use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use mids_bench::gnp_suite;
use mids_core::mis::enumerate_bounded_with_stats;
use mids_core::{approx_partition, solve_graph};

fn exact(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact");
    for (n, seed, g) in gnp_suite(&[16, 20, 24, 28], 0.3, 0..1) {
        group.bench_with_input(
            BenchmarkId::new(format!("gnp_0.3_seed{seed}"), n),
            &g,
            |b, g| b.iter(|| black_box(solve_graph(g))),
        );
    }
    group.finish();
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_bounded");
    for (n, _, g) in gnp_suite(&[20, 30], 0.3, 0..1) {
        group.bench_with_input(BenchmarkId::new("n_over_4", n), &g, |b, g| {
            b.iter(|| black_box(enumerate_bounded_with_stats(g, g.n() / 4)))
        });
    }
    group.finish();
}

fn approximation(c: &mut Criterion) {
    let mut group = c.benchmark_group("approx_partition");
    group.sample_size(10);
    for (n, _, g) in gnp_suite(&[30], 0.15, 0..1) {
        group.bench_with_input(BenchmarkId::new("r3", n), &g, |b, g| {
            b.iter(|| black_box(approx_partition(g, 3.0).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, exact, enumeration, approximation);
criterion_main!(benches);
