use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use dp1_core::geometry::{family_curve, EPoint, Surface};
use dp1_core::harness::{enumerate_curve_points_with, enumerate_surface_points_with};
use dp1_core::par::Execution;

fn modes() -> [(&'static str, Execution); 2] {
    [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)]
}

fn curve(c: &mut Criterion) {
    let curve = family_curve(&EPoint::from_ints(2, -1, -7).unwrap()).unwrap();
    let mut g = c.benchmark_group("curve_points_T64");
    for (name, exec) in modes() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &e| {
            b.iter(|| enumerate_curve_points_with(&curve, 64.0, e).unwrap().len())
        });
    }
    g.finish();
}

fn surface(c: &mut Criterion) {
    let s = Surface::main();
    let mut g = c.benchmark_group("surface_points_T4");
    g.sample_size(10);
    for (name, exec) in modes() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &e| {
            b.iter(|| enumerate_surface_points_with(&s, 4.0, e).unwrap().len())
        });
    }
    g.finish();
}

criterion_group!(benches, curve, surface);
criterion_main!(benches);
