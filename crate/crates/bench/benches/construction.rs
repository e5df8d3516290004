use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use orthogrid::geo::equal_count_partition;
use orthogrid::{build_h, build_l, colour_h, colour_rgg_dense, verify, DenseParams, EdgeSet, Graph, PointSet};
use orthogrid_bench::{dense_points, h_params, H_SHAPES};

fn clique_grids(c: &mut Criterion) {
    let mut group = c.benchmark_group("clique_grid");
    for shape in H_SHAPES {
        let p = h_params(shape);
        let label = format!("{}x{}x{}", shape.0, shape.1, shape.2);
        group.bench_with_input(BenchmarkId::new("colour_h", &label), &p, |b, &p| b.iter(|| colour_h(black_box(p))));
        let g = build_h(p).unwrap();
        let pair = colour_h(p);
        group.bench_with_input(BenchmarkId::new("verify_h", &label), &(g, pair), |b, (g, pair)| {
            b.iter(|| verify(g, pair).unwrap())
        });
    }
    let small = h_params(H_SHAPES[0]);
    group.bench_function("build_l/4x2x3", |b| b.iter(|| build_l(black_box(small)).unwrap()));
    group.finish();
}

fn geometric(c: &mut Criterion) {
    let mut group = c.benchmark_group("geometric");
    group.sample_size(20);
    for n in [1_000, 10_000] {
        let r = (n as f64).powf(-0.25);
        group.bench_with_input(BenchmarkId::new("sample", n), &n, |b, &n| b.iter(|| PointSet::sample(n, r, 7).unwrap()));
        let ps = dense_points(n, 7);
        group.bench_with_input(BenchmarkId::new("edge_count", n), &ps, |b, ps| b.iter(|| ps.graph().edge_count()));
        group.bench_with_input(BenchmarkId::new("materialise", n), &ps, |b, ps| {
            b.iter(|| Graph::from_edge_set(&ps.graph()))
        });
        let dp = DenseParams::derive(n, 0.25).unwrap();
        group.bench_with_input(BenchmarkId::new("colour_dense", n), &ps, |b, ps| {
            b.iter(|| colour_rgg_dense(ps, &ps.graph(), &dp))
        });
    }
    let ps = PointSet::sample(10_000, 0.05, 3).unwrap();
    group.bench_function("equal_count/100x10", |b| b.iter(|| equal_count_partition(&ps, 10, 10).unwrap()));
    group.finish();
}

criterion_group!(benches, clique_grids, geometric);
criterion_main!(benches);
