use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use nbnc_core::generators::gnp;
use nbnc_core::{
    eigenvalues, laplacian, parse_edge_list, rank_nodes, run_sweep, run_trials, select_vaccinees,
    Graph, Network, SimConfig, SplitMix64, Strategy, SweepGrid,
};

fn karate() -> Graph {
    let text = include_str!("../../../fixtures/karate.txt");
    parse_edge_list(text).unwrap()
}

fn ranking(c: &mut Criterion) {
    let g = karate();
    let mut group = c.benchmark_group("rank");
    for s in Strategy::ALL {
        group.bench_function(BenchmarkId::new("karate", s), |b| {
            b.iter(|| rank_nodes(black_box(&g), s).unwrap())
        });
    }
    group.finish();
}

fn jacobi(c: &mut Criterion) {
    let mut group = c.benchmark_group("laplacian_eigenvalues");
    for n in [8, 16, 32, 64] {
        let g = gnp(n, 0.3, &mut SplitMix64::new(n as u64));
        let m = laplacian(&g);
        group.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| {
            b.iter(|| eigenvalues(black_box(m)).unwrap())
        });
    }
    group.finish();
}

fn trials(c: &mut Criterion) {
    let g = karate();
    let vaccinees = select_vaccinees(&g, Strategy::Nbnc, 0.1).unwrap();
    let config = SimConfig::new(0.5, 0.25, 20, 1).unwrap();
    c.bench_function("karate_50_trials", |b| {
        b.iter(|| run_trials(black_box(&g), &config, &vaccinees, 50).unwrap())
    });
    let nets = [Network::new("karate", g.clone())];
    let grid = SweepGrid::default();
    c.bench_function("karate_full_grid", |b| {
        b.iter(|| run_sweep(black_box(&nets), &grid).unwrap())
    });
}

criterion_group!(benches, ranking, jacobi, trials);
criterion_main!(benches);
