use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use wgeom_bench::{one_param, random};
use wgeom_core::closed_form::{
    pmax_two_qubit, pmax_w3, pmax_w4_two_param, pmax_wn_one_param,
};
use wgeom_core::oracle::{alternating_maximize, grid_search};
use wgeom_core::{build_witness, OracleConfig, WParams};

fn closed_forms(c: &mut Criterion) {
    let mut g = c.benchmark_group("closed_form");
    let w3 = WParams::new(vec![0.5, 0.6, 0.39f64.sqrt()]).unwrap();
    let two = random(2);
    g.bench_function("w3_circumradius", |b| b.iter(|| pmax_w3(black_box(&w3))));
    g.bench_function("wn_one_param_n8", |b| b.iter(|| pmax_wn_one_param(8, black_box(0.3))));
    g.bench_function("w4_two_param", |b| {
        b.iter(|| pmax_w4_two_param(black_box(0.3), black_box(0.4)))
    });
    g.bench_function("two_qubit", |b| b.iter(|| pmax_two_qubit(black_box(&two))));
    g.finish();
}

fn alternating(c: &mut Criterion) {
    let mut g = c.benchmark_group("alternating");
    g.sample_size(20);
    let config = OracleConfig {
        starts: 8,
        ..OracleConfig::default()
    };
    for n in [4, 8, 16] {
        let psi = one_param(n, 0.4);
        g.bench_with_input(BenchmarkId::new("w_state", n), &psi, |b, psi| {
            b.iter(|| alternating_maximize(psi, &config))
        });
    }
    for n in [4, 8] {
        let psi = random(n);
        g.bench_with_input(BenchmarkId::new("random", n), &psi, |b, psi| {
            b.iter(|| alternating_maximize(psi, &config))
        });
    }
    g.finish();
}

fn grid(c: &mut Criterion) {
    let mut g = c.benchmark_group("grid_search");
    g.sample_size(10);
    let two = random(2);
    let three = one_param(3, 0.5);
    g.bench_function("two_qubit_r64", |b| b.iter(|| grid_search(&two, 64)));
    g.bench_function("w3_r32", |b| b.iter(|| grid_search(&three, 32)));
    g.finish();
}

fn witness(c: &mut Criterion) {
    let w = build_witness(6, 0.5).unwrap();
    c.bench_function("witness/separable_scan_1000", |b| {
        b.iter(|| w.separable_scan(1000, 42))
    });
}

criterion_group!(benches, closed_forms, alternating, grid, witness);
criterion_main!(benches);
