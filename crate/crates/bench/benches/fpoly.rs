use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use snakefrac::matchings::{self, DEFAULT_LIMIT};
use snakefrac::{fpoly, ContinuedFraction, SnakeGraph};

fn ones_between_twos(k: usize) -> ContinuedFraction {
    let mut entries = vec![2];
    entries.extend(std::iter::repeat_n(1, k));
    entries.push(2);
    ContinuedFraction::new(entries).unwrap()
}

fn symbolic(c: &mut Criterion) {
    let cf: ContinuedFraction = "2,3,4,2".parse().unwrap();
    c.bench_function("formula 2,3,4,2", |b| b.iter(|| fpoly::formula(black_box(&cf)).unwrap()));
    c.bench_function("graft 2,3,4,2", |b| b.iter(|| fpoly::graft(black_box(&cf)).unwrap()));

    let mut group = c.benchmark_group("ones");
    group.sample_size(10);
    for k in [6, 10, 14] {
        let cf = ones_between_twos(k);
        group.bench_with_input(BenchmarkId::new("formula", k), &cf, |b, cf| {
            b.iter(|| fpoly::formula(cf).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("graft", k), &cf, |b, cf| {
            b.iter(|| fpoly::graft(cf).unwrap())
        });
    }
    group.finish();
}

fn enumeration(c: &mut Criterion) {
    let g = SnakeGraph::build(&"4,4,4,4,4".parse().unwrap()).unwrap();
    let mut group = c.benchmark_group("matchings");
    group.sample_size(10);
    group.bench_function("enumerate 4,4,4,4,4", |b| {
        b.iter(|| matchings::enumerate(black_box(&g), DEFAULT_LIMIT).unwrap())
    });
    group.bench_function("f_polynomial 4,4,4,4,4", |b| {
        b.iter(|| matchings::f_polynomial(black_box(&g), None, DEFAULT_LIMIT).unwrap())
    });
    group.finish();
}

criterion_group!(benches, symbolic, enumeration);
criterion_main!(benches);
