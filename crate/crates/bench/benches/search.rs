use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use setfam::{maximize, Objective, SearchOptions};

fn search(c: &mut Criterion) {
    let opts = SearchOptions::default();
    let mut group = c.benchmark_group("search");
    group.sample_size(10);
    group.bench_function("max_union_size(7,5)", |b| {
        b.iter(|| maximize(black_box(&Objective::MaxUnionSize { n: 7, u: 5 }), &opts).unwrap())
    });
    group.bench_function("overflow_even(12,2)", |b| {
        b.iter(|| maximize(black_box(&Objective::OverflowEven { n: 12, d: 2 }), &opts).unwrap())
    });
    group.bench_function("upper_layers(8,4)", |b| {
        b.iter(|| maximize(black_box(&Objective::UpperLayers { n: 8, u: 4 }), &opts).unwrap())
    });
    group.bench_function("diversity(6,2) exhaustive", |b| {
        b.iter(|| maximize(black_box(&Objective::Diversity { n: 6, k: 2 }), &opts).unwrap())
    });
    group.finish();
}

criterion_group!(benches, search);
criterion_main!(benches);
