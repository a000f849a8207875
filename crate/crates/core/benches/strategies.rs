use std::hint::black_box;

use bihoradam_core::{bh_term, EvalStrategy, HoradamParams};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn strategies(c: &mut Criterion) {
    let fib = HoradamParams::fibonacci();
    let mut group = c.benchmark_group("bh_term");
    for n in [64i64, 1024, 16384] {
        for strategy in EvalStrategy::ALL {
            if strategy == EvalStrategy::GeneratingFunction && n > 1024 {
                continue;
            }
            group.bench_with_input(BenchmarkId::new(strategy.name(), n), &n, |b, &n| {
                b.iter(|| bh_term(black_box(n), &fib, strategy).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, strategies);
criterion_main!(benches);
