//! Compares the rayon-parallel enumerations against the sequential
//! fallback on the two heavy operations: derived saturation (λ-sweep) and
//! Betti tables ((e, μ)-sweep).
//!
//! Run with `cargo bench -p tca`.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use tca::exec::Strategy;
use tca::localcoh::derived_saturation_with;
use tca::partitions::Partition;
use tca::resolutions::betti_table_with;

fn bench_derived_saturation(c: &mut Criterion) {
    let mut group = c.benchmark_group("derived_saturation");
    let mu = Partition::new(vec![3, 1]).unwrap();
    for cutoff in [20usize, 28] {
        group.bench_with_input(
            BenchmarkId::new("sequential", cutoff),
            &cutoff,
            |b, &cutoff| {
                b.iter(|| derived_saturation_with(Strategy::Sequential, &mu, 3, 1, cutoff))
            },
        );
        group.bench_with_input(
            BenchmarkId::new("parallel", cutoff),
            &cutoff,
            |b, &cutoff| b.iter(|| derived_saturation_with(Strategy::Parallel, &mu, 3, 1, cutoff)),
        );
    }
    group.finish();
}

fn bench_betti_table(c: &mut Criterion) {
    let mut group = c.benchmark_group("betti_table");
    let lam = Partition::empty();
    for i_max in [12usize, 16] {
        group.bench_with_input(
            BenchmarkId::new("sequential", i_max),
            &i_max,
            |b, &i_max| {
                b.iter(|| betti_table_with(Strategy::Sequential, &lam, 4, 4, i_max).unwrap())
            },
        );
        group.bench_with_input(BenchmarkId::new("parallel", i_max), &i_max, |b, &i_max| {
            b.iter(|| betti_table_with(Strategy::Parallel, &lam, 4, 4, i_max).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_derived_saturation, bench_betti_table);
criterion_main!(benches);
