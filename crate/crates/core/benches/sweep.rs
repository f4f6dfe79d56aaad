use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use chargraph::par::Exec;
use chargraph::search::{alpha_profiles, sweep_profiles, SolvableShape};

fn profiles(c: &mut Criterion) {
    let mut group = c.benchmark_group("alpha_profiles");
    group.sample_size(10);
    for exec in [Exec::Sequential, Exec::Parallel] {
        group.bench_with_input(BenchmarkId::new(format!("{exec:?}"), "2..=90"), &exec, |b, &exec| {
            b.iter(|| alpha_profiles(black_box(2..=90), exec).unwrap())
        });
    }
    group.finish();
}

fn sweep(c: &mut Criterion) {
    let profiles = alpha_profiles(2..=60, Exec::default()).unwrap();
    let mut group = c.benchmark_group("sweep_profiles");
    for exec in [Exec::Sequential, Exec::Parallel] {
        for n in [5usize, 7] {
            group.bench_with_input(BenchmarkId::new(format!("{exec:?}"), n), &n, |b, &n| {
                b.iter(|| sweep_profiles(exec, n, &profiles, 2..=60, &SolvableShape::ALL).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, profiles, sweep);
criterion_main!(benches);
