use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use daehee_core::claims::{find, run_claim, Grid};
use daehee_core::exec::Execution;

fn claim_runs(c: &mut Criterion) {
    let grid = Grid::default();
    let mut group = c.benchmark_group("claim_run");
    group.sample_size(10);
    for id in ["C5", "C8", "C12"] {
        let claim = find(id).expect("registered claim");
        for exec in [Execution::Sequential, Execution::Parallel] {
            group.bench_with_input(BenchmarkId::new(format!("{exec:?}"), id), &exec, |b, &exec| {
                b.iter(|| run_claim(claim, &grid, exec))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, claim_runs);
criterion_main!(benches);
