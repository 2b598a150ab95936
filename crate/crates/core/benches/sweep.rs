use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use weldpath::pdpc::Solver;
use weldpath::sweep::{all_instances, check_instance, map_seq, random_pairs};
use weldpath::weld::transposition_graph;

fn workloads() -> Vec<(&'static str, Solver, Vec<Vec<(usize, usize)>>)> {
    let s4 = Solver::new(&transposition_graph(4).unwrap()).unwrap();
    let rank4: Vec<_> = all_instances(s4.graph(), 3).into_iter().step_by(97).collect();
    let s5 = Solver::new(&transposition_graph(5).unwrap()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let rank5: Vec<_> = (0..300).map(|_| random_pairs(s5.graph(), 4, &mut rng)).collect();
    vec![("rank4", s4, rank4), ("rank5", s5, rank5)]
}

fn sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for (name, solver, instances) in workloads() {
        group.bench_with_input(BenchmarkId::new("seq", name), &instances, |b, inst| {
            b.iter(|| map_seq(inst, |p| check_instance(&solver, p).is_ok()))
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("par", name), &instances, |b, inst| {
            b.iter(|| weldpath::sweep::map_par(inst, |p| check_instance(&solver, p).is_ok()))
        });
    }
    group.finish();
}

criterion_group!(benches, sweep);
criterion_main!(benches);
