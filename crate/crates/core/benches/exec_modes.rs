use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use minorlink::connectivity::is_massed_with;
use minorlink::minor::is_cycle_linked_with;
use minorlink::{Exec, Graph, VertexId, VertexSet};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn dense_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    for u in 0..n as VertexId {
        for v in u + 1..n as VertexId {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

fn cycle_linked(c: &mut Criterion) {
    let g = dense_graph(14, 0.75, 1);
    let x: VertexSet = (0..5).collect();
    let mut group = c.benchmark_group("cycle_linked_n14_k5");
    for exec in [Exec::Sequential, Exec::Parallel] {
        group.bench_with_input(BenchmarkId::from_parameter(format!("{exec:?}")), &exec, |b, &exec| {
            b.iter(|| is_cycle_linked_with(black_box(&g), &x, exec).unwrap())
        });
    }
    group.finish();
}

fn massed(c: &mut Criterion) {
    let g = dense_graph(24, 0.6, 2);
    let x: VertexSet = (0..5).collect();
    let mut group = c.benchmark_group("massed_n24_x5");
    for exec in [Exec::Sequential, Exec::Parallel] {
        group.bench_with_input(BenchmarkId::from_parameter(format!("{exec:?}")), &exec, |b, &exec| {
            b.iter(|| is_massed_with(black_box(&g), &x, 5.into(), exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, cycle_linked, massed);
criterion_main!(benches);
