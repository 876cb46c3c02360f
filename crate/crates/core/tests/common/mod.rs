#![allow(dead_code)]

use minorlink::{Graph, VertexId, VertexSet};
use minorlink_oracle::Adj;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn set(v: &[VertexId]) -> VertexSet {
    v.iter().collect()
}

/// Relabels by rank so the oracle sees vertices `0..n`.
pub fn to_adj(g: &Graph) -> (Adj, Vec<VertexId>) {
    let ids: Vec<VertexId> = g.vertices().collect();
    let pos = |v: VertexId| ids.binary_search(&v).unwrap();
    let edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (pos(u), pos(v))).collect();
    (Adj::from_edges(ids.len(), &edges), ids)
}

pub fn from_adj(a: &Adj) -> Graph {
    let edges: Vec<(VertexId, VertexId)> = a.edges().into_iter().map(|(u, v)| (u as VertexId, v as VertexId)).collect();
    Graph::from_edges(a.n(), &edges).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gnp(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
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

/// `k` distinct vertices of `0..n` in random order.
pub fn random_roots(rng: &mut impl Rng, n: usize, k: usize) -> Vec<VertexId> {
    let mut all: Vec<VertexId> = (0..n as VertexId).collect();
    for i in 0..k {
        let j = rng.gen_range(i..n);
        all.swap(i, j);
    }
    all.truncate(k);
    all
}

/// The obstruction with one triangle: roots 0..5, apex pair 5, 6, triangle
/// 7, 8, 9 on {5, 6, 0, 2}. Built edge by edge, independently of the generator.
pub fn e1_by_hand() -> Graph {
    let mut edges = vec![(5, 6)];
    for x in 0..5 {
        edges.push((5, x));
        edges.push((6, x));
    }
    edges.extend([(7, 8), (8, 9), (7, 9)]);
    for c in 7..10 {
        for t in [5, 6, 0, 2] {
            edges.push((c, t));
        }
    }
    Graph::from_edges(10, &edges).unwrap()
}
