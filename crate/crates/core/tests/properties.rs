//! Invariants over random small graphs.

mod common;

use common::{from_adj, to_adj};
use minorlink::connectivity::{disjoint_paths, is_massed_with};
use minorlink::io::{parse_graph6, to_graph6};
use minorlink::minor::{find_rooted_cycle_minor, verify_model, RootSequence};
use minorlink::{ContractionTrace, Exec, Graph, VertexId, VertexSet};
use minorlink_oracle as oracle;
use num_rational::Ratio;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut i = 0;
            for u in 0..n as VertexId {
                for v in u + 1..n as VertexId {
                    if bits[i] {
                        g.add_edge(u, v).unwrap();
                    }
                    i += 1;
                }
            }
            g
        })
    })
}

fn subset(n: usize, mask: u64) -> VertexSet {
    (0..n as VertexId).filter(|&v| mask >> v & 1 == 1).collect()
}

fn roots(n: usize, k: usize, seed: u64) -> RootSequence {
    let mut rng = common::rng(seed);
    RootSequence::new(common::random_roots(&mut rng, n, k)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rho_is_additive_on_disjoint_sets(g in graph(9), a in any::<u64>(), b in any::<u64>()) {
        let n = g.vertex_count();
        let x = subset(n, a);
        let y = subset(n, b & !a);
        let lhs = g.rho(&x.union(&y)).unwrap();
        let rhs = g.rho(&x).unwrap() + g.rho(&y).unwrap() - g.edge_count_between(&x, &y).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn counts_match_oracle(g in graph(8), a in any::<u64>(), b in any::<u64>()) {
        let n = g.vertex_count();
        let (adj, _) = to_adj(&g);
        let mx: Vec<bool> = (0..n).map(|v| a >> v & 1 == 1).collect();
        let my: Vec<bool> = (0..n).map(|v| b >> v & 1 == 1).collect();
        prop_assert_eq!(g.rho(&subset(n, a)).unwrap(), oracle::rho(&adj, &mx));
        prop_assert_eq!(g.edge_count_between(&subset(n, a), &subset(n, b)).unwrap(), oracle::e(&adj, &mx, &my));
    }

    #[test]
    fn handshake(g in graph(10)) {
        let total: usize = g.vertices().map(|v| g.degree(v)).sum();
        prop_assert_eq!(total, 2 * g.edge_count());
    }

    #[test]
    fn contraction_edge_deficit(g in graph(9), pick in any::<usize>()) {
        let edges: Vec<_> = g.edges().collect();
        prop_assume!(!edges.is_empty());
        let (u, v) = edges[pick % edges.len()];
        let h = g.contract(u, v, &mut ContractionTrace::new()).unwrap();
        let common = g.neighbors(u).intersection_len(g.neighbors(v));
        prop_assert_eq!(h.vertex_count(), g.vertex_count() - 1);
        prop_assert_eq!(g.edge_count() - h.edge_count() - 1, common);
    }

    #[test]
    fn contraction_cells_partition_and_stay_connected(g in graph(9), picks in proptest::collection::vec(any::<usize>(), 1..6)) {
        let mut cur = g.clone();
        let mut trace = ContractionTrace::new();
        for p in picks {
            let edges: Vec<_> = cur.edges().collect();
            if edges.is_empty() {
                break;
            }
            let (u, v) = edges[p % edges.len()];
            cur = cur.contract(u, v, &mut trace).unwrap();
        }
        let mut seen = VertexSet::new();
        for w in cur.vertices() {
            let cell = trace.merged_from(w);
            prop_assert!(g.is_connected_set(&cell));
            prop_assert!(cell.is_disjoint(&seen));
            seen.union_with(&cell);
        }
        prop_assert_eq!(&seen, g.vertex_set());
    }

    #[test]
    fn graph6_roundtrip(g in graph(12)) {
        prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn answers_invariant_under_rotation_and_reflection(g in graph(7), k in 3usize..=5, seed in any::<u64>()) {
        let n = g.vertex_count();
        prop_assume!(n >= k);
        let s = roots(n, k, seed);
        let base = find_rooted_cycle_minor(&g, &s).unwrap().is_some();
        for img in s.dihedral_images() {
            prop_assert_eq!(find_rooted_cycle_minor(&g, &img).unwrap().is_some(), base);
        }
    }

    #[test]
    fn adding_an_edge_keeps_yes(g in graph(7), k in 3usize..=4, seed in any::<u64>(), pick in any::<usize>()) {
        let n = g.vertex_count();
        prop_assume!(n >= k);
        let s = roots(n, k, seed);
        let missing: Vec<(VertexId, VertexId)> = (0..n as VertexId)
            .flat_map(|u| (u + 1..n as VertexId).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        prop_assume!(!missing.is_empty());
        if find_rooted_cycle_minor(&g, &s).unwrap().is_some() {
            let (u, v) = missing[pick % missing.len()];
            let mut h = g.clone();
            h.add_edge(u, v).unwrap();
            prop_assert!(find_rooted_cycle_minor(&h, &s).unwrap().is_some());
        }
    }

    #[test]
    fn deleting_unused_vertex_keeps_yes(g in graph(8), k in 3usize..=5, seed in any::<u64>()) {
        let n = g.vertex_count();
        prop_assume!(n >= k);
        let s = roots(n, k, seed);
        if let Some(m) = find_rooted_cycle_minor(&g, &s).unwrap() {
            let unused = g.vertex_set().difference(&m.used_vertices());
            for v in unused.iter() {
                let h = g.delete(&VertexSet::singleton(v)).unwrap();
                prop_assert!(find_rooted_cycle_minor(&h, &s).unwrap().is_some());
            }
        }
    }

    #[test]
    fn models_are_sound(g in graph(10), k in 2usize..=5, seed in any::<u64>()) {
        let n = g.vertex_count();
        prop_assume!(n >= k);
        let s = roots(n, k, seed);
        if let Some(m) = find_rooted_cycle_minor(&g, &s).unwrap() {
            prop_assert!(verify_model(&g, &s, &m).ok);
        }
    }

    #[test]
    fn flow_order_equals_min_separator(g in graph(9), a in any::<u64>(), b in any::<u64>(), k in 1usize..=6) {
        let n = g.vertex_count();
        let src = subset(n, a);
        let snk = subset(n, b);
        prop_assume!(!src.is_empty() && !snk.is_empty());
        let r = disjoint_paths(&g, &src, &snk, k).unwrap();
        r.paths.check(&g, &src, &snk).unwrap();
        let (adj, _) = to_adj(&g);
        let s: Vec<usize> = src.iter().map(|v| v as usize).collect();
        let t: Vec<usize> = snk.iter().map(|v| v as usize).collect();
        let best = oracle::min_separator_size(&adj, &s, &t);
        prop_assert_eq!(r.paths.len(), best.min(k));
        if let Some(cut) = r.cut {
            prop_assert_eq!(cut.order(), r.paths.len());
            prop_assert!(cut.check(&g, Some(&src)).is_ok());
            prop_assert!(snk.is_subset(&cut.b));
        }
    }

    #[test]
    fn massed_matches_oracle(g in graph(8), a in any::<u64>(), num in 1i64..12, den in 1i64..4) {
        let n = g.vertex_count();
        let x = subset(n, a);
        prop_assume!(!x.is_empty() && x.len() <= 5);
        let lambda = Ratio::new(num, den);
        let seq = is_massed_with(&g, &x, lambda, Exec::Sequential).unwrap();
        let par = is_massed_with(&g, &x, lambda, Exec::Parallel).unwrap();
        prop_assert_eq!(&seq, &par);
        let (adj, _) = to_adj(&g);
        let xs: Vec<usize> = x.iter().map(|v| v as usize).collect();
        let o = oracle::is_massed(&adj, &xs, num, den);
        prop_assert_eq!((seq.m1_holds, seq.m2_holds), (o.m1, o.m2));
        if let Some(v) = seq.m2_violator {
            prop_assert!(v.order() < x.len());
            v.check(&g, Some(&x)).unwrap();
            let over = Ratio::from_integer(g.rho(&v.b_only()).unwrap() as i64) > lambda * v.b_only().len() as i64;
            prop_assert!(over);
        }
    }
}

#[test]
fn oracle_graphs_roundtrip_through_engine() {
    for n in 1..=5 {
        for a in oracle::connected_graphs(n) {
            let g = from_adj(&a);
            assert!(g.is_connected());
            assert_eq!(to_adj(&g).0, a);
        }
    }
}
