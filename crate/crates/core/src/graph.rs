//! Simple undirected graphs over stable vertex identifiers.
//!
//! Adjacency is stored as one bitset row per identifier, so neighborhood
//! unions and intersections are word-parallel. Transforms (`induced`,
//! `delete`, `contract`) return new graphs and never renumber vertices: a
//! vertex keeps its identifier through every reduction, which is what lets
//! certificates found on a reduced graph be stated in original identifiers.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::{VertexId, VertexSet};

#[derive(Clone, Default)]
pub struct Graph {
    present: VertexSet,
    adj: Vec<VertexSet>,
    edges: usize,
}

impl Graph {
    pub fn new() -> Self {
        Graph::default()
    }

    /// Graph on vertices `0..n` with no edges.
    pub fn empty(n: usize) -> Self {
        let mut g = Graph::new();
        for v in 0..n {
            g.add_vertex(v as VertexId);
        }
        g
    }

    /// Graph on vertices `0..n` with the given edges.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n as VertexId {
            for v in u + 1..n as VertexId {
                g.add_edge(u, v).expect("distinct vertices");
            }
        }
        g
    }

    /// Cycle through `ids` in the given order.
    pub fn cycle(ids: &[VertexId]) -> Result<Self> {
        let mut g = Graph::new();
        for (i, &v) in ids.iter().enumerate() {
            g.add_edge(v, ids[(i + 1) % ids.len()])?;
        }
        Ok(g)
    }

    /// Path through `ids` in the given order.
    pub fn path(ids: &[VertexId]) -> Result<Self> {
        let mut g = Graph::new();
        for &v in ids {
            g.add_vertex(v);
        }
        for w in ids.windows(2) {
            g.add_edge(w[0], w[1])?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: VertexId) -> bool {
        let i = v as usize;
        if i >= self.adj.len() {
            self.adj.resize_with(i + 1, VertexSet::new);
        }
        self.present.insert(v)
    }

    /// Adds `uv`, inserting missing endpoints. Returns whether the edge is new.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<bool> {
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.add_vertex(u);
        self.add_vertex(v);
        let fresh = self.adj[u as usize].insert(v);
        self.adj[v as usize].insert(u);
        if fresh {
            self.edges += 1;
        }
        Ok(fresh)
    }

    pub fn remove_edge(&mut self, u: VertexId, v: VertexId) -> bool {
        if !self.has_edge(u, v) {
            return false;
        }
        self.adj[u as usize].remove(v);
        self.adj[v as usize].remove(u);
        self.edges -= 1;
        true
    }

    pub fn remove_vertex(&mut self, v: VertexId) -> bool {
        if !self.present.remove(v) {
            return false;
        }
        let row = std::mem::take(&mut self.adj[v as usize]);
        for u in row.iter() {
            self.adj[u as usize].remove(v);
        }
        self.edges -= row.len();
        true
    }

    #[inline]
    pub fn contains(&self, v: VertexId) -> bool {
        self.present.contains(v)
    }

    #[inline]
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.contains(u) && self.adj[u as usize].contains(v)
    }

    pub fn vertex_count(&self) -> usize {
        self.present.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    /// One past the largest identifier ever inserted.
    pub fn id_bound(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.present.iter()
    }

    pub fn vertex_set(&self) -> &VertexSet {
        &self.present
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices()
            .flat_map(move |u| self.adj[u as usize].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Neighbors of a single vertex. Panics if `v` is not present.
    pub fn neighbors(&self, v: VertexId) -> &VertexSet {
        assert!(self.contains(v), "vertex {v} not in graph");
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.neighbors(v).len()
    }

    pub fn min_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    pub fn check_set(&self, x: &VertexSet) -> Result<()> {
        match x.iter().find(|&v| !self.contains(v)) {
            Some(v) => Err(Error::UnknownVertex(v)),
            None => Ok(()),
        }
    }

    /// Number of edges with one end in `x` and the other in `y`. An edge with
    /// both ends in `x ∩ y` is counted once.
    pub fn edge_count_between(&self, x: &VertexSet, y: &VertexSet) -> Result<usize> {
        self.check_set(x)?;
        self.check_set(y)?;
        let ordered: usize = x.iter().map(|v| self.adj[v as usize].intersection_len(y)).sum();
        let both = x.intersection(y);
        Ok(ordered - self.edges_within(&both))
    }

    /// Number of edges with at least one end in `x`.
    pub fn rho(&self, x: &VertexSet) -> Result<usize> {
        self.check_set(x)?;
        Ok(self.rho_unchecked(x))
    }

    pub(crate) fn rho_unchecked(&self, x: &VertexSet) -> usize {
        let deg: usize = x.iter().map(|v| self.adj[v as usize].len()).sum();
        deg - self.edges_within(x)
    }

    fn edges_within(&self, x: &VertexSet) -> usize {
        let twice: usize = x.iter().map(|v| self.adj[v as usize].intersection_len(x)).sum();
        twice / 2
    }

    /// `N(x)`: vertices outside `x` adjacent to some vertex of `x`.
    pub fn neighborhood(&self, x: &VertexSet) -> Result<VertexSet> {
        self.check_set(x)?;
        Ok(self.neighborhood_unchecked(x))
    }

    pub(crate) fn neighborhood_unchecked(&self, x: &VertexSet) -> VertexSet {
        let mut out = VertexSet::with_capacity(self.adj.len());
        for v in x.iter() {
            out.union_with(&self.adj[v as usize]);
        }
        out.difference_with(x);
        out
    }

    /// `N[v]`, the closed neighborhood of one vertex.
    pub fn closed_neighborhood(&self, v: VertexId) -> VertexSet {
        let mut s = self.neighbors(v).clone();
        s.insert(v);
        s
    }

    /// Subgraph induced by `x`; identifiers are preserved.
    pub fn induced(&self, x: &VertexSet) -> Result<Graph> {
        self.check_set(x)?;
        let mut g = Graph::new();
        for v in x.iter() {
            g.add_vertex(v);
        }
        let mut edges = 0;
        for v in x.iter() {
            let row = self.adj[v as usize].intersection(x);
            edges += row.len();
            g.adj[v as usize] = row;
        }
        g.edges = edges / 2;
        Ok(g)
    }

    /// `G - s`. Members of `s` that are not in the graph are rejected.
    pub fn delete(&self, s: &VertexSet) -> Result<Graph> {
        self.check_set(s)?;
        self.induced(&self.present.difference(s))
    }

    /// Connected components, each as a vertex set, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.present)
    }

    /// Components of `G[within]`, ordered by smallest member.
    pub(crate) fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut seen = VertexSet::with_capacity(self.adj.len());
        let mut out = Vec::new();
        for s in within.iter() {
            if seen.contains(s) {
                continue;
            }
            let comp = self.reach_within(s, within);
            seen.union_with(&comp);
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `start` inside `G[within]` (including `start`).
    pub(crate) fn reach_within(&self, start: VertexId, within: &VertexSet) -> VertexSet {
        let mut comp = VertexSet::with_capacity(self.adj.len());
        comp.insert(start);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for w in self.adj[u as usize].iter() {
                if within.contains(w) && comp.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        comp
    }

    /// Whether `G[x]` is connected. The empty set counts as disconnected.
    pub fn is_connected_set(&self, x: &VertexSet) -> bool {
        match x.first() {
            None => false,
            Some(s) => self.contains(s) && x.is_subset(&self.present) && self.reach_within(s, x).len() == x.len(),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_set(&self.present)
    }

    /// Shortest path from `u` to `v` inside `G[within]`, ties broken towards
    /// smaller identifiers.
    pub fn shortest_path_within(&self, u: VertexId, v: VertexId, within: &VertexSet) -> Option<Vec<VertexId>> {
        if !within.contains(u) || !within.contains(v) {
            return None;
        }
        let mut parent: BTreeMap<VertexId, VertexId> = BTreeMap::new();
        let mut queue = VecDeque::from([u]);
        parent.insert(u, u);
        while let Some(p) = queue.pop_front() {
            if p == v {
                let mut path = vec![v];
                let mut c = v;
                while c != u {
                    c = parent[&c];
                    path.push(c);
                }
                path.reverse();
                return Some(path);
            }
            for w in self.adj[p as usize].iter() {
                if within.contains(w) && !parent.contains_key(&w) {
                    parent.insert(w, p);
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// `G/uv`. The merged vertex keeps the identifier `u`; `trace` records
    /// which original vertices it now stands for.
    pub fn contract(&self, u: VertexId, v: VertexId, trace: &mut ContractionTrace) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let mut g = self.clone();
        let vn = g.adj[v as usize].clone();
        g.remove_vertex(v);
        for w in vn.iter() {
            if w != u {
                g.add_edge(u, w).expect("no loops");
            }
        }
        trace.merge(u, v);
        Ok(g)
    }

    /// Adds every missing edge inside `x`.
    pub fn make_clique(&mut self, x: &VertexSet) {
        let members = x.to_vec();
        for (i, &p) in members.iter().enumerate() {
            for &q in &members[i + 1..] {
                self.add_edge(p, q).expect("distinct vertices");
            }
        }
    }

    /// Whether `x` is a clique (sets of size < 2 count as cliques).
    pub fn is_clique(&self, x: &VertexSet) -> bool {
        x.iter().all(|v| self.contains(v) && {
            let mut others = x.clone();
            others.remove(v);
            others.is_subset(&self.adj[v as usize])
        })
    }

    /// Some clique of size `size` inside `G[within]`, lexicographically first.
    pub fn find_clique_within(&self, size: usize, within: &VertexSet) -> Option<Vec<VertexId>> {
        fn grow(g: &Graph, size: usize, cand: &VertexSet, acc: &mut Vec<VertexId>) -> bool {
            if acc.len() == size {
                return true;
            }
            if acc.len() + cand.len() < size {
                return false;
            }
            for v in cand.iter() {
                let mut next = cand.intersection(g.neighbors(v));
                next.difference_with(&(0..=v).collect());
                acc.push(v);
                if grow(g, size, &next, acc) {
                    return true;
                }
                acc.pop();
            }
            false
        }
        let cand = within.intersection(&self.present);
        let mut acc = Vec::with_capacity(size);
        grow(self, size, &cand, &mut acc).then_some(acc)
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.present == other.present
            && self.edges == other.edges
            && self.present.iter().all(|v| self.adj[v as usize] == other.adj[v as usize])
    }
}

impl Eq for Graph {}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.present)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Which original vertices each surviving vertex stands for after a run of
/// contractions. Vertices never touched by a contraction are implicit
/// singletons.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractionTrace {
    merged_from: BTreeMap<VertexId, VertexSet>,
}

impl ContractionTrace {
    pub fn new() -> Self {
        ContractionTrace::default()
    }

    pub fn merged_from(&self, v: VertexId) -> VertexSet {
        self.merged_from.get(&v).cloned().unwrap_or_else(|| VertexSet::singleton(v))
    }

    fn merge(&mut self, keep: VertexId, gone: VertexId) {
        let mut cell = self.merged_from(keep);
        cell.union_with(&self.merged_from(gone));
        self.merged_from.remove(&gone);
        self.merged_from.insert(keep, cell);
    }

    /// Expands a set of surviving vertices into the original vertices they represent.
    pub fn expand(&self, x: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new();
        for v in x.iter() {
            out.union_with(&self.merged_from(v));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[VertexId]) -> VertexSet {
        v.iter().collect()
    }

    fn c5() -> Graph {
        Graph::cycle(&[1, 2, 3, 4, 5]).unwrap()
    }

    #[test]
    fn edge_count_between_examples() {
        let tri = Graph::cycle(&[1, 2, 3]).unwrap();
        assert_eq!(tri.edge_count_between(&set(&[1]), &set(&[2])).unwrap(), 1);
        let g = c5();
        assert_eq!(g.edge_count_between(&VertexSet::new(), g.vertex_set()).unwrap(), 0);
        assert_eq!(g.edge_count_between(&set(&[1, 2]), &set(&[4, 5])).unwrap(), 1);
        // overlapping sets: 1-2 lies inside the overlap and counts once, plus 2-3
        assert_eq!(g.edge_count_between(&set(&[1, 2]), &set(&[1, 2, 3])).unwrap(), 2);
        assert_eq!(
            g.edge_count_between(&set(&[1, 9]), &set(&[2])),
            Err(Error::UnknownVertex(9))
        );
    }

    #[test]
    fn rho_examples() {
        let k4 = Graph::from_edges(5, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap().delete(&set(&[0])).unwrap();
        assert_eq!(k4.rho(&set(&[1])).unwrap(), 3);
        assert_eq!(k4.rho(k4.vertex_set()).unwrap(), 6);
        assert_eq!(k4.rho(&set(&[1, 2])).unwrap(), 5);
        assert!(k4.rho(&set(&[0])).is_err());
    }

    #[test]
    fn contract_examples() {
        let tri = Graph::cycle(&[1, 2, 3]).unwrap();
        let mut tr = ContractionTrace::new();
        let g = tri.contract(1, 2, &mut tr).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 3)]);
        assert_eq!(tr.merged_from(1), set(&[1, 2]));

        let mut tr = ContractionTrace::new();
        let g = c5().contract(3, 4, &mut tr).unwrap();
        assert_eq!(g, Graph::cycle(&[1, 2, 3, 5]).unwrap());

        // K4 minus 2-4: 1 and 3 share both other vertices, so 3 edges vanish
        // and the path 2-1-4 remains
        let g = Graph::from_edges(5, &[(1, 2), (1, 3), (1, 4), (2, 3), (3, 4)]).unwrap().delete(&set(&[0])).unwrap();
        let h = g.contract(1, 3, &mut ContractionTrace::new()).unwrap();
        assert_eq!(h, Graph::path(&[2, 1, 4]).unwrap());
        // K4 itself: contracting any edge gives a triangle
        let h = Graph::complete(4).contract(0, 1, &mut ContractionTrace::new()).unwrap();
        assert_eq!(h, Graph::cycle(&[0, 2, 3]).unwrap());

        assert_eq!(c5().contract(1, 3, &mut tr), Err(Error::NotAnEdge(1, 3)));
    }

    #[test]
    fn trace_chains_merges() {
        let g = Graph::path(&[0, 1, 2, 3]).unwrap();
        let mut tr = ContractionTrace::new();
        let g = g.contract(1, 2, &mut tr).unwrap();
        let g = g.contract(0, 1, &mut tr).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(tr.merged_from(0), set(&[0, 1, 2]));
        assert_eq!(tr.expand(&set(&[0, 3])), set(&[0, 1, 2, 3]));
    }

    #[test]
    fn neighborhood_delete_components() {
        let g = c5();
        assert_eq!(g.neighborhood(&set(&[1])).unwrap(), set(&[2, 5]));
        let k4 = Graph::complete(4);
        let k3 = k4.delete(&set(&[0])).unwrap();
        assert_eq!(k3.vertex_count(), 3);
        assert_eq!(k3.edge_count(), 3);
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.components(), vec![set(&[0, 1]), set(&[2, 3])]);
        assert!(!two.is_connected());
        assert_eq!(two.induced(&set(&[0, 1, 2])).unwrap().edge_count(), 1);
    }

    #[test]
    fn clique_search() {
        let g = Graph::complete(6);
        assert_eq!(g.find_clique_within(5, g.vertex_set()), Some(vec![0, 1, 2, 3, 4]));
        assert_eq!(c5().find_clique_within(3, c5().vertex_set()), None);
        assert!(g.is_clique(&set(&[1, 3, 5])));
    }

    #[test]
    fn shortest_path_respects_window() {
        let g = c5();
        let all = g.vertex_set().clone();
        assert_eq!(g.shortest_path_within(1, 3, &all), Some(vec![1, 2, 3]));
        let no2 = all.difference(&set(&[2]));
        assert_eq!(g.shortest_path_within(1, 3, &no2), Some(vec![1, 5, 4, 3]));
    }
}
