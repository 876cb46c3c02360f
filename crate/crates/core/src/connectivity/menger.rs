//! Vertex-disjoint paths between vertex sets via unit vertex-capacity max
//! flow (vertex splitting, BFS augmentation in ascending vertex order).

use std::collections::VecDeque;

use serde::Serialize;

use super::Separation;
use crate::error::{Error, Result};
use crate::{Graph, VertexId, VertexSet};

/// Pairwise vertex-disjoint paths; each runs from a source to a sink and its
/// interior avoids both sets. A vertex in both sets is a one-vertex path.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PathSystem {
    pub paths: Vec<Vec<VertexId>>,
}

impl PathSystem {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// The path starting at `v`, if any.
    pub fn from_source(&self, v: VertexId) -> Option<&[VertexId]> {
        self.paths.iter().find(|p| p[0] == v).map(Vec::as_slice)
    }

    pub fn check(&self, g: &Graph, sources: &VertexSet, sinks: &VertexSet) -> std::result::Result<(), String> {
        let mut seen = VertexSet::new();
        for p in &self.paths {
            let (first, last) = (p[0], p[p.len() - 1]);
            if !sources.contains(first) || !sinks.contains(last) {
                return Err(format!("path {p:?} does not run from a source to a sink"));
            }
            if p.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
                return Err(format!("path {p:?} uses a non-edge"));
            }
            if p.len() > 2 && p[1..p.len() - 1].iter().any(|&v| sources.contains(v) || sinks.contains(v)) {
                return Err(format!("interior of {p:?} meets a terminal set"));
            }
            if p.len() > 1 && (sinks.contains(first) || sources.contains(last)) {
                return Err(format!("path {p:?} has a terminal that is both source and sink"));
            }
            for &v in p {
                if !seen.insert(v) {
                    return Err(format!("vertex {v} lies on two paths"));
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MengerOutcome {
    Paths(PathSystem),
    Separation(Separation),
}

/// Maximum flow capped at `limit`, with the minimum cut when the cap is not met.
#[derive(Clone, Debug)]
pub struct FlowResult {
    pub paths: PathSystem,
    pub cut: Option<Separation>,
}

struct Network {
    head: Vec<usize>,
    cap: Vec<u32>,
    adj: Vec<Vec<usize>>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Network { head: Vec::new(), cap: Vec::new(), adj: vec![Vec::new(); nodes] }
    }

    fn arc(&mut self, from: usize, to: usize, cap: u32) {
        self.adj[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(cap);
        self.adj[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
    }

    fn augment(&mut self, s: usize, t: usize) -> bool {
        let mut via = vec![usize::MAX; self.adj.len()];
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.adj[u] {
                let w = self.head[e];
                if self.cap[e] > 0 && !seen[w] {
                    seen[w] = true;
                    via[w] = e;
                    if w == t {
                        let mut c = t;
                        while c != s {
                            let e = via[c];
                            self.cap[e] -= 1;
                            self.cap[e ^ 1] += 1;
                            c = self.head[e ^ 1];
                        }
                        return true;
                    }
                    queue.push_back(w);
                }
            }
        }
        false
    }

    fn reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.adj[u] {
                let w = self.head[e];
                if self.cap[e] > 0 && !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen
    }
}

/// Up to `limit` vertex-disjoint `sources -> sinks` paths; when fewer exist,
/// also the separation `(A, B)` with `sources ⊆ A`, `sinks ⊆ B` whose order
/// equals the number of paths found.
pub fn disjoint_paths(g: &Graph, sources: &VertexSet, sinks: &VertexSet, limit: usize) -> Result<FlowResult> {
    g.check_set(sources)?;
    g.check_set(sinks)?;
    let ids: Vec<VertexId> = g.vertices().collect();
    let n = ids.len();
    let idx = |v: VertexId| ids.binary_search(&v).expect("present");
    let (src, snk) = (2 * n, 2 * n + 1);
    let inf = (n + 1) as u32;
    let mut net = Network::new(2 * n + 2);
    for &v in &ids {
        let i = idx(v);
        if sources.contains(v) {
            net.arc(src, 2 * i, inf);
        }
        net.arc(2 * i, 2 * i + 1, 1);
        if sinks.contains(v) {
            net.arc(2 * i + 1, snk, inf);
        }
        for w in g.neighbors(v).iter() {
            net.arc(2 * i + 1, 2 * idx(w), inf);
        }
    }
    let mut flow = 0;
    while flow < limit && net.augment(src, snk) {
        flow += 1;
    }

    // flow on an arc = capacity of its reverse arc
    let flow_on = |e: usize| net.cap[e ^ 1];
    let mut used = vec![0u32; net.head.len()];
    let mut paths = Vec::with_capacity(flow);
    for &e in &net.adj[src] {
        if e % 2 == 1 || flow_on(e) == 0 {
            continue;
        }
        let mut node = net.head[e];
        let mut walk = Vec::new();
        loop {
            let v = ids[node / 2];
            walk.push(v);
            let out = node + 1;
            let next = net.adj[out]
                .iter()
                .copied()
                .find(|&a| a % 2 == 0 && flow_on(a) > used[a])
                .expect("flow conservation");
            used[next] += 1;
            if net.head[next] == snk {
                break;
            }
            node = net.head[next];
        }
        let end = walk.iter().position(|&v| sinks.contains(v)).expect("walk ends at a sink");
        walk.truncate(end + 1);
        let start = walk.iter().rposition(|&v| sources.contains(v)).expect("walk starts at a source");
        paths.push(walk.split_off(start));
    }
    paths.sort();

    let cut = (flow < limit).then(|| {
        let r = net.reachable(src);
        let a: VertexSet = ids.iter().enumerate().filter(|&(i, _)| r[2 * i]).map(|(_, &v)| v).collect();
        let a_only: VertexSet = ids.iter().enumerate().filter(|&(i, _)| r[2 * i + 1]).map(|(_, &v)| v).collect();
        let b = g.vertex_set().difference(&a_only);
        Separation::new(a, b)
    });
    Ok(FlowResult { paths: PathSystem { paths }, cut })
}

/// Either `k` disjoint `sources -> sinks` paths or a separation of order
/// less than `k` with `sources ⊆ A` and `sinks ⊆ B`.
pub fn menger(g: &Graph, sources: &VertexSet, sinks: &VertexSet, k: usize) -> Result<MengerOutcome> {
    if k == 0 {
        return Err(Error::domain("menger needs k >= 1"));
    }
    let r = disjoint_paths(g, sources, sinks, k)?;
    Ok(match r.cut {
        None => MengerOutcome::Paths(r.paths),
        Some(sep) => MengerOutcome::Separation(sep),
    })
}

/// A minimum-order separation with `x ⊆ A` and `target ⊆ B`, together with
/// the dual path system of the same size, or `None` when `|x|` disjoint
/// paths exist.
pub fn min_root_separation(g: &Graph, x: &VertexSet, target: &VertexSet) -> Result<Option<(Separation, PathSystem)>> {
    if x.is_empty() || target.is_empty() {
        return Err(Error::domain("root and target sets must be nonempty"));
    }
    let r = disjoint_paths(g, x, target, x.len())?;
    Ok(r.cut.map(|sep| (sep, r.paths)))
}
