//! Exact search for rooted cycle minors.
//!
//! Non-root vertices are visited in ascending identifier order and each is
//! placed into one of the `k` branch sets (ascending index) or left unused.
//! Unvisited vertices are "free". A node of the search is pruned when
//!
//! * some branch set can no longer be connected to its root through its own
//!   vertices plus free vertices, or
//! * an unsatisfied adjacency demand `X_i ~ X_{i+1}` has no candidate edge
//!   left between the regions the two sets could still grow into.
//!
//! At every node the placed vertices alone are tested as a model, so a
//! witness is reported as soon as the free vertices can all stay unused.
//! Graphs are packed into `u128` rows, which caps the engine at 128 vertices.

use super::model::{minimize_model, verify_model};
use super::{MinorModel, RootSequence};
use crate::error::{Error, Result};
use crate::{Graph, VertexId, VertexSet};

pub const MAX_VERTICES: usize = 128;

type Mask = u128;

#[inline]
fn bit(i: usize) -> Mask {
    1u128 << i
}

struct Packed {
    ids: Vec<VertexId>,
    adj: Vec<Mask>,
}

impl Packed {
    fn new(g: &Graph) -> Result<Self> {
        let ids: Vec<VertexId> = g.vertices().collect();
        if ids.len() > MAX_VERTICES {
            return Err(Error::Unsupported(format!(
                "exact search handles at most {MAX_VERTICES} vertices, graph has {}",
                ids.len()
            )));
        }
        let mut index = vec![usize::MAX; g.id_bound()];
        for (i, &v) in ids.iter().enumerate() {
            index[v as usize] = i;
        }
        let adj = ids
            .iter()
            .map(|&v| g.neighbors(v).iter().fold(0, |m, w| m | bit(index[w as usize])))
            .collect();
        Ok(Packed { ids, adj })
    }

    fn index_of(&self, v: VertexId) -> usize {
        self.ids.binary_search(&v).expect("validated vertex")
    }

    #[inline]
    fn nbrs(&self, mut m: Mask) -> Mask {
        let mut out = 0;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            out |= self.adj[i];
            m &= m - 1;
        }
        out
    }

    /// Closure of `start` inside `allowed`.
    #[inline]
    fn reach(&self, start: Mask, allowed: Mask) -> Mask {
        let mut r = start;
        let mut frontier = start;
        loop {
            let new = self.nbrs(frontier) & allowed & !r;
            if new == 0 {
                return r;
            }
            r |= new;
            frontier = new;
        }
    }

    fn to_set(&self, mut m: Mask) -> VertexSet {
        let mut s = VertexSet::new();
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            s.insert(self.ids[i]);
            m &= m - 1;
        }
        s
    }
}

/// Counters from one search.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
}

struct Search<'a> {
    p: &'a Packed,
    roots: Vec<usize>,
    order: Vec<usize>,
    sets: Vec<Mask>,
    free: Mask,
    nodes: u64,
}

impl Search<'_> {
    fn k(&self) -> usize {
        self.roots.len()
    }

    fn touching(&self, a: Mask, b: Mask) -> bool {
        self.p.nbrs(a) & b != 0
    }

    fn is_model(&self) -> bool {
        let k = self.k();
        (0..k).all(|i| self.p.reach(bit(self.roots[i]), self.sets[i]) == self.sets[i])
            && (0..k).all(|i| self.touching(self.sets[i], self.sets[(i + 1) % k]))
    }

    fn feasible(&self) -> bool {
        let k = self.k();
        let mut regions = [0 as Mask; super::MAX_ROOTS];
        for i in 0..k {
            let r = self.p.reach(bit(self.roots[i]), self.sets[i] | self.free);
            if self.sets[i] & !r != 0 {
                return false;
            }
            regions[i] = r;
        }
        (0..k).all(|i| {
            let j = (i + 1) % k;
            self.touching(self.sets[i], self.sets[j]) || self.touching(regions[i], regions[j])
        })
    }

    fn dfs(&mut self, pos: usize) -> bool {
        self.nodes += 1;
        if self.is_model() {
            return true;
        }
        if pos == self.order.len() {
            return false;
        }
        let v = self.order[pos];
        self.free &= !bit(v);
        for t in 0..self.k() {
            self.sets[t] |= bit(v);
            if self.feasible() && self.dfs(pos + 1) {
                return true;
            }
            self.sets[t] &= !bit(v);
        }
        if self.feasible() && self.dfs(pos + 1) {
            return true;
        }
        self.free |= bit(v);
        false
    }
}

/// Exact search with statistics. The returned model, if any, is verified and
/// inclusion-minimal.
pub fn find_rooted_cycle_minor_with_stats(g: &Graph, seq: &RootSequence) -> Result<(Option<MinorModel>, SearchStats)> {
    seq.validate_in(g)?;
    let p = Packed::new(g)?;
    let roots: Vec<usize> = seq.iter().map(|r| p.index_of(r)).collect();
    let root_mask = roots.iter().fold(0, |m, &r| m | bit(r));
    let order: Vec<usize> = (0..p.ids.len()).filter(|&i| root_mask & bit(i) == 0).collect();
    let free = order.iter().fold(0, |m, &i| m | bit(i));
    let mut s = Search { p: &p, roots: roots.clone(), order, sets: roots.iter().map(|&r| bit(r)).collect(), free, nodes: 0 };
    let found = s.feasible() && s.dfs(0);
    let stats = SearchStats { nodes: s.nodes };
    if !found {
        return Ok((None, stats));
    }
    let model = MinorModel::new(seq.clone(), s.sets.iter().map(|&m| p.to_set(m)).collect());
    let model = minimize_model(g, &model);
    if !verify_model(g, seq, &model).ok {
        return Err(Error::Internal("search produced an invalid model".into()));
    }
    Ok((Some(model), stats))
}

/// Decides whether `(g, x_1 .. x_k)` has a cycle minor rooted in that order.
/// `None` is a proof of absence: the search is exhaustive.
pub fn find_rooted_cycle_minor(g: &Graph, seq: &RootSequence) -> Result<Option<MinorModel>> {
    find_rooted_cycle_minor_with_stats(g, seq).map(|(m, _)| m)
}

/// Whether `g` has a `u`-`v` path. Unknown vertices have no paths.
pub fn path_exists(g: &Graph, u: VertexId, v: VertexId) -> bool {
    g.contains(u) && g.contains(v) && g.reach_within(u, g.vertex_set()).contains(v)
}
