use std::fmt;

use serde::{Deserialize, Serialize};

use super::RootSequence;
use crate::{Graph, VertexId, VertexSet};

/// Branch sets `X_1 .. X_k` witnessing a rooted cycle minor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorModel {
    pub roots: RootSequence,
    pub branch_sets: Vec<VertexSet>,
}

impl MinorModel {
    pub fn new(roots: RootSequence, branch_sets: Vec<VertexSet>) -> Self {
        MinorModel { roots, branch_sets }
    }

    /// Every root alone in its own branch set.
    pub fn singletons(roots: &RootSequence) -> Self {
        MinorModel::new(roots.clone(), roots.iter().map(VertexSet::singleton).collect())
    }

    pub fn k(&self) -> usize {
        self.branch_sets.len()
    }

    pub fn used_vertices(&self) -> VertexSet {
        let mut all = VertexSet::new();
        for b in &self.branch_sets {
            all.union_with(b);
        }
        all
    }

    /// Total number of vertices across branch sets.
    pub fn size(&self) -> usize {
        self.branch_sets.iter().map(VertexSet::len).sum()
    }

    /// The same model read along a rotated/reflected root order, if `order`
    /// is a dihedral image of this model's roots.
    pub fn reindexed(&self, order: &RootSequence) -> Option<MinorModel> {
        let pos = |v: VertexId| self.roots.iter().position(|r| r == v);
        let sets = order
            .iter()
            .map(|r| pos(r).map(|i| self.branch_sets[i].clone()))
            .collect::<Option<Vec<_>>>()?;
        Some(MinorModel::new(order.clone(), sets))
    }
}

/// The first clause of the model definition that fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "clause", rename_all = "snake_case")]
pub enum Violation {
    RootsMismatch,
    WrongArity { expected: usize, found: usize },
    UnknownVertex { index: usize, vertex: VertexId },
    RootMissing { index: usize, root: VertexId },
    Overlap { first: usize, second: usize, vertex: VertexId },
    Disconnected { index: usize },
    MissingEdge { index: usize, next: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::RootsMismatch => write!(f, "model roots differ from the requested sequence"),
            Violation::WrongArity { expected, found } => write!(f, "expected {expected} branch sets, found {found}"),
            Violation::UnknownVertex { index, vertex } => write!(f, "branch set {index} holds unknown vertex {vertex}"),
            Violation::RootMissing { index, root } => write!(f, "root {root} is not in branch set {index}"),
            Violation::Overlap { first, second, vertex } => {
                write!(f, "branch sets {first} and {second} share vertex {vertex}")
            }
            Violation::Disconnected { index } => write!(f, "branch set {index} does not induce a connected subgraph"),
            Violation::MissingEdge { index, next } => write!(f, "no edge between branch sets {index} and {next}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub ok: bool,
    pub violation: Option<Violation>,
}

impl Verdict {
    fn fail(v: Violation) -> Self {
        Verdict { ok: false, violation: Some(v) }
    }
}

/// Checks every clause of a rooted cycle-minor model. Never panics on
/// well-formed identifiers; branch-set indices in diagnostics are 0-based.
pub fn verify_model(g: &Graph, seq: &RootSequence, m: &MinorModel) -> Verdict {
    if m.roots != *seq {
        return Verdict::fail(Violation::RootsMismatch);
    }
    let k = seq.len();
    if m.branch_sets.len() != k {
        return Verdict::fail(Violation::WrongArity { expected: k, found: m.branch_sets.len() });
    }
    for (i, b) in m.branch_sets.iter().enumerate() {
        if let Some(v) = b.iter().find(|&v| !g.contains(v)) {
            return Verdict::fail(Violation::UnknownVertex { index: i, vertex: v });
        }
    }
    for (i, b) in m.branch_sets.iter().enumerate() {
        if !b.contains(seq.get(i)) {
            return Verdict::fail(Violation::RootMissing { index: i, root: seq.get(i) });
        }
    }
    for i in 0..k {
        for j in i + 1..k {
            if let Some(v) = m.branch_sets[i].intersection(&m.branch_sets[j]).first() {
                return Verdict::fail(Violation::Overlap { first: i, second: j, vertex: v });
            }
        }
    }
    for (i, b) in m.branch_sets.iter().enumerate() {
        if !g.is_connected_set(b) {
            return Verdict::fail(Violation::Disconnected { index: i });
        }
    }
    for i in 0..k {
        let j = (i + 1) % k;
        let touching = m.branch_sets[i].iter().any(|v| !g.neighbors(v).is_disjoint(&m.branch_sets[j]));
        if !touching {
            return Verdict::fail(Violation::MissingEdge { index: i, next: j });
        }
    }
    Verdict { ok: true, violation: None }
}

/// Drops non-root vertices one at a time (ascending, branch set by branch
/// set) while the model stays valid, until no single removal is possible.
pub fn minimize_model(g: &Graph, m: &MinorModel) -> MinorModel {
    let mut cur = m.clone();
    loop {
        let mut changed = false;
        for i in 0..cur.k() {
            let root = cur.roots.get(i);
            for v in cur.branch_sets[i].to_vec() {
                if v == root {
                    continue;
                }
                cur.branch_sets[i].remove(v);
                if verify_model(g, &cur.roots, &cur).ok {
                    changed = true;
                } else {
                    cur.branch_sets[i].insert(v);
                }
            }
        }
        if !changed {
            return cur;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[VertexId]) -> RootSequence {
        RootSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn identity_on_five_cycle() {
        let g = Graph::cycle(&[1, 2, 3, 4, 5]).unwrap();
        let s = seq(&[1, 2, 3, 4, 5]);
        let m = MinorModel::singletons(&s);
        assert!(verify_model(&g, &s, &m).ok);

        let mut swapped = m.clone();
        swapped.branch_sets.swap(1, 2);
        let v = verify_model(&g, &s, &swapped);
        assert!(!v.ok);
        assert_eq!(v.violation, Some(Violation::RootMissing { index: 1, root: 2 }));
    }

    #[test]
    fn each_clause_reported() {
        let g = Graph::path(&[1, 2, 3, 4, 5]).unwrap();
        let s = seq(&[1, 3, 5]);
        let mk = |sets: &[&[VertexId]]| MinorModel::new(s.clone(), sets.iter().map(|b| b.iter().collect()).collect());
        assert_eq!(verify_model(&g, &s, &mk(&[&[1], &[3]])).violation, Some(Violation::WrongArity { expected: 3, found: 2 }));
        assert_eq!(
            verify_model(&g, &s, &mk(&[&[1, 9], &[3], &[5]])).violation,
            Some(Violation::UnknownVertex { index: 0, vertex: 9 })
        );
        assert_eq!(
            verify_model(&g, &s, &mk(&[&[1, 2], &[2, 3], &[5]])).violation,
            Some(Violation::Overlap { first: 0, second: 1, vertex: 2 })
        );
        assert_eq!(verify_model(&g, &s, &mk(&[&[1], &[3], &[5, 2]])).violation, Some(Violation::Disconnected { index: 2 }));
        assert_eq!(
            verify_model(&g, &s, &mk(&[&[1, 2], &[3], &[5, 4]])).violation,
            Some(Violation::MissingEdge { index: 2, next: 0 })
        );
        let other = seq(&[1, 5, 3]);
        assert_eq!(verify_model(&g, &other, &mk(&[&[1], &[3], &[5]])).violation, Some(Violation::RootsMismatch));
    }

    #[test]
    fn minimize_drops_slack() {
        let g = Graph::complete(6);
        let s = seq(&[0, 1, 2]);
        let m = MinorModel::new(s.clone(), vec![[0, 3, 4].iter().collect(), [1, 5].iter().collect(), VertexSet::singleton(2)]);
        assert!(verify_model(&g, &s, &m).ok);
        assert_eq!(minimize_model(&g, &m), MinorModel::singletons(&s));
    }

    #[test]
    fn json_shape() {
        let s = seq(&[1, 2, 3]);
        let m = MinorModel::new(s, vec![[1, 7].iter().collect(), VertexSet::singleton(2), VertexSet::singleton(3)]);
        assert_eq!(serde_json::to_string(&m).unwrap(), r#"{"roots":[1,2,3],"branch_sets":[[1,7],[2],[3]]}"#);
    }
}
