//! Rooted cycles inside the closed neighborhood `H = G[N[a]]` of a
//! low-degree vertex `a`.
//!
//! A [`DenseNeighborhood`] can only be built when `H` has the density
//! package (size, no `K4` in `H - a`, degree floors). [`dense_construct`]
//! first tries a fixed set of explicit branch-set shapes, each under all
//! rotations and reflections of the root order, and falls back to exact
//! search inside `H`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::minor::{find_rooted_cycle_minor, verify_model, MinorModel, RootSequence};
use crate::{Graph, VertexId, VertexSet};

/// The first package condition that fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "clause", rename_all = "snake_case")]
pub enum DenseClause {
    ApexIsRoot,
    ApexNotDominating { vertex: VertexId },
    Size { vertices: usize },
    K4WithoutApex { clique: Vec<VertexId> },
    LowDegree { vertex: VertexId, degree: usize },
    RootFewOutside { root: VertexId, outside: usize },
    RootBudget { root: VertexId, total: usize },
}

impl fmt::Display for DenseClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DenseClause::ApexIsRoot => write!(f, "apex is a root"),
            DenseClause::ApexNotDominating { vertex } => write!(f, "apex is not adjacent to {vertex}"),
            DenseClause::Size { vertices } => write!(f, "|V(H)| = {vertices} is outside 7..=10"),
            DenseClause::K4WithoutApex { clique } => write!(f, "H - a contains the K4 {clique:?}"),
            DenseClause::LowDegree { vertex, degree } => {
                write!(f, "non-root {vertex} has {degree} neighbors in H, needs 6")
            }
            DenseClause::RootFewOutside { root, outside } => {
                write!(f, "root {root} has {outside} non-root neighbors in H, needs 2")
            }
            DenseClause::RootBudget { root, total } => {
                write!(f, "root {root}: non-root neighbors plus roots in H is {total}, needs 7")
            }
        }
    }
}

/// `H = G[N[a]]` together with the global roots it contains.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DenseNeighborhood {
    pub apex: VertexId,
    pub vertices: VertexSet,
    pub roots_in_h: VertexSet,
    #[serde(skip)]
    h: Graph,
}

impl DenseNeighborhood {
    /// Builds `H = G[N[apex]]` and checks the package against roots `x`.
    pub fn new(g: &Graph, x: &VertexSet, apex: VertexId) -> Result<std::result::Result<Self, DenseClause>> {
        g.check_vertex(apex)?;
        g.check_set(x)?;
        let h = g.induced(&g.closed_neighborhood(apex))?;
        Ok(Self::from_graph(h, apex, x))
    }

    /// Checks the package for a given `h` whose apex should dominate it.
    pub fn from_graph(h: Graph, apex: VertexId, x: &VertexSet) -> std::result::Result<Self, DenseClause> {
        if x.contains(apex) {
            return Err(DenseClause::ApexIsRoot);
        }
        if let Some(vertex) = h.vertices().find(|&v| v != apex && !h.has_edge(apex, v)) {
            return Err(DenseClause::ApexNotDominating { vertex });
        }
        let n = h.vertex_count();
        if !(7..=10).contains(&n) {
            return Err(DenseClause::Size { vertices: n });
        }
        let mut rest = h.vertex_set().clone();
        rest.remove(apex);
        if let Some(clique) = h.find_clique_within(4, &rest) {
            return Err(DenseClause::K4WithoutApex { clique });
        }
        let roots_in_h = h.vertex_set().intersection(x);
        for v in h.vertices() {
            let degree = h.degree(v);
            if !roots_in_h.contains(v) {
                if degree < 6 {
                    return Err(DenseClause::LowDegree { vertex: v, degree });
                }
            } else {
                let outside = h.neighbors(v).difference(x).len();
                if outside < 2 {
                    return Err(DenseClause::RootFewOutside { root: v, outside });
                }
                if outside + roots_in_h.len() < 7 {
                    return Err(DenseClause::RootBudget { root: v, total: outside + roots_in_h.len() });
                }
            }
        }
        Ok(DenseNeighborhood { apex, vertices: h.vertex_set().clone(), roots_in_h, h })
    }

    pub fn graph(&self) -> &Graph {
        &self.h
    }
}

/// A model inside `H` and the shape that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DenseModel {
    pub model: MinorModel,
    pub template: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tok {
    Apex,
    U(usize),
    Rest,
}

use Tok::{Apex as A, Rest as R, U};

/// Branch-set shapes indexed by root position; `U(i)` are distinct vertices
/// outside the roots and apex, `Rest` is every such vertex not named.
const FOUR: &[(&str, &[&[Tok]])] = &[("t4-hub", &[&[], &[U(0)], &[], &[A]]), ("t4-spread", &[&[], &[A], &[], &[R]])];

const FIVE: &[(&str, &[&[Tok]])] = &[
    ("t5-single", &[&[], &[A], &[], &[], &[U(0)]]),
    ("t5-pair", &[&[], &[U(0)], &[U(1)], &[], &[A]]),
    ("t5-pair-rest", &[&[U(0)], &[U(1)], &[], &[A], &[R]]),
    ("t5-triple", &[&[U(2)], &[U(1)], &[], &[U(0)], &[A]]),
    ("t5-triple-gap", &[&[U(0)], &[U(1)], &[], &[A], &[U(2)]]),
    ("t5-quad", &[&[A], &[], &[U(2)], &[U(0)], &[U(1), U(3)]]),
    ("t5-quad-chain", &[&[], &[U(2)], &[U(3)], &[U(0)], &[A]]),
    ("t5-hub-rest", &[&[A], &[], &[U(0)], &[R], &[]]),
    ("t5-split-rest", &[&[U(0)], &[], &[A], &[], &[R]]),
    ("t5-rest-chain", &[&[], &[U(0)], &[R], &[], &[A]]),
];

fn try_pattern(h: &Graph, apex: VertexId, seq: &RootSequence, u: &[VertexId], pattern: &[&[Tok]]) -> Option<MinorModel> {
    let t = seq.len();
    let named = pattern.iter().flat_map(|s| s.iter()).filter_map(|tok| match tok {
        U(i) => Some(i + 1),
        _ => None,
    });
    let need = named.max().unwrap_or(0);
    if need > u.len() {
        return None;
    }
    let mut pick = Vec::with_capacity(need);
    let mut used = vec![false; u.len()];
    try_assignments(h, apex, seq, u, pattern, t, need, &mut pick, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn try_assignments(
    h: &Graph,
    apex: VertexId,
    seq: &RootSequence,
    u: &[VertexId],
    pattern: &[&[Tok]],
    t: usize,
    need: usize,
    pick: &mut Vec<VertexId>,
    used: &mut [bool],
) -> Option<MinorModel> {
    if pick.len() == need {
        let rest: VertexSet = u.iter().zip(used.iter()).filter(|&(_, &b)| !b).map(|(&v, _)| v).collect();
        for r in 0..t {
            for reflect in [false, true] {
                let mut sets: Vec<VertexSet> = seq.iter().map(VertexSet::singleton).collect();
                for (slot, toks) in pattern.iter().enumerate() {
                    let pos = if reflect { (r + t - slot) % t } else { (r + slot) % t };
                    for tok in toks.iter() {
                        match tok {
                            A => {
                                sets[pos].insert(apex);
                            }
                            U(i) => {
                                sets[pos].insert(pick[*i]);
                            }
                            R => sets[pos].union_with(&rest),
                        }
                    }
                }
                let m = MinorModel::new(seq.clone(), sets);
                if verify_model(h, seq, &m).ok {
                    return Some(m);
                }
            }
        }
        return None;
    }
    for i in 0..u.len() {
        if !used[i] {
            used[i] = true;
            pick.push(u[i]);
            if let Some(m) = try_assignments(h, apex, seq, u, pattern, t, need, pick, used) {
                return Some(m);
            }
            pick.pop();
            used[i] = false;
        }
    }
    None
}

fn three_roots(h: &Graph, apex: VertexId, seq: &RootSequence) -> Option<MinorModel> {
    for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)] {
        let (xi, xj, xk) = (seq.get(i), seq.get(j), seq.get(k));
        let mut within = h.vertex_set().clone();
        within.remove(apex);
        within.remove(xk);
        let Some(path) = h.shortest_path_within(xi, xj, &within) else { continue };
        let mut sets = vec![VertexSet::new(); 3];
        sets[i] = path.iter().copied().filter(|&v| v != xj).collect();
        sets[j] = VertexSet::singleton(xj);
        sets[k] = [xk, apex].iter().collect();
        let m = MinorModel::new(seq.clone(), sets);
        if verify_model(h, seq, &m).ok {
            return Some(m);
        }
    }
    None
}

/// The explicit shapes only: `apex` must be adjacent to every other vertex
/// of `h` for them to apply, and no package condition is checked here.
pub fn apply_templates(h: &Graph, apex: VertexId, seq: &RootSequence) -> Option<DenseModel> {
    let mut others = h.vertex_set().difference(&seq.to_set());
    others.remove(apex);
    let u = others.to_vec();
    let done = |model: MinorModel, name: &str| Some(DenseModel { model, template: name.to_string() });
    match seq.len() {
        2 => {
            let m = MinorModel::new(seq.clone(), vec![[seq.get(0), apex].iter().collect(), VertexSet::singleton(seq.get(1))]);
            verify_model(h, seq, &m).ok.then(|| DenseModel { model: m, template: "t2-through-apex".into() })
        }
        3 => three_roots(h, apex, seq).and_then(|m| done(m, "t3-path-plus-apex")),
        4 => FOUR.iter().find_map(|(name, p)| try_pattern(h, apex, seq, &u, p).and_then(|m| done(m, name))),
        5 => FIVE.iter().find_map(|(name, p)| try_pattern(h, apex, seq, &u, p).and_then(|m| done(m, name))),
        _ => None,
    }
}

/// A rooted cycle minor of `(H, xprime)`: explicit shapes first, then exact
/// search in `H`. `None` means neither produced a model.
pub fn dense_construct(dn: &DenseNeighborhood, xprime: &RootSequence) -> Result<Option<DenseModel>> {
    let h = &dn.h;
    if xprime.len() > 5 {
        return Err(Error::domain(format!("at most 5 roots inside H, got {}", xprime.len())));
    }
    for r in xprime.iter() {
        if r == dn.apex || !h.contains(r) {
            return Err(Error::domain(format!("root {r} must lie in H and differ from the apex")));
        }
    }
    if !dn.roots_in_h.is_subset(&xprime.to_set()) {
        return Err(Error::domain("every global root inside H must be among the roots"));
    }
    if let Some(found) = apply_templates(h, dn.apex, xprime) {
        return Ok(Some(found));
    }
    Ok(find_rooted_cycle_minor(h, xprime)?.map(|model| DenseModel { model, template: "exact-search".into() }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[VertexId]) -> RootSequence {
        RootSequence::new(v.to_vec()).unwrap()
    }

    /// Apex 0 over a 6-cycle 1..=6.
    fn wheel() -> Graph {
        let mut g = Graph::cycle(&[1, 2, 3, 4, 5, 6]).unwrap();
        for v in 1..=6 {
            g.add_edge(0, v).unwrap();
        }
        g
    }

    #[test]
    fn wheel_two_roots_go_through_hub() {
        let g = wheel();
        let out = apply_templates(&g, 0, &seq(&[1, 4])).unwrap();
        assert_eq!(out.template, "t2-through-apex");
        assert_eq!(out.model.branch_sets[0], [0, 1].iter().collect());
        // the wheel is too small and sparse for the package
        assert!(matches!(DenseNeighborhood::from_graph(g, 0, &VertexSet::new()), Err(DenseClause::Size { vertices: 7 })
            | Err(DenseClause::LowDegree { .. })));
    }

    #[test]
    fn wheel_three_roots() {
        let out = apply_templates(&wheel(), 0, &seq(&[1, 3, 5])).unwrap();
        assert_eq!(out.template, "t3-path-plus-apex");
        assert!(verify_model(&wheel(), &seq(&[1, 3, 5]), &out.model).ok);
    }

    #[test]
    fn single_outside_vertex() {
        // apex 0, u = 6 joined to every root, roots 1..=5 with only 1-2 adjacent
        let mut g = Graph::empty(7);
        for v in 1..=6 {
            g.add_edge(0, v).unwrap();
        }
        for v in 1..=5 {
            g.add_edge(6, v).unwrap();
        }
        g.add_edge(1, 2).unwrap();
        let s = seq(&[1, 2, 3, 4, 5]);
        let out = apply_templates(&g, 0, &s).unwrap();
        assert_eq!(out.template, "t5-single");
        assert!(verify_model(&g, &s, &out.model).ok);
    }

    #[test]
    fn package_clauses() {
        let k8 = Graph::complete(8);
        assert!(matches!(DenseNeighborhood::from_graph(k8.clone(), 0, &VertexSet::new()), Err(DenseClause::K4WithoutApex { .. })));
        assert_eq!(DenseNeighborhood::from_graph(k8, 0, &VertexSet::singleton(0)), Err(DenseClause::ApexIsRoot));
        let mut g = wheel();
        g.add_vertex(9);
        assert_eq!(DenseNeighborhood::from_graph(g, 0, &VertexSet::new()), Err(DenseClause::ApexNotDominating { vertex: 9 }));
    }
}
