//! A constructive solver for rooted `C_k`-minors (`k <= 5`) on 5-massed
//! instances.
//!
//! Rules are tried in order at every level:
//!
//! 1. **Separation split.** A separation `(A, B)` of order at most 5 with
//!    `(G[B], A ∩ B)` cycle-linked: recurse on `G[A]` with `A ∩ B` made a
//!    clique. The two instances are equivalent, so both answers propagate.
//! 2. **Contraction.** An edge `uv` not inside `X` whose ends share too few
//!    neighbors: recurse on `G/uv` and lift. A negative answer there is not
//!    conclusive, so this level then falls back to exact search.
//! 3. **Dense neighborhood.** A vertex `a` outside `X` of degree below 10
//!    whose closed neighborhood has the density package: route `|X|`
//!    disjoint paths from `X` into `N[a]`, solve inside it and compose.
//!
//! Otherwise the exact engine decides. A top-level negative answer is
//! explained by the obstruction family when possible; if not, the instance is
//! reported as a counterexample. Every model returned is verified against
//! the input graph.

mod dense;
mod lift;
mod trace;

use serde::Serialize;

pub use dense::{apply_templates, dense_construct, DenseClause, DenseModel, DenseNeighborhood};
pub use lift::lift_model;
pub use trace::{ReductionTrace, Step};

use crate::connectivity::{disjoint_paths, is_massed, is_rigid, MassedReport, Separation};
use crate::error::{Error, Result};
use crate::extremal::{recognize, validate, ExtremalCertificate};
use crate::minor::{find_rooted_cycle_minor, verify_model, MinorModel, RootSequence};
use crate::{Graph, VertexId, VertexSet};

/// Largest separator count rule 1 will scan at one level.
const SPLIT_BUDGET: u128 = 2_000_000;

#[derive(Debug, thiserror::Error)]
pub enum SolveError {
    #[error("instance is not 5-massed")]
    NotMassed(Box<MassedReport>),
    #[error(transparent)]
    Engine(#[from] Error),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Outcome {
    Model { model: MinorModel },
    Extremal { certificate: ExtremalCertificate },
    /// No model and no obstruction certificate: would refute the theorem.
    Counterexample { graph6: String, roots: RootSequence },
}

/// Facts checked along the way that the theory predicts for instances where
/// no model exists.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Observations {
    /// `|∩_{x ∈ X} N(x)|` in the input graph.
    pub common_root_neighbors: usize,
    /// Largest `rho(C) - 5|C|` over components `C` avoiding `X` behind a
    /// separator of size exactly 5, in the input graph.
    pub order5_max_excess: Option<i64>,
    /// Rule-3 entries without a vertex of degree below 10 outside `X`.
    pub missing_low_degree: usize,
    /// Rule-3 entries whose working graph contains a `K5`.
    pub k5_present: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveReport {
    pub outcome: Outcome,
    pub trace: ReductionTrace,
    pub observations: Observations,
    /// Anomalies seen on a level that is 5-massed and has no model.
    pub falsifiers: Vec<String>,
    /// Human-readable rule firings, including attempts that did not pay off.
    #[serde(skip)]
    pub explain: Vec<String>,
}

/// Which rules may fire; all are on by default.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SolveOptions {
    pub split: bool,
    pub contract: bool,
    pub dense: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { split: true, contract: true, dense: true }
    }
}

struct Session {
    options: SolveOptions,
    explain: Vec<String>,
    observations: Observations,
    falsifiers: Vec<String>,
}

impl Session {
    fn log(&mut self, depth: usize, msg: String) {
        self.explain.push(format!("{}{msg}", "  ".repeat(depth)));
    }
}

fn binomial_sum(n: usize, upto: usize) -> u128 {
    let mut total = 0u128;
    let mut c = 1u128;
    for j in 0..=upto.min(n) {
        total += c;
        c = c * (n - j) as u128 / (j + 1) as u128;
    }
    total
}

/// All subsets of `ids` of size `size`, lexicographic.
fn subsets(ids: &[VertexId], size: usize, mut f: impl FnMut(&VertexSet) -> bool) {
    let n = ids.len();
    if size > n {
        return;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        let s: VertexSet = idx.iter().map(|&i| ids[i]).collect();
        if f(&s) {
            return;
        }
        let Some(p) = (0..size).rev().find(|&p| idx[p] != p + n - size) else { return };
        idx[p] += 1;
        for q in p + 1..size {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

/// The union of components of `G - s` avoiding `x`.
fn far_side(g: &Graph, x: &VertexSet, s: &VertexSet) -> VertexSet {
    let mut side = VertexSet::new();
    for c in g.components_within(&g.vertex_set().difference(s)) {
        if c.is_disjoint(x) {
            side.union_with(&c);
        }
    }
    side
}

/// First rigid split of order 1..=5 (size, then lexicographic) with
/// `A \ B` nonempty that shrinks `|V| + |E|`.
fn find_split(g: &Graph, x: &VertexSet) -> Result<Option<Separation>> {
    let n = g.vertex_count();
    if binomial_sum(n, 5) > SPLIT_BUDGET {
        return Ok(None);
    }
    let ids: Vec<VertexId> = g.vertices().collect();
    let mut found = None;
    let mut err = None;
    for size in 1..=5 {
        subsets(&ids, size, |s| {
            let side = far_side(g, x, s);
            // the far side must be nonempty and the near side must keep a vertex off the separator
            if side.is_empty() || side.len() + s.len() == g.vertex_count() {
                return false;
            }
            let sep = Separation::from_side(g, s, &side);
            let missing = s.len() * (s.len() - 1) / 2 - g.induced(s).map(|h| h.edge_count()).unwrap_or(0);
            if side.len() + g.rho_unchecked(&side) <= missing {
                return false;
            }
            match is_rigid(g, x, &sep) {
                Ok(true) => {
                    found = Some(sep);
                    true
                }
                Ok(false) => false,
                Err(e) => {
                    err = Some(e);
                    true
                }
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// First edge (ascending) not inside `x` whose ends share too few neighbors.
fn sparse_edge(g: &Graph, x: &VertexSet) -> Option<(VertexId, VertexId)> {
    g.edges().find(|&(u, v)| {
        let common = g.neighbors(u).intersection(g.neighbors(v));
        match (x.contains(u), x.contains(v)) {
            (true, true) => false,
            (false, false) => common.len() < 5,
            (in_u, _) => {
                let other = if in_u { v } else { u };
                common.difference(x).len() + g.neighbors(other).intersection_len(x) < 6
            }
        }
    })
}

/// Order-5 separator excess: `max rho(C) - 5|C|` over `x`-avoiding
/// components behind separators of size exactly 5.
fn order5_excess(g: &Graph, x: &VertexSet) -> Option<i64> {
    if binomial_sum(g.vertex_count(), 5) > SPLIT_BUDGET {
        return None;
    }
    let ids: Vec<VertexId> = g.vertices().collect();
    let mut best: Option<i64> = None;
    subsets(&ids, 5, |s| {
        for c in g.components_within(&g.vertex_set().difference(s)) {
            if c.is_disjoint(x) && g.neighborhood_unchecked(&c).len() == 5 {
                let excess = g.rho_unchecked(&c) as i64 - 5 * c.len() as i64;
                best = Some(best.map_or(excess, |b| b.max(excess)));
            }
        }
        false
    });
    best
}

fn is_five_massed(g: &Graph, x: &VertexSet) -> bool {
    is_massed(g, x, 5.into()).map(|r| r.massed()).unwrap_or(false)
}

struct Level {
    model: Option<MinorModel>,
    steps: Vec<Step>,
}

fn solve_level(g: &Graph, seq: &RootSequence, depth: usize, ses: &mut Session) -> Result<Level> {
    let x = seq.to_set();

    let split = if ses.options.split { find_split(g, &x)? } else { None };
    if let Some(sep) = split {
        ses.log(depth, format!("split: separator {:?}, far side {:?}", sep.separator(), sep.b_only()));
        let step = Step::SeparationSplit { separation: sep };
        let reduced = step.apply(g)?;
        let sub = solve_level(&reduced, seq, depth + 1, ses)?;
        let mut steps = vec![step.clone()];
        steps.extend(sub.steps);
        let model = match sub.model {
            Some(m) => Some(lift_model(g, seq, &m, &step)?),
            None => None,
        };
        return Ok(Level { model, steps });
    }

    let sparse = if ses.options.contract { sparse_edge(g, &x) } else { None };
    if let Some((p, q)) = sparse {
        let (u, v) = if x.contains(q) { (q, p) } else { (p, q) };
        ses.log(depth, format!("contract: {u}-{v}"));
        let step = Step::Contraction { u, v };
        let reduced = step.apply(g)?;
        let sub = solve_level(&reduced, seq, depth + 1, ses)?;
        if let Some(m) = sub.model {
            let mut steps = vec![step.clone()];
            steps.extend(sub.steps);
            return Ok(Level { model: Some(lift_model(g, seq, &m, &step)?), steps });
        }
        ses.log(depth, format!("contract: {u}-{v} gave no model, searching here"));
        return fallback(g, seq, depth, ses);
    }

    if !ses.options.dense {
        return fallback(g, seq, depth, ses);
    }
    let others = g.vertex_set().difference(&x);
    let low: Vec<VertexId> = others.iter().filter(|&v| g.degree(v) < 10).collect();
    let mut anomalies = Vec::new();
    if low.is_empty() {
        ses.observations.missing_low_degree += 1;
        anomalies.push("no vertex outside X has degree below 10".to_string());
    }
    if let Some(k5) = g.find_clique_within(5, g.vertex_set()) {
        ses.observations.k5_present += 1;
        anomalies.push(format!("K5 {k5:?} at dense-neighborhood entry"));
    }
    for &a in &low {
        let dn = match DenseNeighborhood::new(g, &x, a)? {
            Ok(dn) => dn,
            Err(clause) => {
                ses.log(depth, format!("dense: apex {a} rejected ({clause})"));
                continue;
            }
        };
        let flow = disjoint_paths(g, &x, &dn.vertices, x.len())?;
        if flow.cut.is_some() {
            ses.log(depth, format!("dense: apex {a}, fewer than {} disjoint paths into N[a]", x.len()));
            continue;
        }
        let ends: Vec<VertexId> = seq
            .iter()
            .map(|r| *flow.paths.from_source(r).expect("one path per root").last().expect("nonempty"))
            .collect();
        let xprime = RootSequence::new(ends)?;
        let Some(found) = dense_construct(&dn, &xprime)? else {
            ses.log(depth, format!("dense: apex {a}, no model inside N[a]"));
            continue;
        };
        let mut sets = found.model.branch_sets.clone();
        for (i, r) in seq.iter().enumerate() {
            sets[i].extend(flow.paths.from_source(r).expect("one path per root").iter().copied());
        }
        let model = MinorModel::new(seq.clone(), sets);
        let verdict = verify_model(g, seq, &model);
        if let Some(v) = verdict.violation {
            return Err(Error::Internal(format!("dense composition at apex {a} is invalid: {v}")));
        }
        ses.log(depth, format!("dense: apex {a}, template {}", found.template));
        let step = Step::DenseConstruction { apex: a, vertices: dn.vertices.clone(), template: found.template };
        return Ok(Level { model: Some(model), steps: vec![step] });
    }
    let level = fallback(g, seq, depth, ses)?;
    if level.model.is_none() && !anomalies.is_empty() && is_five_massed(g, &x) {
        ses.falsifiers.extend(anomalies);
    }
    Ok(level)
}

fn fallback(g: &Graph, seq: &RootSequence, depth: usize, ses: &mut Session) -> Result<Level> {
    let model = find_rooted_cycle_minor(g, seq)?;
    ses.log(depth, format!("search: {}", if model.is_some() { "model found" } else { "no model" }));
    Ok(Level { model, steps: vec![Step::FallbackSearch] })
}

/// Decides whether `(g, seq)` has a cycle minor rooted in order `seq`,
/// requiring `(g, set(seq))` to be 5-massed and `|seq| <= 5`.
pub fn solve(g: &Graph, seq: &RootSequence) -> Result<SolveReport, SolveError> {
    solve_with(g, seq, SolveOptions::default())
}

pub fn solve_with(g: &Graph, seq: &RootSequence, options: SolveOptions) -> Result<SolveReport, SolveError> {
    seq.validate_in(g)?;
    if seq.len() > 5 {
        return Err(Error::Unsupported(format!("the reducer handles at most 5 roots, got {}", seq.len())).into());
    }
    let x = seq.to_set();
    let massed = is_massed(g, &x, 5.into())?;
    if !massed.massed() {
        return Err(SolveError::NotMassed(Box::new(massed)));
    }
    solve_unchecked(g, seq, options).map_err(Into::into)
}

/// [`solve`] without the 5-massed precondition; rules and verification are
/// the same.
pub fn solve_unchecked(g: &Graph, seq: &RootSequence, options: SolveOptions) -> Result<SolveReport> {
    seq.validate_in(g)?;
    let x = seq.to_set();
    let mut common = g.vertex_set().clone();
    for r in x.iter() {
        common.intersect_with(g.neighbors(r));
    }
    let mut ses = Session {
        options,
        explain: Vec::new(),
        observations: Observations {
            common_root_neighbors: common.len(),
            order5_max_excess: order5_excess(g, &x),
            ..Observations::default()
        },
        falsifiers: Vec::new(),
    };
    let level = solve_level(g, seq, 0, &mut ses)?;
    let outcome = match level.model {
        Some(model) => {
            if let Some(v) = verify_model(g, seq, &model).violation {
                return Err(Error::Internal(format!("solver produced an invalid model: {v}")));
            }
            Outcome::Model { model }
        }
        None => {
            let cert = if x.len() == 5 { recognize(g, &x)? } else { None };
            match cert {
                Some(certificate) => {
                    if let Err(v) = validate(g, &certificate) {
                        return Err(Error::Internal(format!("recognized certificate fails validation: {v}")));
                    }
                    ses.log(0, "extremal: obstruction certificate found".into());
                    Outcome::Extremal { certificate }
                }
                None => {
                    ses.log(0, "no model and no obstruction certificate".into());
                    Outcome::Counterexample { graph6: crate::io::to_graph6(g), roots: seq.clone() }
                }
            }
        }
    };
    Ok(SolveReport {
        outcome,
        trace: ReductionTrace { steps: level.steps },
        observations: ses.observations,
        falsifiers: ses.falsifiers,
        explain: ses.explain,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::{generate, ComponentSpec};

    fn seq(v: &[VertexId]) -> RootSequence {
        RootSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn complete_eleven() {
        let g = Graph::complete(11);
        for order in [[0, 1, 2, 3, 4], [4, 2, 0, 3, 1], [10, 3, 7, 1, 5]] {
            let r = solve(&g, &seq(&order)).unwrap();
            match r.outcome {
                Outcome::Model { model } => assert!(verify_model(&g, &seq(&order), &model).ok),
                other => panic!("{other:?}"),
            }
            assert!(r.falsifiers.is_empty());
        }
    }

    #[test]
    fn obstruction_yields_certificate() {
        let e = generate(&[ComponentSpec::triangle(1)]).unwrap();
        let r = solve(&e.graph, &e.roots).unwrap();
        assert!(matches!(r.outcome, Outcome::Extremal { .. }), "{:?}", r.outcome);
        assert_eq!(r.observations.common_root_neighbors, 2);
    }

    #[test]
    fn sparse_instance_is_rejected() {
        let g = Graph::cycle(&[0, 1, 2, 3, 4]).unwrap();
        assert!(matches!(solve(&g, &seq(&[0, 1, 2, 3, 4])), Err(SolveError::NotMassed(_))));
        assert!(matches!(solve(&Graph::complete(8), &seq(&[0, 1, 2, 3, 4, 5])), Err(SolveError::Engine(Error::Unsupported(_)))));
    }

    #[test]
    fn dense_rule_on_apex_over_tripartite() {
        // apex 9 over K_{3,3,3} on {0,1,2}, {3,4,5}, {6,7,8}
        let mut g = Graph::empty(10);
        for u in 0..9 {
            for v in u + 1..9 {
                if u / 3 != v / 3 {
                    g.add_edge(u, v).unwrap();
                }
            }
            g.add_edge(9, u).unwrap();
        }
        let s = seq(&[0, 3, 1, 4, 6]);
        let only_dense = SolveOptions { split: false, contract: false, dense: true };
        let r = solve_with(&g, &s, only_dense).unwrap();
        assert!(matches!(r.outcome, Outcome::Model { .. }));
        assert!(matches!(r.trace.steps.as_slice(), [Step::DenseConstruction { apex: 9, .. }]), "{:?}", r.trace);
    }

    #[test]
    fn trace_replays() {
        let g = Graph::complete(11);
        let r = solve(&g, &seq(&[0, 2, 4, 1, 3])).unwrap();
        let (fin, _) = r.trace.replay(&g).unwrap();
        assert!(fin.vertex_count() <= g.vertex_count());
    }
}
