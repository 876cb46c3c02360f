//! The obstruction family: five roots `x_1 .. x_5` with no edge between
//! cyclically consecutive roots, an adjacent apex pair `{a, b}` joined to
//! every root, and tight components `C` of `G - (X ∪ {a, b})` with
//! `rho(C) = 5|C|` attached only to `{a, b, x_i, x_{i+2}}`. The whole
//! instance satisfies `rho(V \ X) = 5|V \ X| + 1`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::minor::{canonical_orders, find_rooted_cycle_minor, RootSequence};
use crate::{Graph, VertexId, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TightComponent {
    pub vertices: VertexSet,
    /// 1-based `i` with `N(C) ⊆ {a, b, x_i, x_{i+2}}` (indices mod 5).
    pub attachment: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalCertificate {
    pub labeling: RootSequence,
    pub apex_pair: [VertexId; 2],
    pub components: Vec<TightComponent>,
}

/// The first certificate condition that fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "clause", rename_all = "snake_case")]
pub enum CertificateViolation {
    NotFiveRoots,
    UnknownVertex { vertex: VertexId },
    ApexInRoots,
    ConsecutiveRootsAdjacent { i: usize },
    ApexPairNotAdjacent,
    ApexMissesRoot { apex: VertexId, root: VertexId },
    ComponentsMismatch,
    ComponentNotTight { index: usize, rho: usize, size: usize },
    BadAttachment { index: usize },
    GlobalDensity { rho: usize, size: usize },
}

impl fmt::Display for CertificateViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use CertificateViolation::*;
        match self {
            NotFiveRoots => write!(f, "labeling must have exactly five roots"),
            UnknownVertex { vertex } => write!(f, "vertex {vertex} is not in the graph"),
            ApexInRoots => write!(f, "apex pair meets the roots or repeats a vertex"),
            ConsecutiveRootsAdjacent { i } => write!(f, "roots x{} and x{} are adjacent", i, i % 5 + 1),
            ApexPairNotAdjacent => write!(f, "apex vertices are not adjacent"),
            ApexMissesRoot { apex, root } => write!(f, "apex {apex} is not adjacent to root {root}"),
            ComponentsMismatch => write!(f, "listed components differ from the components of G - (X ∪ {{a, b}})"),
            ComponentNotTight { index, rho, size } => {
                write!(f, "component {index} has rho = {rho}, expected 5 * {size}")
            }
            BadAttachment { index } => write!(f, "component {index} attaches outside its declared set"),
            GlobalDensity { rho, size } => write!(f, "rho(V \\ X) = {rho}, expected 5 * {size} + 1"),
        }
    }
}

/// `{a, b, x_i, x_{i+2}}` for a 1-based attachment index.
fn attachment_set(labeling: &RootSequence, apex: [VertexId; 2], i: usize) -> VertexSet {
    let mut s: VertexSet = apex.iter().collect();
    s.insert(labeling.get((i - 1) % 5));
    s.insert(labeling.get((i + 1) % 5));
    s
}

pub fn validate(g: &Graph, cert: &ExtremalCertificate) -> std::result::Result<(), CertificateViolation> {
    use CertificateViolation::*;
    let lab = &cert.labeling;
    if lab.len() != 5 {
        return Err(NotFiveRoots);
    }
    let [a, b] = cert.apex_pair;
    for v in lab.iter().chain([a, b]) {
        if !g.contains(v) {
            return Err(UnknownVertex { vertex: v });
        }
    }
    let x = lab.to_set();
    if a == b || x.contains(a) || x.contains(b) {
        return Err(ApexInRoots);
    }
    for i in 0..5 {
        if g.has_edge(lab.get(i), lab.get((i + 1) % 5)) {
            return Err(ConsecutiveRootsAdjacent { i: i + 1 });
        }
    }
    if !g.has_edge(a, b) {
        return Err(ApexPairNotAdjacent);
    }
    for apex in [a, b] {
        if let Some(root) = lab.iter().find(|&r| !g.has_edge(apex, r)) {
            return Err(ApexMissesRoot { apex, root });
        }
    }
    let mut core = x.clone();
    core.insert(a);
    core.insert(b);
    let actual = g.components_within(&g.vertex_set().difference(&core));
    let mut listed: Vec<&VertexSet> = cert.components.iter().map(|c| &c.vertices).collect();
    listed.sort();
    let mut actual_sorted: Vec<&VertexSet> = actual.iter().collect();
    actual_sorted.sort();
    if listed != actual_sorted {
        return Err(ComponentsMismatch);
    }
    for (index, c) in cert.components.iter().enumerate() {
        let rho = g.rho_unchecked(&c.vertices);
        if rho != 5 * c.vertices.len() {
            return Err(ComponentNotTight { index, rho, size: c.vertices.len() });
        }
        if !(1..=5).contains(&c.attachment)
            || !g.neighborhood_unchecked(&c.vertices).is_subset(&attachment_set(lab, cert.apex_pair, c.attachment))
        {
            return Err(BadAttachment { index });
        }
    }
    let rest = g.vertex_set().difference(&x);
    let rho = g.rho_unchecked(&rest);
    if rho != 5 * rest.len() + 1 {
        return Err(GlobalDensity { rho, size: rest.len() });
    }
    Ok(())
}

/// Tries every canonical labeling of `x` (lexicographic) and every apex pair
/// (lexicographic); the first certificate that validates is returned. A
/// component fitting several attachment sets gets the smallest index.
pub fn recognize(g: &Graph, x: &VertexSet) -> Result<Option<ExtremalCertificate>> {
    if x.len() != 5 {
        return Err(Error::domain(format!("recognition needs exactly 5 roots, got {}", x.len())));
    }
    g.check_set(x)?;
    let mut common = g.vertex_set().difference(x);
    for r in x.iter() {
        common.intersect_with(g.neighbors(r));
    }
    let apexes = common.to_vec();
    for labeling in canonical_orders(x)? {
        for (i, &a) in apexes.iter().enumerate() {
            for &b in &apexes[i + 1..] {
                if !g.has_edge(a, b) {
                    continue;
                }
                let mut core = x.clone();
                core.insert(a);
                core.insert(b);
                let comps = g.components_within(&g.vertex_set().difference(&core));
                let components: Option<Vec<TightComponent>> = comps
                    .into_iter()
                    .map(|c| {
                        let n = g.neighborhood_unchecked(&c);
                        (1..=5)
                            .find(|&i| n.is_subset(&attachment_set(&labeling, [a, b], i)))
                            .map(|attachment| TightComponent { vertices: c, attachment })
                    })
                    .collect();
                let Some(components) = components else { continue };
                let cert = ExtremalCertificate { labeling: labeling.clone(), apex_pair: [a, b], components };
                if validate(g, &cert).is_ok() {
                    return Ok(Some(cert));
                }
            }
        }
    }
    Ok(None)
}

/// One tight component to synthesize: a cycle on `size` vertices (a triangle
/// by default), every vertex joined to all of `{a, b, x_i, x_{i+2}}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentSpec {
    pub attachment: usize,
    pub size: usize,
}

impl ComponentSpec {
    pub fn triangle(attachment: usize) -> Self {
        ComponentSpec { attachment, size: 3 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalInstance {
    #[serde(skip)]
    pub graph: Graph,
    pub roots: RootSequence,
    pub apex_pair: [VertexId; 2],
    pub certificate: ExtremalCertificate,
}

/// Roots are `0..5`, the apex pair is `{5, 6}`, components follow in spec
/// order. The result is checked against the certificate conditions and
/// filtered through the exact engine: instances whose labeling order does
/// have a cycle minor are rejected.
pub fn generate(spec: &[ComponentSpec]) -> Result<ExtremalInstance> {
    for (i, c) in spec.iter().enumerate() {
        if !(1..=5).contains(&c.attachment) {
            return Err(Error::domain(format!("component {i}: attachment index {} is outside 1..=5", c.attachment)));
        }
        if c.size < 3 {
            return Err(Error::domain(format!(
                "component {i}: size {} cannot reach rho(C) = 5|C| with 4 attachment vertices; need at least 3",
                c.size
            )));
        }
    }
    let roots = RootSequence::new((0..5).collect())?;
    let (a, b) = (5, 6);
    let mut g = Graph::empty(7);
    g.add_edge(a, b)?;
    for x in 0..5 {
        g.add_edge(a, x)?;
        g.add_edge(b, x)?;
    }
    let mut next: VertexId = 7;
    let mut components = Vec::with_capacity(spec.len());
    for c in spec {
        let ids: Vec<VertexId> = (next..next + c.size as VertexId).collect();
        next += c.size as VertexId;
        let attach = attachment_set(&roots, [a, b], c.attachment);
        for (j, &v) in ids.iter().enumerate() {
            g.add_edge(v, ids[(j + 1) % ids.len()])?;
            for t in attach.iter() {
                g.add_edge(v, t)?;
            }
        }
        components.push(TightComponent { vertices: ids.iter().collect(), attachment: c.attachment });
    }
    let certificate = ExtremalCertificate { labeling: roots.clone(), apex_pair: [a, b], components };
    if let Err(v) = validate(&g, &certificate) {
        return Err(Error::Internal(format!("generated instance fails its certificate: {v}")));
    }
    if let Some(m) = find_rooted_cycle_minor(&g, &roots)? {
        return Err(Error::domain(format!(
            "generated instance has a cycle minor in labeling order ({:?}); archived as interesting",
            m.branch_sets
        )));
    }
    Ok(ExtremalInstance { graph: g, roots, apex_pair: [a, b], certificate })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn core_has_seven_vertices() {
        let e = generate(&[]).unwrap();
        assert_eq!(e.graph.vertex_count(), 7);
        assert_eq!(e.graph.edge_count(), 11);
    }

    #[test]
    fn single_triangle() {
        let e = generate(&[ComponentSpec::triangle(1)]).unwrap();
        assert_eq!((e.graph.vertex_count(), e.graph.edge_count()), (10, 26));
        let cert = recognize(&e.graph, &e.roots.to_set()).unwrap().unwrap();
        assert_eq!(cert, e.certificate);
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(generate(&[ComponentSpec { attachment: 1, size: 2 }]).is_err());
        assert!(generate(&[ComponentSpec { attachment: 6, size: 3 }]).is_err());
    }

    #[test]
    fn complete_graph_has_no_certificate() {
        let g = Graph::complete(11);
        assert_eq!(recognize(&g, &(0..5).collect()).unwrap(), None);
        assert!(recognize(&g, &(0..4).collect()).is_err());
    }

    #[test]
    fn validation_names_clause() {
        let e = generate(&[ComponentSpec::triangle(1)]).unwrap();
        let mut g = e.graph.clone();
        g.add_edge(0, 1).unwrap();
        assert_eq!(validate(&g, &e.certificate), Err(CertificateViolation::ConsecutiveRootsAdjacent { i: 1 }));
        let mut g = e.graph.clone();
        g.remove_edge(7, 8);
        assert!(matches!(validate(&g, &e.certificate), Err(CertificateViolation::ComponentNotTight { .. })));
    }
}
