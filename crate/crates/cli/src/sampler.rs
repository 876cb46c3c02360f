//! Rejection sampler for graphs of guaranteed vertex connectivity.

use minorlink::connectivity::disjoint_paths;
use minorlink::{Graph, VertexId, VertexSet};
use rand::Rng;

use crate::HarnessError;

/// Edge probability putting the expected degree halfway between `c` and
/// `n - 1`, so that minimum degree `c` is likely.
pub fn edge_probability(n: usize, c: usize) -> f64 {
    if n <= 1 {
        return 1.0;
    }
    let span = (n - 1) as f64;
    ((c as f64 + (span - c as f64) / 2.0) / span).clamp(0.0, 1.0)
}

pub fn gnp<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n as VertexId {
        for v in u + 1..n as VertexId {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("fresh vertices");
            }
        }
    }
    g
}

/// Exact test of `kappa(g) >= c`: more than `c` vertices and, for every
/// non-adjacent pair, `c` internally disjoint paths between them.
pub fn is_k_connected(g: &Graph, c: usize) -> bool {
    let n = g.vertex_count();
    if n <= c {
        return false;
    }
    if c == 0 {
        return true;
    }
    if g.min_degree() < c {
        return false;
    }
    let ids: Vec<VertexId> = g.vertices().collect();
    for (i, &u) in ids.iter().enumerate() {
        for &v in &ids[i + 1..] {
            if g.has_edge(u, v) {
                continue;
            }
            let pair: VertexSet = [u, v].iter().collect();
            let h = g.delete(&pair).expect("known vertices");
            let found = disjoint_paths(&h, g.neighbors(u), g.neighbors(v), c).expect("known vertices");
            if found.paths.len() < c {
                return false;
            }
        }
    }
    true
}

#[derive(Clone, Debug)]
pub struct Sampled {
    pub graph: Graph,
    pub attempts: usize,
}

/// Draws `G(n, p)` until it is `c`-connected.
pub fn sample_connected<R: Rng>(rng: &mut R, n: usize, c: usize, max_attempts: usize) -> Result<Sampled, HarnessError> {
    if n <= c {
        return Err(HarnessError::Sampler(format!(
            "no graph on {n} vertices is {c}-connected; at least {} vertices are needed",
            c + 1
        )));
    }
    let p = edge_probability(n, c);
    for attempt in 1..=max_attempts {
        let g = gnp(rng, n, p);
        if is_k_connected(&g, c) {
            return Ok(Sampled { graph: g, attempts: attempt });
        }
    }
    Err(HarnessError::Sampler(format!(
        "no {c}-connected graph in {max_attempts} draws of G({n}, {p:.3}); raise --max-attempts or n"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn connectivity_of_small_families() {
        assert!(is_k_connected(&Graph::complete(5), 4));
        assert!(!is_k_connected(&Graph::complete(5), 5));
        let c6 = Graph::cycle(&[0, 1, 2, 3, 4, 5]).unwrap();
        assert!(is_k_connected(&c6, 2));
        assert!(!is_k_connected(&c6, 3));
        let p = Graph::path(&[0, 1, 2]).unwrap();
        assert!(is_k_connected(&p, 1));
        assert!(!is_k_connected(&p, 2));
    }

    #[test]
    fn probability_hits_the_midpoint() {
        assert_eq!(edge_probability(11, 10), 1.0);
        assert!((edge_probability(21, 10) - 0.75).abs() < 1e-12);
    }

    #[test]
    fn sampler_respects_threshold() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let s = sample_connected(&mut rng, 10, 4, 10_000).unwrap();
        assert!(is_k_connected(&s.graph, 4));
        assert!(matches!(sample_connected(&mut rng, 5, 5, 10), Err(HarnessError::Sampler(_))));
    }
}
