//! Deliberately naive reference implementations, used only to cross-check
//! the engine in tests. Everything here is brute force over plain adjacency
//! matrices on vertices `0..n`, shares no code with the engine, and is
//! exponential on purpose.

/// Adjacency matrix of a simple graph on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Adj {
    m: Vec<Vec<bool>>,
}

impl Adj {
    pub fn new(n: usize) -> Self {
        Adj { m: vec![vec![false; n]; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut a = Adj::new(n);
        for &(u, v) in edges {
            a.add_edge(u, v);
        }
        a
    }

    pub fn n(&self) -> usize {
        self.m.len()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "loops are not allowed");
        self.m[u][v] = true;
        self.m[v][u] = true;
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.m[u][v]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| self.m[u][v]).collect()
    }
}

/// Whether the vertices with `inside[v]` induce a connected, nonempty graph.
pub fn connected(g: &Adj, inside: &[bool]) -> bool {
    let Some(start) = inside.iter().position(|&b| b) else { return false };
    let mut seen = vec![false; g.n()];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for v in 0..g.n() {
            if inside[v] && g.m[u][v] && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    (0..g.n()).all(|v| !inside[v] || seen[v])
}

/// Edges with at least one end in `x`, by scanning every pair.
pub fn rho(g: &Adj, x: &[bool]) -> usize {
    g.edges().into_iter().filter(|&(u, v)| x[u] || x[v]).count()
}

/// Edges with one end in `x` and the other in `y`, by scanning every pair.
pub fn e(g: &Adj, x: &[bool], y: &[bool]) -> usize {
    g.edges().into_iter().filter(|&(u, v)| (x[u] && y[v]) || (x[v] && y[u])).count()
}

/// Whether some assignment of the non-root vertices to branch sets (or to
/// none) forms a cycle minor rooted at `roots` in that order. Enumerates all
/// `(k + 1)^(n - k)` assignments.
pub fn has_rooted_cycle_minor(g: &Adj, roots: &[usize]) -> bool {
    let n = g.n();
    let k = roots.len();
    let mut label = vec![usize::MAX; n];
    for (i, &r) in roots.iter().enumerate() {
        label[r] = i;
    }
    let free: Vec<usize> = (0..n).filter(|&v| label[v] == usize::MAX).collect();
    let total = (k + 1).pow(free.len() as u32);
    for code in 0..total {
        let mut c = code;
        for &v in &free {
            let t = c % (k + 1);
            c /= k + 1;
            label[v] = if t == k { usize::MAX } else { t };
        }
        let sets: Vec<Vec<bool>> = (0..k).map(|i| (0..n).map(|v| label[v] == i).collect()).collect();
        let ok = (0..k).all(|i| connected(g, &sets[i])) && (0..k).all(|i| e(g, &sets[i], &sets[(i + 1) % k]) > 0);
        if ok {
            return true;
        }
    }
    false
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, head);
            out.push(p);
        }
    }
    out
}

/// Cycle-linkedness checked over every permutation, without any symmetry
/// reduction. A single vertex is linked.
pub fn is_cycle_linked(g: &Adj, x: &[usize]) -> bool {
    x.len() == 1 || permutations(x).iter().all(|p| has_rooted_cycle_minor(g, p))
}

/// Outcome of the brute-force massed check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Massed {
    pub m1: bool,
    pub m2: bool,
}

/// Checks (M1) and (M2) for `lambda = num / den` (den > 0) by enumerating
/// every pair `(A, B)`: each vertex goes to `A \ B`, `B \ A` or `A ∩ B`.
pub fn is_massed(g: &Adj, x: &[usize], num: i64, den: i64) -> Massed {
    let n = g.n();
    let mut in_x = vec![false; n];
    for &v in x {
        in_x[v] = true;
    }
    let rest: Vec<bool> = in_x.iter().map(|b| !b).collect();
    let size = rest.iter().filter(|&&b| b).count() as i64;
    let m1 = rho(g, &rest) as i64 * den > num * size;

    let mut m2 = true;
    let total = 3usize.pow(n as u32);
    'outer: for code in 0..total {
        // 0: A \ B, 1: B \ A, 2: A ∩ B
        let mut side = vec![0u8; n];
        let mut c = code;
        for s in side.iter_mut() {
            *s = (c % 3) as u8;
            c /= 3;
        }
        if (0..n).any(|v| in_x[v] && side[v] == 1) {
            continue;
        }
        let order = side.iter().filter(|&&s| s == 2).count();
        if order >= x.len() {
            continue;
        }
        for (u, v) in g.edges() {
            if side[u] + side[v] == 1 {
                continue 'outer;
            }
        }
        let b_only: Vec<bool> = side.iter().map(|&s| s == 1).collect();
        let bsize = b_only.iter().filter(|&&b| b).count() as i64;
        if rho(g, &b_only) as i64 * den > num * bsize {
            m2 = false;
            break;
        }
    }
    Massed { m1, m2 }
}

/// Whether every `sources -> sinks` path meets `cut` (vertices in both
/// terminal sets must themselves be cut).
pub fn separates(g: &Adj, sources: &[usize], sinks: &[usize], cut: &[bool]) -> bool {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut stack: Vec<usize> = sources.iter().copied().filter(|&s| !cut[s]).collect();
    for &s in &stack {
        seen[s] = true;
    }
    while let Some(u) = stack.pop() {
        if sinks.contains(&u) {
            return false;
        }
        for v in 0..n {
            if g.m[u][v] && !cut[v] && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    true
}

/// Size of a smallest vertex set meeting every `sources -> sinks` path, by
/// trying all subsets in order of size.
pub fn min_separator_size(g: &Adj, sources: &[usize], sinks: &[usize]) -> usize {
    let n = g.n();
    let mut best = n;
    for mask in 0u64..(1 << n) {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        let cut: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
        if separates(g, sources, sinks, &cut) {
            best = size;
        }
    }
    best
}

/// Vertex connectivity at least `c`: more than `c` vertices and no vertex
/// set of size below `c` disconnects the rest.
pub fn is_k_connected(g: &Adj, c: usize) -> bool {
    let n = g.n();
    if n <= c {
        return false;
    }
    for mask in 0u64..(1 << n) {
        if (mask.count_ones() as usize) >= c {
            continue;
        }
        let rest: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 0).collect();
        if !connected(g, &rest) {
            return false;
        }
    }
    true
}

/// Smallest edge-code over all relabelings, used as an isomorphism key.
fn canonical_key(g: &Adj) -> u64 {
    let n = g.n();
    let idx: Vec<usize> = (0..n).collect();
    permutations(&idx)
        .iter()
        .map(|p| {
            let mut code = 0u64;
            for u in 0..n {
                for v in u + 1..n {
                    code = code << 1 | g.m[p[u]][p[v]] as u64;
                }
            }
            code
        })
        .max()
        .unwrap_or(0)
}

/// All connected graphs on `n` vertices up to isomorphism, from every edge
/// subset.
pub fn connected_graphs(n: usize) -> Vec<Adj> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut keys = std::collections::BTreeMap::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect();
        let g = Adj::from_edges(n, &edges);
        if !connected(&g, &vec![true; n]) {
            continue;
        }
        keys.entry(canonical_key(&g)).or_insert(g);
    }
    keys.into_values().collect()
}
