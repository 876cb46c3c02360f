//! The two batch experiments: the connectivity-threshold replication and the
//! engine-versus-oracle sweep. Instances run in parallel, one per task, and
//! are merged in input order.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use itertools::Itertools;
use minorlink::io::{parse_graph, parse_graph6_file, sniff_format, to_graph6, Format};
use minorlink::minor::{canonical_orders, find_rooted_cycle_minor, verify_model, RootSequence};
use minorlink::{Exec, Graph, VertexId, VertexSet};
use minorlink_oracle::Adj;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::config::{SubsetPlan, SweepConfig, TheoremConfig};
use crate::sampler::{gnp, is_k_connected, sample_connected};
use crate::{read_text, write_text, HarnessError, Report};

fn millis(start: Instant, timing: bool) -> Option<u64> {
    timing.then(|| start.elapsed().as_millis() as u64)
}

/// Per-instance seeds drawn up front so instance `i` does not depend on how
/// the others are scheduled.
fn instance_seeds(seed: u64, count: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| rng.gen()).collect()
}

fn load_graphs(path: &Path) -> Result<Vec<Graph>, HarnessError> {
    let text = read_text(path)?;
    let input = |source| HarnessError::Input { path: path.display().to_string(), source };
    match crate::commands::format_of(path).unwrap_or_else(|| sniff_format(&text)) {
        Format::Graph6 => parse_graph6_file(&text).map_err(input),
        Format::EdgeList => parse_graph(&text, Some(Format::EdgeList)).map(|g| vec![g]).map_err(input),
    }
}

fn choose_subsets<R: Rng>(rng: &mut R, ids: &[VertexId], k: usize, plan: SubsetPlan) -> Vec<VertexSet> {
    let all = || ids.iter().copied().combinations(k).map(|c| c.into_iter().collect()).collect();
    match plan {
        SubsetPlan::All => all(),
        SubsetPlan::Random(s) => {
            let total = (0..k).fold(1u128, |acc, i| acc * (ids.len() - i) as u128 / (i as u128 + 1));
            if total <= s as u128 {
                return all();
            }
            let mut out: Vec<VertexSet> = Vec::with_capacity(s);
            while out.len() < s {
                let pick: VertexSet = sample(rng, ids.len(), k).iter().map(|i| ids[i]).collect();
                if !out.contains(&pick) {
                    out.push(pick);
                }
            }
            out
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Falsifier {
    pub index: usize,
    pub graph6: String,
    pub order: RootSequence,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub artifact: Option<String>,
}

#[derive(Serialize)]
struct InstanceRecord {
    index: usize,
    n: usize,
    edges: usize,
    min_degree: usize,
    connectivity_ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    attempts: Option<usize>,
    graph6: String,
    subsets: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    roots: Vec<VertexSet>,
    checks: usize,
    failures: Vec<RootSequence>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u64>,
}

struct Job {
    index: usize,
    seed: u64,
    fixed: Option<Graph>,
}

fn run_instance(cfg: &TheoremConfig, job: &Job) -> Result<InstanceRecord, HarnessError> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(job.seed);
    let (g, attempts) = match &job.fixed {
        Some(g) => (g.clone(), None),
        None => {
            let n = rng.gen_range(cfg.n_range.0..=cfg.n_range.1);
            let s = sample_connected(&mut rng, n, cfg.connectivity, cfg.max_attempts)?;
            (s.graph, Some(s.attempts))
        }
    };
    let ids: Vec<VertexId> = g.vertices().collect();
    if ids.len() < cfg.k {
        return Err(HarnessError::Config(format!("graph {} has fewer than k = {} vertices", job.index, cfg.k)));
    }
    let subsets = choose_subsets(&mut rng, &ids, cfg.k, cfg.subsets);
    let mut checks = 0;
    let mut failures = Vec::new();
    for x in &subsets {
        for order in canonical_orders(x)? {
            checks += 1;
            let ok = match find_rooted_cycle_minor(&g, &order)? {
                Some(m) => verify_model(&g, &order, &m).ok,
                None => false,
            };
            if !ok {
                failures.push(order);
            }
        }
    }
    Ok(InstanceRecord {
        index: job.index,
        n: ids.len(),
        edges: g.edge_count(),
        min_degree: g.min_degree(),
        connectivity_ok: is_k_connected(&g, cfg.connectivity),
        attempts,
        graph6: to_graph6(&g),
        subsets: subsets.len(),
        roots: if matches!(cfg.subsets, SubsetPlan::Random(_)) { subsets } else { Vec::new() },
        checks,
        failures,
        elapsed_ms: millis(start, cfg.timing),
    })
}

fn archive(dir: &Path, falsifiers: &mut [Falsifier]) -> Result<(), HarnessError> {
    std::fs::create_dir_all(dir).map_err(|source| HarnessError::Io { path: dir.display().to_string(), source })?;
    let mut per_graph: BTreeMap<usize, usize> = BTreeMap::new();
    for f in falsifiers.iter_mut() {
        let j = per_graph.entry(f.index).or_default();
        let stem = dir.join(format!("falsifier-{:03}-{}", f.index, j));
        *j += 1;
        let g6 = stem.with_extension("g6");
        write_text(&g6, &format!("{}\n", f.graph6))?;
        let meta = json!({ "graph6": f.graph6, "order": f.order });
        write_text(&stem.with_extension("json"), &format!("{meta}\n"))?;
        f.artifact = Some(g6.display().to_string());
    }
    Ok(())
}

/// Checks every canonical cyclic order of the chosen root subsets of each
/// graph. Sampled graphs are certified `c`-connected before use; a missing
/// model is a falsifier and is archived when an archive directory is set.
pub fn verify_theorem(cfg: &TheoremConfig) -> Result<Report, HarnessError> {
    let start = Instant::now();
    let jobs: Vec<Job> = if cfg.inputs.is_empty() {
        let seeds = instance_seeds(cfg.seed, cfg.graphs);
        seeds.into_iter().enumerate().map(|(index, seed)| Job { index, seed, fixed: None }).collect()
    } else {
        let mut graphs = Vec::new();
        for p in &cfg.inputs {
            graphs.extend(load_graphs(p)?);
        }
        let seeds = instance_seeds(cfg.seed, graphs.len());
        graphs.into_iter().zip(seeds).enumerate().map(|(index, (g, seed))| Job { index, seed, fixed: Some(g) }).collect()
    };
    let results = Exec::default().map(&jobs, |job| run_instance(cfg, job));

    let mut report = Report::default();
    let mut falsifiers = Vec::new();
    let mut checks = 0;
    for r in results {
        let rec = r?;
        checks += rec.checks;
        for order in &rec.failures {
            falsifiers.push(Falsifier { index: rec.index, graph6: rec.graph6.clone(), order: order.clone(), artifact: None });
        }
        report.records.push(serde_json::to_value(&rec).expect("serializable"));
    }
    if let (Some(dir), false) = (&cfg.archive, falsifiers.is_empty()) {
        archive(dir, &mut falsifiers)?;
    }
    let mut summary = json!({
        "mode": "verify-theorem",
        "connectivity": cfg.connectivity,
        "k": cfg.k,
        "seed": cfg.seed,
        "graphs": jobs.len(),
        "checks": checks,
        "failures": falsifiers.len(),
        "falsifiers": falsifiers,
    });
    if let Some(ms) = millis(start, cfg.timing) {
        summary["elapsed_ms"] = json!(ms);
    }
    report.records.push(json!({ "summary": summary }));
    report.code = if falsifiers.is_empty() { 0 } else { 1 };
    if !falsifiers.is_empty() {
        report.notes.push(format!("{} falsifier(s) found", falsifiers.len()));
    }
    Ok(report)
}

pub fn to_adj(g: &Graph) -> Adj {
    let ids: Vec<VertexId> = g.vertices().collect();
    let pos = |v: VertexId| ids.binary_search(&v).expect("vertex");
    let edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (pos(u), pos(v))).collect();
    Adj::from_edges(ids.len(), &edges)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub graph6: String,
    pub order: RootSequence,
    pub engine: bool,
    pub oracle: bool,
}

#[derive(Default)]
struct Tally {
    graphs: usize,
    pairs: usize,
    agree: usize,
    disagreements: Vec<Disagreement>,
}

impl Tally {
    fn absorb(&mut self, other: Tally) {
        self.graphs += other.graphs;
        self.pairs += other.pairs;
        self.agree += other.agree;
        self.disagreements.extend(other.disagreements);
    }
}

/// Engine against oracle on one ordered root sequence. Graph ids must be
/// `0..n`.
fn compare(g: &Graph, adj: &Adj, order: &RootSequence, tally: &mut Tally) -> Result<(), HarnessError> {
    let engine = match find_rooted_cycle_minor(g, order)? {
        Some(m) => {
            if !verify_model(g, order, &m).ok {
                return Err(HarnessError::Engine(minorlink::Error::Internal("engine model failed verification".into())));
            }
            true
        }
        None => false,
    };
    let roots: Vec<usize> = order.iter().map(|v| v as usize).collect();
    let oracle = minorlink_oracle::has_rooted_cycle_minor(adj, &roots);
    tally.pairs += 1;
    if engine == oracle {
        tally.agree += 1;
    } else {
        tally.disagreements.push(Disagreement { graph6: to_graph6(g), order: order.clone(), engine, oracle });
    }
    Ok(())
}

fn sweep_graph(g: &Graph, k: usize) -> Result<Tally, HarnessError> {
    let adj = to_adj(g);
    let mut t = Tally { graphs: 1, ..Tally::default() };
    for x in g.vertices().combinations(k) {
        let x: VertexSet = x.into_iter().collect();
        for order in canonical_orders(&x)? {
            compare(g, &adj, &order, &mut t)?;
        }
    }
    Ok(t)
}

fn corpus_files(dir: &Path) -> Result<Vec<PathBuf>, HarnessError> {
    let entries = std::fs::read_dir(dir)
        .map_err(|e| HarnessError::Corpus(format!("cannot open corpus directory {}: {e}", dir.display())))?;
    let mut files: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "g6"))
        .collect();
    files.sort();
    if files.is_empty() {
        return Err(HarnessError::Corpus(format!("no .g6 files in {}", dir.display())));
    }
    Ok(files)
}

fn tally_record(t: &Tally, mut head: serde_json::Value) -> serde_json::Value {
    head["graphs"] = json!(t.graphs);
    head["pairs"] = json!(t.pairs);
    head["agree"] = json!(t.agree);
    head["disagree"] = json!(t.disagreements.len());
    head
}

/// Compares the engine with the brute-force oracle on every canonical order
/// of every `k`-subset of every corpus graph, then on random instances.
pub fn oracle_sweep(cfg: &SweepConfig) -> Result<Report, HarnessError> {
    let start = Instant::now();
    let mut report = Report::default();
    let mut total = Tally::default();

    if let Some(dir) = &cfg.corpus {
        let mut graphs = Vec::new();
        for f in corpus_files(dir)? {
            graphs.extend(load_graphs(&f)?);
        }
        let work: Vec<(usize, usize)> = (0..graphs.len())
            .cartesian_product(cfg.ks.iter().copied())
            .filter(|&(i, k)| graphs[i].vertex_count() >= k)
            .collect();
        let results = Exec::default().map(&work, |&(i, k)| sweep_graph(&graphs[i], k));
        let mut rows: BTreeMap<(usize, usize), Tally> = BTreeMap::new();
        for (&(i, k), r) in work.iter().zip(results) {
            rows.entry((graphs[i].vertex_count(), k)).or_default().absorb(r?);
        }
        for (&(n, k), t) in &rows {
            report.records.push(tally_record(t, json!({ "source": "corpus", "n": n, "k": k })));
        }
        for t in rows.into_values() {
            total.absorb(t);
        }
    }

    if cfg.random > 0 {
        let seeds = instance_seeds(cfg.seed, cfg.random);
        let results = Exec::default().map(&seeds, |&seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n = rng.gen_range(cfg.random_n.0..=cfg.random_n.1);
            let p = rng.gen_range(0.2..0.9);
            let g = gnp(&mut rng, n, p);
            let order = RootSequence::new(sample(&mut rng, n, cfg.random_k).iter().map(|i| i as VertexId).collect())?;
            let mut t = Tally { graphs: 1, ..Tally::default() };
            compare(&g, &to_adj(&g), &order, &mut t)?;
            Ok::<_, HarnessError>(t)
        });
        let mut t = Tally::default();
        for r in results {
            t.absorb(r?);
        }
        let head = json!({ "source": "random", "n": [cfg.random_n.0, cfg.random_n.1], "k": cfg.random_k, "seed": cfg.seed });
        report.records.push(tally_record(&t, head));
        total.absorb(t);
    }

    let mut summary = json!({
        "mode": "oracle-sweep",
        "pairs": total.pairs,
        "agree": total.agree,
        "disagree": total.disagreements.len(),
        "disagreements": total.disagreements,
    });
    if let Some(ms) = millis(start, cfg.timing) {
        summary["elapsed_ms"] = json!(ms);
    }
    report.records.push(json!({ "summary": summary }));
    report.code = if total.disagreements.is_empty() { 0 } else { 1 };
    Ok(report)
}
