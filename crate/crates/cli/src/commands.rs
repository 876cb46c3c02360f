use std::path::{Path, PathBuf};

use minorlink::connectivity::is_massed;
use minorlink::extremal::{generate, ComponentSpec};
use minorlink::io::{parse_graph, to_graph6, Format};
use minorlink::minor::{find_rooted_cycle_minor, is_cycle_linked, RootSequence};
use minorlink::reducer::{solve, Outcome, SolveError};
use minorlink::{Graph, VertexId, VertexSet};
use serde_json::json;

use crate::config::ExperimentConfig;
use crate::experiments::{oracle_sweep, verify_theorem};
use crate::{read_text, write_text, HarnessError, Report, EXIT_INPUT};

/// `.g6` files are graph6 and `.edges` files are edge lists; anything else is
/// sniffed.
pub fn format_of(path: &Path) -> Option<Format> {
    match path.extension()?.to_str()? {
        "g6" | "graph6" => Some(Format::Graph6),
        "edges" | "el" => Some(Format::EdgeList),
        _ => None,
    }
}

pub fn load_graph(path: &Path) -> Result<Graph, HarnessError> {
    let text = read_text(path)?;
    parse_graph(&text, format_of(path)).map_err(|source| HarnessError::Input { path: path.display().to_string(), source })
}

fn roots_in(g: &Graph, roots: &[VertexId]) -> Result<RootSequence, HarnessError> {
    let seq = RootSequence::new(roots.to_vec())?;
    seq.validate_in(g)?;
    Ok(seq)
}

fn single(code: i32, record: serde_json::Value) -> Report {
    Report { code, records: vec![record], notes: Vec::new() }
}

fn check(input: &Path, order: &[VertexId]) -> Result<Report, HarnessError> {
    let g = load_graph(input)?;
    let seq = roots_in(&g, order)?;
    Ok(match find_rooted_cycle_minor(&g, &seq)? {
        Some(model) => single(0, json!({ "verdict": "model", "model": model })),
        None => single(1, json!({ "verdict": "no-model", "order": seq })),
    })
}

fn cycle_linked(input: &Path, roots: &[VertexId]) -> Result<Report, HarnessError> {
    let g = load_graph(input)?;
    let x: VertexSet = roots_in(&g, roots)?.to_set();
    let r = is_cycle_linked(&g, &x)?;
    Ok(single(if r.linked { 0 } else { 1 }, serde_json::to_value(&r).expect("serializable")))
}

fn massed(input: &Path, roots: &[VertexId], lambda: minorlink::connectivity::Lambda) -> Result<Report, HarnessError> {
    let g = load_graph(input)?;
    let x = roots_in(&g, roots)?.to_set();
    let r = is_massed(&g, &x, lambda)?;
    Ok(single(if r.massed() { 0 } else { 1 }, serde_json::to_value(&r).expect("serializable")))
}

/// Exit 0 with a model, 1 with an obstruction certificate, 3 on an
/// unexplained negative answer; a precondition failure is an input error.
fn solve_cmd(input: &Path, roots: &[VertexId], explain: bool) -> Result<Report, HarnessError> {
    let g = load_graph(input)?;
    let seq = roots_in(&g, roots)?;
    match solve(&g, &seq) {
        Ok(r) => {
            let code = match r.outcome {
                Outcome::Model { .. } => 0,
                Outcome::Extremal { .. } => 1,
                Outcome::Counterexample { .. } => 3,
            };
            let notes = if explain { r.explain.clone() } else { Vec::new() };
            Ok(Report { code, records: vec![serde_json::to_value(&r).expect("serializable")], notes })
        }
        Err(SolveError::NotMassed(m)) => Ok(Report {
            code: EXIT_INPUT,
            records: vec![json!({ "error": "not-massed", "massed": *m })],
            notes: vec!["instance is not 5-massed; the solver needs both massed conditions at lambda = 5".into()],
        }),
        Err(SolveError::Engine(e)) => Err(e.into()),
    }
}

fn sidecar(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".json");
    PathBuf::from(s)
}

fn gen_extremal(spec: &[ComponentSpec], output: &Path) -> Result<Report, HarnessError> {
    let inst = generate(spec)?;
    let graph6 = to_graph6(&inst.graph);
    write_text(output, &format!("{graph6}\n"))?;
    let record = json!({
        "graph6": graph6,
        "n": inst.graph.vertex_count(),
        "edges": inst.graph.edge_count(),
        "spec": spec,
        "roots": inst.roots,
        "apex_pair": inst.apex_pair,
        "certificate": inst.certificate,
    });
    write_text(&sidecar(output), &format!("{record}\n"))?;
    Ok(single(0, record))
}

pub fn run(cfg: &ExperimentConfig) -> Result<Report, HarnessError> {
    cfg.validate()?;
    match cfg {
        ExperimentConfig::Check { input, order } => check(input, order),
        ExperimentConfig::CycleLinked { input, roots } => cycle_linked(input, roots),
        ExperimentConfig::Massed { input, roots, lambda } => massed(input, roots, *lambda),
        ExperimentConfig::Solve { input, roots, explain } => solve_cmd(input, roots, *explain),
        ExperimentConfig::GenExtremal { spec, output } => gen_extremal(spec, output),
        ExperimentConfig::VerifyTheorem(c) => verify_theorem(c),
        ExperimentConfig::OracleSweep(c) => oracle_sweep(c),
    }
}
