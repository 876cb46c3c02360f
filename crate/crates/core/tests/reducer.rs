//! The reducer against the exact engine on random 5-massed instances.

mod common;

use std::collections::BTreeMap;

use common::{gnp, random_roots, rng};
use minorlink::connectivity::is_massed;
use minorlink::extremal::{generate, validate, ComponentSpec};
use minorlink::minor::{find_rooted_cycle_minor, verify_model, RootSequence};
use minorlink::reducer::{lift_model, solve, Outcome, Step};
use minorlink::Graph;
use rand::Rng;

fn sample(seed: u64, count: usize) -> Vec<(Graph, RootSequence)> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let n = r.gen_range(7..=12);
        let k = r.gen_range(2..=5);
        let p = r.gen_range(0.45..0.9);
        let g = gnp(&mut r, n, p);
        let seq = RootSequence::new(random_roots(&mut r, n, k)).unwrap();
        if is_massed(&g, &seq.to_set(), 5.into()).unwrap().massed() {
            out.push((g, seq));
        }
    }
    out
}

#[test]
fn agrees_with_engine_and_replays() {
    let mut fired: BTreeMap<&str, usize> = BTreeMap::new();
    for (g, seq) in sample(7, 60) {
        let report = solve(&g, &seq).unwrap();
        let engine = find_rooted_cycle_minor(&g, &seq).unwrap();
        match &report.outcome {
            Outcome::Model { model } => {
                assert!(verify_model(&g, &seq, model).ok);
                assert!(engine.is_some());
            }
            Outcome::Extremal { certificate } => {
                assert!(validate(&g, certificate).is_ok());
                assert!(engine.is_none());
            }
            Outcome::Counterexample { .. } => panic!("counterexample on {g:?} {seq:?}"),
        }
        assert!(report.falsifiers.is_empty(), "{:?}", report.falsifiers);
        report.trace.replay(&g).unwrap();
        for step in &report.trace.steps {
            let name = match step {
                Step::Contraction { .. } => "contraction",
                Step::SeparationSplit { .. } => "split",
                Step::DenseConstruction { .. } => "dense",
                Step::FallbackSearch => "fallback",
            };
            *fired.entry(name).or_default() += 1;
        }
    }
    println!("rule firings: {fired:?}");
}

#[test]
fn each_lift_reverifies() {
    for (g, seq) in sample(11, 25) {
        let report = solve(&g, &seq).unwrap();
        let Outcome::Model { .. } = report.outcome else { continue };
        // walk the chain forwards, then lift the final model back step by step
        let mut graphs = vec![g.clone()];
        for step in &report.trace.steps {
            let next = step.apply(graphs.last().unwrap()).unwrap();
            graphs.push(next);
        }
        let last = graphs.last().unwrap();
        let Some(mut m) = find_rooted_cycle_minor(last, &seq).unwrap() else { continue };
        for (step, pre) in report.trace.steps.iter().zip(&graphs).rev() {
            m = lift_model(pre, &seq, &m, step).unwrap();
            assert!(verify_model(pre, &seq, &m).ok);
        }
    }
}

#[test]
fn obstruction_family_is_explained() {
    for spec in [vec![], vec![ComponentSpec::triangle(1)], vec![ComponentSpec::triangle(1), ComponentSpec::triangle(2)]] {
        let e = generate(&spec).unwrap();
        let report = solve(&e.graph, &e.roots).unwrap();
        match report.outcome {
            Outcome::Extremal { certificate } => assert_eq!(certificate.components.len(), spec.len()),
            other => panic!("{other:?}"),
        }
    }
}

