#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

use minorlink::{Graph, VertexId};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

pub fn bin(args: &[&str]) -> Output {
    bin_env(args, &[])
}

pub fn bin_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_minorlink"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("run minorlink")
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

pub fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

/// `k` distinct vertices of `0..n` in random order.
pub fn random_roots(rng: &mut impl Rng, n: usize, k: usize) -> Vec<VertexId> {
    let mut all: Vec<VertexId> = (0..n as VertexId).collect();
    for i in 0..k {
        let j = rng.gen_range(i..n);
        all.swap(i, j);
    }
    all.truncate(k);
    all
}

/// A copy of `g` under a random bijection of `0..n`, with the bijection.
pub fn relabel(rng: &mut impl Rng, g: &Graph) -> (Graph, Vec<VertexId>) {
    let n = g.vertex_count();
    let perm = random_roots(rng, n, n);
    let edges: Vec<(VertexId, VertexId)> = g.edges().map(|(u, v)| (perm[u as usize], perm[v as usize])).collect();
    (Graph::from_edges(n, &edges).unwrap(), perm)
}
