//! Regenerates the checked-in corpus of connected graphs:
//! `cargo run --release -p minorlink-cli --example make_corpus -- DIR [MAX_N]`.

use std::path::PathBuf;

use minorlink::io::to_graph6;
use minorlink::{Graph, VertexId};

fn main() {
    let mut args = std::env::args().skip(1);
    let dir = PathBuf::from(args.next().unwrap_or_else(|| "crates/cli/tests/fixtures/corpus".into()));
    let max_n: usize = args.next().map(|s| s.parse().expect("MAX_N")).unwrap_or(6);
    std::fs::create_dir_all(&dir).expect("corpus directory");
    for n in 1..=max_n {
        let mut lines: Vec<String> = minorlink_oracle::connected_graphs(n)
            .iter()
            .map(|a| {
                let edges: Vec<(VertexId, VertexId)> = a.edges().iter().map(|&(u, v)| (u as VertexId, v as VertexId)).collect();
                to_graph6(&Graph::from_edges(n, &edges).expect("simple graph"))
            })
            .collect();
        lines.sort();
        let path = dir.join(format!("connected_n{n}.g6"));
        std::fs::write(&path, lines.iter().map(|l| format!("{l}\n")).collect::<String>()).expect("write corpus");
        println!("{}: {} graphs", path.display(), lines.len());
    }
}
