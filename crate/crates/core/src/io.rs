//! graph6 and edge-list formats.
//!
//! graph6 follows the format used by nauty: an optional `>>graph6<<` header,
//! the vertex count `N(n)`, then the upper triangle of the adjacency matrix
//! column by column (`(0,1),(0,2),(1,2),(0,3),...`) packed big-endian into
//! 6-bit groups, each offset by 63. graph6 vertices are `0..n`; the writer
//! maps a graph's identifiers onto that range by ascending rank.

use crate::error::{Error, Result};
use crate::{Graph, VertexId};

const HEADER: &str = ">>graph6<<";

fn g6_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 { offset, reason: reason.into() }
}

/// Parses one graph6 record. `base` is added to reported byte offsets.
fn parse_graph6_at(line: &[u8], base: usize) -> Result<Graph> {
    let mut pos = 0;
    if line.starts_with(HEADER.as_bytes()) {
        pos = HEADER.len();
    }
    let body = &line[pos..];
    if body.is_empty() {
        return Err(g6_err(base + pos, "missing vertex count"));
    }
    if body[0] == b':' || body[0] == b'&' {
        return Err(g6_err(base + pos, "sparse6/digraph6 records are not supported"));
    }
    for (i, &b) in line.iter().enumerate().skip(pos) {
        if !(63..=126).contains(&b) {
            return Err(g6_err(base + i, format!("byte 0x{b:02x} outside graph6 range 63..=126")));
        }
    }
    let (n, used) = if body[0] != 126 {
        ((body[0] - 63) as usize, 1)
    } else if body.len() >= 2 && body[1] != 126 {
        if body.len() < 4 {
            return Err(g6_err(base + pos + body.len(), "truncated 18-bit vertex count"));
        }
        let n = body[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 4)
    } else {
        if body.len() < 8 {
            return Err(g6_err(base + pos + body.len(), "truncated 36-bit vertex count"));
        }
        let n = body[2..8].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 8)
    };
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let data = &body[used..];
    if data.len() != need {
        let at = base + pos + used + data.len().min(need);
        return Err(g6_err(at, format!("expected {need} adjacency bytes for n={n}, found {}", data.len())));
    }
    let mut g = Graph::empty(n);
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                g.add_edge(i as VertexId, j as VertexId)?;
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = data[need - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(g6_err(base + pos + used + need - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

pub fn parse_graph6(line: &str) -> Result<Graph> {
    parse_graph6_at(line.trim_end_matches(['\n', '\r']).as_bytes(), 0)
}

/// Parses every non-empty line of a graph6 file.
pub fn parse_graph6_file(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for raw in text.split_inclusive('\n') {
        let line = raw.trim_end_matches(['\n', '\r']);
        if !line.is_empty() {
            out.push(parse_graph6_at(line.as_bytes(), offset)?);
        }
        offset += raw.len();
    }
    Ok(out)
}

fn encode_n(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// graph6 encoding (no header, no newline).
pub fn to_graph6(g: &Graph) -> String {
    let ids: Vec<VertexId> = g.vertices().collect();
    let n = ids.len();
    let mut out = Vec::with_capacity(1 + n * n / 12);
    encode_n(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(ids[i], ids[j]) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Edge-list text: one `u v` pair per line. A line holding a single
/// identifier declares an isolated vertex; `#` starts a comment.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut g = Graph::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |reason: String| Error::EdgeList { line: idx + 1, reason };
        let ids: Vec<VertexId> = line
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<VertexId>().map_err(|e| err(format!("bad vertex id {t:?}: {e}"))))
            .collect::<Result<_>>()?;
        match ids.as_slice() {
            [v] => {
                g.add_vertex(*v);
            }
            [u, v] => {
                g.add_edge(*u, *v).map_err(|e| err(e.to_string()))?;
            }
            _ => return Err(err(format!("expected 1 or 2 ids, found {}", ids.len()))),
        }
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut s = String::new();
    for v in g.vertices().filter(|&v| g.degree(v) == 0) {
        s.push_str(&format!("{v}\n"));
    }
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
}

/// Guesses the format of a graph file: a first data line without whitespace
/// is graph6, anything else is an edge list.
pub fn sniff_format(text: &str) -> Format {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.starts_with(HEADER) => Format::Graph6,
        Some(l) if !l.contains(char::is_whitespace) && l.bytes().all(|b| (63..=126).contains(&b)) => Format::Graph6,
        _ => Format::EdgeList,
    }
}

/// Reads the first graph of a file in either format.
pub fn parse_graph(text: &str, format: Option<Format>) -> Result<Graph> {
    match format.unwrap_or_else(|| sniff_format(text)) {
        Format::EdgeList => parse_edge_list(text),
        Format::Graph6 => {
            let mut all = parse_graph6_file(text)?;
            if all.is_empty() {
                return Err(g6_err(0, "no graph in input"));
            }
            Ok(all.swap_remove(0))
        }
    }
}
