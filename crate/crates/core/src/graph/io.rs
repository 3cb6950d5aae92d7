//! Graph file formats.
//!
//! * JSON: `{"n": 3, "edges": [[0,1],[0,2],[1,2]]}`; list order defines edge ids.
//! * Text: a header line `p cut <n> <m>` followed by `m` lines `e <u> <v>`,
//!   0-indexed. Blank lines and lines starting with `c` are comments.
//!
//! Both parsers reject loops.

use serde::Deserialize;

use super::Multigraph;
use crate::error::{Error, Result};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

pub fn parse_graph_json(text: &str) -> Result<Multigraph> {
    let raw: GraphJson = serde_json::from_str(text)
        .map_err(|e| Error::InvalidInput(format!("graph JSON: {e}")))?;
    Multigraph::new(raw.n, raw.edges.into_iter().map(|[u, v]| (u, v)).collect())
}

pub fn parse_graph_text(text: &str) -> Result<Multigraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let bad = |what: &str| Error::InvalidInput(format!("line {}: {what}", lineno + 1));
        let fields: Vec<&str> = line.split_whitespace().collect();
        let num = |s: &str| s.parse::<usize>().map_err(|_| bad("expected a nonnegative integer"));
        match fields.as_slice() {
            ["p", "cut", n, m] => {
                if header.is_some() {
                    return Err(bad("duplicate header"));
                }
                header = Some((num(n)?, num(m)?));
            }
            ["e", u, v] => {
                if header.is_none() {
                    return Err(bad("edge before header"));
                }
                edges.push((num(u)?, num(v)?));
            }
            _ => return Err(bad("expected `p cut <n> <m>` or `e <u> <v>`")),
        }
    }
    let (n, m) = header.ok_or_else(|| Error::InvalidInput("missing `p cut` header".into()))?;
    if edges.len() != m {
        return Err(Error::InvalidInput(format!(
            "header announces {m} edges, found {}",
            edges.len()
        )));
    }
    Multigraph::new(n, edges)
}

/// Parses either format, choosing JSON when the input starts with `{`.
pub fn parse_graph(text: &str) -> Result<Multigraph> {
    if text.trim_start().starts_with('{') {
        parse_graph_json(text)
    } else {
        parse_graph_text(text)
    }
}

pub fn to_json(g: &Multigraph) -> String {
    serde_json::to_string(g).expect("graphs serialize")
}

pub fn to_text(g: &Multigraph) -> String {
    let mut out = format!("p cut {} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}
