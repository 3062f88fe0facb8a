//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! n 4
//! e 0 1
//! e 1 2
//! ```
//!
//! Vertices are 0-based. Multigraph files may repeat pairs and contain
//! `e v v` loops. Output uses LF line endings and single spaces.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, Multigraph, VertexId};

fn parse_edges(text: &str) -> Result<(usize, Vec<(VertexId, VertexId)>)> {
    let mut count: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: &str| Error::Parse { line: line_no, message: message.to_string() };
        let mut fields = line.split_whitespace();
        let tag = fields.next().unwrap_or_default();
        let nums: Vec<usize> = fields
            .map(|f| f.parse::<usize>().map_err(|_| err(&format!("bad integer {f:?}"))))
            .collect::<Result<_>>()?;
        match (tag, count) {
            ("n", None) if nums.len() == 1 => count = Some(nums[0]),
            ("n", Some(_)) => return Err(err("repeated vertex-count line")),
            ("e", Some(n)) if nums.len() == 2 => {
                if nums[0] >= n || nums[1] >= n {
                    return Err(err("endpoint out of range"));
                }
                edges.push((nums[0], nums[1]));
            }
            ("e", None) => return Err(err("edge before vertex-count line")),
            _ => return Err(err(&format!("unrecognised line {line:?}"))),
        }
    }
    let n = count.ok_or(Error::Parse { line: 0, message: "missing vertex-count line".into() })?;
    Ok((n, edges))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let (n, edges) = parse_edges(text)?;
    Graph::from_edges(n, &edges)
}

pub fn parse_multigraph(text: &str) -> Result<Multigraph> {
    let (n, edges) = parse_edges(text)?;
    Multigraph::from_edges(n, &edges)
}

fn render(n: usize, edges: &[(VertexId, VertexId)]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n {n}");
    for &(u, v) in edges {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}

pub fn write_graph(g: &Graph) -> String {
    render(g.vertex_count(), g.edges())
}

pub fn write_multigraph(mg: &Multigraph) -> String {
    render(mg.vertex_count(), mg.edges())
}
