//! JSON forms of colorings and solver results.
//!
//! A coloring is stored against its graph as `{"t": t, "edges": [{"u", "v",
//! "color"}]}` with one entry per edge in edge order; other keys are ignored
//! when reading.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cyclic::{cyclic_deficiency_report, EdgeColoring};
use crate::error::{Error, Result};
use crate::exact::SolverResult;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoredEdge {
    pub u: usize,
    pub v: usize,
    pub color: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
struct ColoringFile {
    t: u32,
    edges: Vec<ColoredEdge>,
}

pub fn coloring_edges(g: &Graph, c: &EdgeColoring) -> Vec<ColoredEdge> {
    g.edges()
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| ColoredEdge { u, v, color: c.color(e).unwrap_or(0) })
        .collect()
}

/// `t`, edges and the deficiency report of a proper coloring.
pub fn coloring_value(g: &Graph, c: &EdgeColoring) -> Result<Value> {
    let report = cyclic_deficiency_report(g, c)?;
    Ok(json!({
        "t": c.t(),
        "edges": coloring_edges(g, c),
        "report": { "per_vertex": report.per_vertex, "total": report.total },
    }))
}

/// Reads a coloring of `g`, matching entries to edges by endpoints.
pub fn coloring_from_value(g: &Graph, value: &Value) -> Result<EdgeColoring> {
    let file: ColoringFile =
        serde_json::from_value(value.clone()).map_err(|e| Error::Parse { line: e.line(), message: e.to_string() })?;
    if file.edges.len() != g.edge_count() {
        return Err(Error::ColoringSizeMismatch { expected: g.edge_count(), found: file.edges.len() });
    }
    let mut c = EdgeColoring::uncolored(file.t, g.edge_count())?;
    for entry in &file.edges {
        let e = g
            .edge_between(entry.u, entry.v)
            .ok_or_else(|| Error::InvalidParameter(format!("no edge {}-{} in the graph", entry.u, entry.v)))?;
        if c.color(e).is_some() {
            return Err(Error::InvalidParameter(format!("edge {}-{} listed twice", entry.u, entry.v)));
        }
        c.set(e, entry.color)?;
    }
    Ok(c)
}

pub fn solver_value(g: &Graph, r: &SolverResult) -> Result<Value> {
    let witness = match &r.witness {
        Some(c) => coloring_value(g, c)?,
        None => Value::Null,
    };
    Ok(json!({
        "status": r.status,
        "best_total": r.best_total,
        "t_used": r.t_used,
        "nodes_explored": r.nodes_explored,
        "witness": witness,
    }))
}
