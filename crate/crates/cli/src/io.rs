//! Reading graphs and sidecars, writing JSON, run manifests and exit codes.

use std::fs;
use std::path::{Path, PathBuf};

use cdt_core::edgelist::parse_graph;
use cdt_core::{Error, Graph};
use serde_json::{json, Value};

use crate::OutputArgs;

pub const EXIT_INVALID: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;
pub const EXIT_CLAIM: u8 = 4;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn invalid(message: impl Into<String>) -> Self {
        Failure { code: EXIT_INVALID, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExhausted(_) => EXIT_BUDGET,
            Error::ClaimFailure(_) => EXIT_CLAIM,
            _ => EXIT_INVALID,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::invalid(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::invalid(e.to_string())
    }
}

/// The sidecar written next to a generated edge list.
pub fn sidecar_path(graph_path: &Path) -> PathBuf {
    let mut s = graph_path.as_os_str().to_owned();
    s.push(".roles.json");
    PathBuf::from(s)
}

pub struct Loaded {
    pub graph: Graph,
    pub sidecar: Option<Value>,
}

/// Reads an edge list and, if present, its sidecar; sidecar labels are
/// attached to the graph.
pub fn load_graph(path: &Path) -> Result<Loaded, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))?;
    let mut graph = parse_graph(&text)?;
    let side = sidecar_path(path);
    let sidecar = if side.exists() {
        let v: Value = serde_json::from_str(&fs::read_to_string(&side)?)?;
        if let Some(labels) = v.get("labels").and_then(Value::as_array) {
            let labels: Vec<String> = labels.iter().map(|l| l.as_str().unwrap_or_default().to_string()).collect();
            graph.set_labels(labels)?;
        }
        Some(v)
    } else {
        None
    };
    Ok(Loaded { graph, sidecar })
}

pub fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))?;
    Ok(serde_json::from_str(&text)?)
}

/// `{"n", "edges"}` form of a graph, used to embed graphs in JSON.
pub fn graph_value(g: &Graph) -> Value {
    json!({ "n": g.vertex_count(), "edges": g.edges() })
}

pub fn graph_from_value(v: &Value) -> Result<Graph, Failure> {
    let n = v.get("n").and_then(Value::as_u64).ok_or_else(|| Failure::invalid("embedded graph lacks n"))?;
    let edges: Vec<(usize, usize)> = serde_json::from_value(v.get("edges").cloned().unwrap_or(Value::Null))?;
    Ok(Graph::from_edges(n as usize, &edges)?)
}

pub fn path_string(p: &Option<PathBuf>) -> Value {
    match p {
        Some(p) => Value::String(p.display().to_string()),
        None => Value::Null,
    }
}

/// Everything needed to reproduce a run.
pub fn manifest(subcommand: &str, parameters: Value, input: Value, output: Value, seed: Option<u64>) -> Value {
    json!({
        "tool": "cdt",
        "version": env!("CARGO_PKG_VERSION"),
        "subcommand": subcommand,
        "parameters": parameters,
        "input": input,
        "output": output,
        "seed": seed,
    })
}

/// Writes `value` as JSON to `--out` or standard output, or `table` when
/// `--pretty` is set.
pub fn emit(out: &OutputArgs, value: &Value, table: impl FnOnce() -> String) -> Result<(), Failure> {
    let text = if out.pretty { table() } else { serde_json::to_string_pretty(value)? + "\n" };
    match &out.out {
        Some(p) => fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

/// Left-aligned plain-text table.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (i, cell) in r.iter().enumerate() {
            width[i] = width[i].max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let parts: Vec<String> = cells.iter().enumerate().map(|(i, c)| format!("{:w$}", c, w = width[i])).collect();
        parts.join("  ").trim_end().to_string() + "\n"
    };
    let mut s = line(header.to_vec());
    s += &line(width.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>().iter().map(String::as_str).collect());
    for r in rows {
        s += &line(r.iter().map(String::as_str).collect());
    }
    s
}
