use cdt_core::exact::{
    default_t_max, gen_all_connected, min_cyclic_deficiency, SearchOptions, SolverStatus, DEFAULT_BUDGET,
    MAX_ENUMERATION_ORDER,
};
use cdt_core::Graph;
use clap::Args;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::io::{emit, manifest, path_string, table, Failure};
use crate::OutputArgs;

#[derive(Args, Debug)]
pub struct SurveyArgs {
    /// Largest order surveyed (at most 6).
    #[arg(long, default_value_t = MAX_ENUMERATION_ORDER)]
    pub max_n: usize,
    /// Per-instance assignment budget.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

struct Row {
    n: usize,
    index: usize,
    graph: Graph,
    status: SolverStatus,
    best_total: Option<u64>,
    t_used: Option<u32>,
    nodes: u64,
}

fn solve(n: usize, index: usize, graph: Graph, budget: u64) -> Result<Row, cdt_core::Error> {
    let t_min = (graph.max_degree() as u32).max(1);
    let t_max = default_t_max(&graph).max(t_min);
    let r = min_cyclic_deficiency(&graph, t_min, t_max, SearchOptions { budget, surjective: false })?;
    Ok(Row { n, index, graph, status: r.status, best_total: r.best_total, t_used: r.t_used, nodes: r.nodes_explored })
}

pub fn run(a: SurveyArgs) -> Result<(), Failure> {
    if a.max_n > MAX_ENUMERATION_ORDER {
        return Err(Failure::invalid(format!("--max-n must be at most {MAX_ENUMERATION_ORDER}")));
    }
    let mut jobs = Vec::new();
    for n in 1..=a.max_n {
        for (i, g) in gen_all_connected(n)?.into_iter().enumerate() {
            jobs.push((n, i, g));
        }
    }
    // Indexed parallel map keeps instance order regardless of scheduling.
    let rows: Vec<Row> = jobs
        .into_par_iter()
        .map(|(n, i, g)| solve(n, i, g, a.budget))
        .collect::<Result<_, _>>()?;
    let mut per_n = Vec::new();
    for n in 1..=a.max_n {
        let of_n: Vec<&Row> = rows.iter().filter(|r| r.n == n).collect();
        per_n.push(json!({
            "n": n,
            "instances": of_n.len(),
            "colorable": of_n.iter().filter(|r| r.status == SolverStatus::Colorable).count(),
            "exhausted": of_n.iter().filter(|r| r.status == SolverStatus::ExhaustedBudget).count(),
        }));
    }
    let instances: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "n": r.n,
                "index": r.index,
                "edges": r.graph.edges(),
                "status": r.status,
                "best_total": r.best_total,
                "t_used": r.t_used,
                "nodes_explored": r.nodes,
            })
        })
        .collect();
    let nonzero: Vec<Value> = rows
        .iter()
        .filter(|r| r.best_total != Some(0))
        .map(|r| json!({ "n": r.n, "index": r.index, "best_total": r.best_total, "status": r.status }))
        .collect();
    let value = json!({
        "total_instances": rows.len(),
        "all_colorable": rows.iter().all(|r| r.status == SolverStatus::Colorable),
        "per_n": per_n,
        "nonzero": nonzero,
        "instances": instances,
        "manifest": manifest(
            "survey",
            json!({ "max_n": a.max_n, "budget": a.budget }),
            Value::Null,
            path_string(&a.output.out),
            None,
        ),
    });
    emit(&a.output, &value, || {
        let table_rows: Vec<Vec<String>> = (1..=a.max_n)
            .map(|n| {
                let of_n: Vec<&Row> = rows.iter().filter(|r| r.n == n).collect();
                let zero = of_n.iter().filter(|r| r.best_total == Some(0)).count();
                let max_t = of_n.iter().filter_map(|r| r.t_used).max().unwrap_or(0);
                vec![n.to_string(), of_n.len().to_string(), zero.to_string(), (of_n.len() - zero).to_string(), max_t.to_string()]
            })
            .collect();
        let mut s = table(&["n", "graphs", "def_c = 0", "other", "max t used"], &table_rows);
        s += &format!("total {}\n", rows.len());
        s
    })
}
