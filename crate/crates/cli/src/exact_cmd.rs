use std::path::PathBuf;

use cdt_core::exact::{decide_with, default_t_max, min_cyclic_deficiency, wc_max, SearchOptions, SolverStatus, DEFAULT_BUDGET};
use cdt_core::json::{coloring_value, solver_value};
use clap::Args;
use serde_json::{json, Value};

use crate::io::{emit, load_graph, manifest, path_string, Failure, EXIT_BUDGET};
use crate::OutputArgs;

#[derive(Args, Debug)]
pub struct ExactArgs {
    /// Edge-list file.
    pub input: PathBuf,
    /// Lowest t tried (default: maximum degree).
    #[arg(long)]
    pub t_min: Option<u32>,
    /// Highest t tried (default: number of edges, at most 64).
    #[arg(long)]
    pub t_max: Option<u32>,
    /// Maximum number of color assignments.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Require all t colors to be used.
    #[arg(long)]
    pub surjective: bool,
    /// Only decide whether a cyclic interval coloring with this t exists.
    #[arg(long, conflicts_with = "wc_max")]
    pub decide: Option<u32>,
    /// Compute the largest t with a cyclic interval coloring using all colors.
    #[arg(long)]
    pub wc_max: bool,
    /// Upper limit on t for `--wc-max`.
    #[arg(long, default_value_t = 64)]
    pub cap: u32,
    #[command(flatten)]
    pub output: OutputArgs,
}

pub fn run(a: ExactArgs) -> Result<(), Failure> {
    let g = load_graph(&a.input)?.graph;
    let opts = SearchOptions { budget: a.budget, surjective: a.surjective };
    let params = json!({
        "t_min": a.t_min,
        "t_max": a.t_max,
        "budget": a.budget,
        "surjective": a.surjective,
        "decide": a.decide,
        "wc_max": a.wc_max,
        "cap": a.cap,
    });
    let man = manifest("exact", params, path_string(&Some(a.input.clone())), path_string(&a.output.out), None);
    let mut exhausted = false;
    let (mut value, summary) = if let Some(t) = a.decide {
        let (found, status) = match decide_with(&g, t, opts) {
            Ok(Some(c)) => (coloring_value(&g, &c)?, "colorable"),
            Ok(None) => (Value::Null, "not-colorable"),
            Err(cdt_core::Error::BudgetExhausted(_)) => {
                exhausted = true;
                (Value::Null, "exhausted-budget")
            }
            Err(e) => return Err(e.into()),
        };
        (json!({ "mode": "decide", "t": t, "status": status, "witness": found }), format!("t {t}: {status}\n"))
    } else if a.wc_max {
        let (wc, status) = match wc_max(&g, a.cap, a.budget) {
            Ok(Some(t)) => (json!(t), "found"),
            Ok(None) => (Value::Null, "none-within-cap"),
            Err(cdt_core::Error::BudgetExhausted(_)) => {
                exhausted = true;
                (Value::Null, "exhausted-budget")
            }
            Err(e) => return Err(e.into()),
        };
        let summary = format!("W_c within cap {}: {}\n", a.cap, wc.as_u64().map_or(status.to_string(), |t| t.to_string()));
        (json!({ "mode": "wc-max", "cap": a.cap, "status": status, "wc_max": wc }), summary)
    } else {
        let t_min = a.t_min.unwrap_or((g.max_degree() as u32).max(1));
        let t_max = a.t_max.unwrap_or(default_t_max(&g)).max(t_min);
        let r = min_cyclic_deficiency(&g, t_min, t_max, opts)?;
        exhausted = r.status == SolverStatus::ExhaustedBudget;
        let mut v = solver_value(&g, &r)?;
        v["mode"] = json!("min-deficiency");
        v["t_min"] = json!(t_min);
        v["t_max"] = json!(t_max);
        let best = r.best_total.map_or("none".to_string(), |b| b.to_string());
        let summary = format!(
            "{:?}  best total {} (within {} <= t <= {})  nodes {}\n",
            r.status, best, t_min, t_max, r.nodes_explored
        );
        (v, summary)
    };
    value["manifest"] = man;
    emit(&a.output, &value, || summary)?;
    if exhausted {
        return Err(Failure { code: EXIT_BUDGET, message: "search budget exhausted".into() });
    }
    Ok(())
}
