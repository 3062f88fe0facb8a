use std::path::PathBuf;

use cdt_core::bounds::{bound_report, check_claimed_def_c, conjecture_check, BoundContext};
use cdt_core::cyclic::cyclic_deficiency_report;
use cdt_core::exact::{default_t_max, min_cyclic_deficiency, SearchOptions, SolverStatus, DEFAULT_BUDGET};
use cdt_core::json::coloring_from_value;
use clap::Args;
use serde_json::{json, Value};

use crate::io::{emit, graph_from_value, load_graph, manifest, path_string, read_json, table, Failure, EXIT_BUDGET, EXIT_CLAIM};
use crate::OutputArgs;

#[derive(Args, Debug)]
pub struct BoundsArgs {
    /// Edge-list file; a `.roles.json` sidecar from `gen` adds family bounds.
    pub input: PathBuf,
    /// Run the exact solver and compare every bound with its result.
    #[arg(long)]
    pub certify: bool,
    /// Check a claimed value of def_c with the exact solver.
    #[arg(long)]
    pub claim_def_c: Option<u64>,
    /// Coloring JSON to check against the conjectured bound.
    #[arg(long)]
    pub coloring: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

fn context(sidecar: Option<&Value>) -> Result<BoundContext, Failure> {
    let mut ctx = BoundContext::default();
    let Some(side) = sidecar else { return Ok(ctx) };
    let params = side.get("params").cloned().unwrap_or(Value::Null);
    let num = |k: &str| params.get(k).and_then(Value::as_u64);
    match side.get("family").and_then(Value::as_str) {
        Some("hat") => ctx.hat_base = Some(graph_from_value(&params["base"])?),
        Some("tilde") => ctx.tilde_tree = Some(graph_from_value(&params["tree"])?),
        Some("hertz") => {
            if let (Some(p), Some(q)) = (num("p"), num("q")) {
                ctx.hertz = Some((p as usize, q as usize));
            }
        }
        Some("erd") => {
            let r: Vec<u32> = serde_json::from_value(params["r"].clone())?;
            ctx.erd = num("n").map(|n| (n as u32, r));
        }
        _ => {}
    }
    Ok(ctx)
}

pub fn run(a: BoundsArgs) -> Result<(), Failure> {
    let loaded = load_graph(&a.input)?;
    let g = loaded.graph;
    let mut report = bound_report(&g, &context(loaded.sidecar.as_ref())?)?;
    let opts = SearchOptions { budget: a.budget, ..Default::default() };
    let mut exhausted = false;
    let mut solver = Value::Null;
    if a.certify {
        let t_min = (g.max_degree() as u32).max(1);
        let r = min_cyclic_deficiency(&g, t_min, default_t_max(&g).max(t_min), opts)?;
        solver = json!({ "status": r.status, "best_total": r.best_total, "t_used": r.t_used, "nodes_explored": r.nodes_explored });
        match (r.status, r.best_total) {
            (SolverStatus::ExhaustedBudget, _) | (_, None) => exhausted = true,
            (_, Some(best)) => report = report.with_certified(best),
        }
    }
    let claim = match a.claim_def_c {
        Some(m) => {
            let v = check_claimed_def_c(&g, m, opts)?;
            exhausted |= v.holds.is_none();
            serde_json::to_value(v)?
        }
        None => Value::Null,
    };
    let conjecture = match &a.coloring {
        Some(p) => {
            let c = coloring_from_value(&g, &read_json(p)?)?;
            let rep = cyclic_deficiency_report(&g, &c)?;
            json!({ "total": rep.total, "vertex_count": g.vertex_count(), "holds": conjecture_check(&g, &rep) })
        }
        None => Value::Null,
    };
    let violations = report.violations();
    let mut value = serde_json::to_value(&report)?;
    value["solver"] = solver;
    value["claim"] = claim;
    value["conjecture"] = conjecture;
    value["manifest"] = manifest(
        "bounds",
        json!({ "certify": a.certify, "claim_def_c": a.claim_def_c, "coloring": path_string(&a.coloring), "budget": a.budget }),
        path_string(&Some(a.input.clone())),
        path_string(&a.output.out),
        None,
    );
    emit(&a.output, &value, || {
        let rows: Vec<Vec<String>> = report
            .entries
            .iter()
            .map(|e| {
                let verdict = match e.verdict {
                    Some(true) => "holds",
                    Some(false) => "VIOLATED",
                    None => "-",
                };
                vec![e.tag.to_string(), format!("{:?}", e.kind).to_lowercase(), e.value.clone(), verdict.to_string()]
            })
            .collect();
        let mut s = format!(
            "|V| {}  Δ {}  δ {}  bipartite {}\n",
            report.vertex_count, report.max_degree, report.min_degree, report.bipartite
        );
        if let Some(c) = report.certified {
            s += &format!("certified def_c {c}\n");
        }
        if let Some(w) = report.wc_upper {
            s += &format!("W_c upper bound {w}\n");
        }
        s + "\n" + &table(&["bound", "kind", "value", "verdict"], &rows)
    })?;
    if !violations.is_empty() {
        return Err(Failure { code: EXIT_CLAIM, message: format!("violated: {}", violations.join(", ")) });
    }
    if exhausted {
        return Err(Failure { code: EXIT_BUDGET, message: "search budget exhausted".into() });
    }
    Ok(())
}
