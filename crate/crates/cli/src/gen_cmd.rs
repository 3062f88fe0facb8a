use std::fs;
use std::path::PathBuf;

use cdt_core::edgelist::{write_graph, write_multigraph};
use cdt_core::families::{
    complete, complete_bipartite, cycle, gen_erd, gen_hertz, gen_m, gen_s, hat, hypercube, path, petersen_graph, star,
    subdivide, tilde,
};
use cdt_core::random::{
    random_bipartite, random_bounded_degree, random_even_regular_multigraph, random_small_spread, random_tree,
};
use cdt_core::Graph;
use clap::Args;
use serde_json::{json, Value};

use crate::io::{graph_value, load_graph, manifest, path_string, sidecar_path, Failure};

pub const FAMILIES: [&str; 19] = [
    "s-graph",
    "m-graph",
    "hertz",
    "subdivide",
    "hat",
    "tilde",
    "erd",
    "complete",
    "complete-bipartite",
    "cycle",
    "path",
    "hypercube",
    "star",
    "petersen",
    "random-bipartite",
    "random-bounded",
    "random-small-spread",
    "random-tree",
    "random-regular-multigraph",
];

#[derive(Args, Debug)]
pub struct GenArgs {
    /// Family name (see `--list`).
    #[arg(required_unless_present = "list")]
    pub family: Option<String>,
    #[arg(long)]
    pub list: bool,
    #[arg(long)]
    pub a: Option<usize>,
    #[arg(long)]
    pub b: Option<usize>,
    #[arg(long)]
    pub c: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    /// Multiplicities for `erd`, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub r: Vec<u32>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub delta: Option<usize>,
    #[arg(long)]
    pub left: Option<usize>,
    #[arg(long)]
    pub right: Option<usize>,
    #[arg(long, default_value_t = 0.5)]
    pub density: f64,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Base graph for `subdivide`, `hat` and `tilde`.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Edge-list path; the sidecar goes to `<out>.roles.json`.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn need<T: Copy>(v: Option<T>, name: &str, family: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::invalid(format!("{family} needs --{name}")))
}

enum Built {
    Simple(Graph),
    Multi(cdt_core::Multigraph),
}

fn build(a: &GenArgs, family: &str) -> Result<(Built, Value), Failure> {
    let n = || need(a.n, "n", family);
    let seed = || need(a.seed, "seed", family);
    let abc = || -> Result<(usize, usize, usize), Failure> {
        Ok((need(a.a, "a", family)?, need(a.b, "b", family)?, need(a.c, "c", family)?))
    };
    let base = || -> Result<Graph, Failure> {
        let p = a.input.as_ref().ok_or_else(|| Failure::invalid(format!("{family} needs --input")))?;
        Ok(load_graph(p)?.graph)
    };
    let simple = |g: Graph, params: Value| Ok((Built::Simple(g), params));
    match family {
        "s-graph" => {
            let (x, y, z) = abc()?;
            simple(gen_s(x, y, z)?, json!({ "a": x, "b": y, "c": z }))
        }
        "m-graph" => {
            let (x, y, z) = abc()?;
            simple(gen_m(x, y, z)?, json!({ "a": x, "b": y, "c": z }))
        }
        "hertz" => {
            let (p, q) = (need(a.p, "p", family)?, need(a.q, "q", family)?);
            simple(gen_hertz(p, q)?, json!({ "p": p, "q": q }))
        }
        "subdivide" => {
            let g = base()?;
            let params = json!({ "base": graph_value(&g) });
            simple(subdivide(&g), params)
        }
        "hat" => {
            let g = base()?;
            let params = json!({ "base": graph_value(&g) });
            simple(hat(&g)?, params)
        }
        "tilde" => {
            let g = base()?;
            let params = json!({ "tree": graph_value(&g) });
            simple(tilde(&g)?, params)
        }
        "erd" => {
            let order = need(a.n, "n", family)? as u32;
            simple(gen_erd(order, &a.r)?, json!({ "n": order, "r": a.r }))
        }
        "complete" => simple(complete(n()?)?, json!({ "n": n()? })),
        "complete-bipartite" => {
            let (m, k) = (need(a.m, "m", family)?, n()?);
            simple(complete_bipartite(m, k)?, json!({ "m": m, "n": k }))
        }
        "cycle" => simple(cycle(n()?)?, json!({ "n": n()? })),
        "path" => simple(path(n()?)?, json!({ "n": n()? })),
        "hypercube" => simple(hypercube(n()? as u32)?, json!({ "n": n()? })),
        "star" => simple(star(n()?)?, json!({ "n": n()? })),
        "petersen" => simple(petersen_graph(), json!({})),
        "random-bipartite" => {
            let (l, r, d) = (need(a.left, "left", family)?, need(a.right, "right", family)?, need(a.delta, "delta", family)?);
            let g = random_bipartite(l, r, d, a.density, seed()?)?;
            simple(g, json!({ "left": l, "right": r, "delta": d, "density": a.density }))
        }
        "random-bounded" => {
            let d = need(a.delta, "delta", family)?;
            let g = random_bounded_degree(n()?, d, a.density, seed()?)?;
            simple(g, json!({ "n": n()?, "delta": d, "density": a.density }))
        }
        "random-small-spread" => {
            let k = need(a.k, "k", family)?;
            simple(random_small_spread(n()?, k, seed()?)?, json!({ "n": n()?, "k": k }))
        }
        "random-tree" => simple(random_tree(n()?, seed()?)?, json!({ "n": n()? })),
        "random-regular-multigraph" => {
            let r = need(a.k, "k", family)?;
            let mg = random_even_regular_multigraph(n()?, r, seed()?)?;
            Ok((Built::Multi(mg), json!({ "n": n()?, "k": r })))
        }
        other => Err(Failure::invalid(format!("unknown family {other:?}; try --list"))),
    }
}

pub fn run(a: GenArgs) -> Result<(), Failure> {
    if a.list {
        println!("{}", FAMILIES.join("\n"));
        return Ok(());
    }
    let family = a.family.clone().expect("required by clap");
    let (built, params) = build(&a, &family)?;
    let (text, labels) = match &built {
        Built::Simple(g) => (write_graph(g), g.labels().map(|l| l.to_vec())),
        Built::Multi(mg) => (write_multigraph(mg), None),
    };
    let Some(out) = &a.out else {
        print!("{text}");
        return Ok(());
    };
    let sidecar = json!({
        "family": family,
        "params": params,
        "multigraph": matches!(built, Built::Multi(_)),
        "labels": labels,
        "manifest": manifest(
            "gen",
            json!({ "family": family, "params": params }),
            path_string(&a.input),
            path_string(&a.out),
            a.seed,
        ),
    });
    fs::write(out, text)?;
    fs::write(sidecar_path(out), serde_json::to_string_pretty(&sidecar)? + "\n")?;
    Ok(())
}
