//! Closed-form bounds on the cyclic deficiency, in exact arithmetic.

use num_rational::Ratio;
use serde::Serialize;

use crate::cyclic::DeficiencyReport;
use crate::error::{Error, Result};
use crate::exact::{default_t_max, min_cyclic_deficiency, SearchOptions, SolverStatus};
use crate::families::{hertz_tree, tree_metrics};
use crate::graph::{bipartition, diameter, Graph};

pub type Rational = Ratio<i64>;

/// Lower bound for `def_c(Ĝ)`: `(|E|−1)/(4(diam+2)) − Δ + 1`, evaluated on
/// the base graph `g`.
pub fn lb_hat(g: &Graph) -> Result<Rational> {
    if g.vertex_count() < 2 {
        return Err(Error::InvalidParameter("need at least 2 vertices".into()));
    }
    let diam = diameter(g)? as i64;
    let m = g.edge_count() as i64;
    Ok(Rational::new(m - 1, 4 * (diam + 2)) - Rational::from_integer(g.max_degree() as i64 - 1))
}

/// Lower bound for `def_c(T̃)`: `|F(T)| − M(T) − 2`.
pub fn lb_tilde(t: &Graph) -> Result<i64> {
    let m = tree_metrics(t)?;
    Ok(m.leaves.len() as i64 - m.m_value as i64 - 2)
}

/// Exact cyclic deficiency of `H_{p,q}`, `pq − p − 2q − 2` (`p ≥ 4`, `q ≥ 3`),
/// checked against the tree lower bound of `H_{p,q} − d`.
pub fn hertz_def_value(p: usize, q: usize) -> Result<i64> {
    if p < 4 || q < 3 {
        return Err(Error::InvalidParameter("need p >= 4 and q >= 3".into()));
    }
    let (p, q) = (p as i64, q as i64);
    let value = p * q - p - 2 * q - 2;
    let lb = lb_tilde(&hertz_tree(p as usize, q as usize)?)?;
    if lb != value {
        return Err(Error::ClaimFailure(format!("tree bound {lb} differs from formula value {value}")));
    }
    Ok(value)
}

/// Lower bound for the Erd graph over `π(n)` with multiplicities `r` sorted
/// non-increasingly: `(Σ_{i≥n+2} r_i − 9 Σ_{i≤n+1} r_i + 9) / 10`.
pub fn lb_erd(n: u32, r: &[u32]) -> Result<Rational> {
    let n = n as usize;
    let count = n * n + n + 1;
    if r.len() != count {
        return Err(Error::InvalidParameter(format!("need {count} multiplicities, got {}", r.len())));
    }
    if r.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidParameter("multiplicities must be non-increasing".into()));
    }
    let head: i64 = r[..n + 1].iter().map(|&x| x as i64).sum();
    let tail: i64 = r[n + 1..].iter().map(|&x| x as i64).sum();
    Ok(Rational::new(tail - 9 * head + 9, 10))
}

/// `Σ_{2≤d(v)≤Δ−1} (Δ − d(v))`.
pub fn ub_trivial(g: &Graph) -> u64 {
    let delta = g.max_degree();
    g.degrees().iter().filter(|&&d| d >= 2 && d < delta).map(|&d| (delta - d) as u64).sum()
}

/// The bipartite bound for `Δ ≥ 5`: `Σ_{3≤d≤Δ−3}(Δ−2−d)` (even `Δ`) or
/// `Σ_{3≤d≤Δ−2}(Δ−1−d)` (odd `Δ`).
pub fn ub_bipartite(g: &Graph) -> Result<u64> {
    if bipartition(g).is_none() {
        return Err(Error::NotBipartite);
    }
    if g.max_degree() < 5 {
        return Err(Error::Precondition("maximum degree below 5".into()));
    }
    Ok(crate::colorers::bipartite_certified_bound(g))
}

/// `1 + 2·diam·(Δ − 1)`, an upper bound on `W_c` of a connected bipartite graph.
pub fn wc_upper(g: &Graph) -> Result<u64> {
    if bipartition(g).is_none() {
        return Err(Error::NotBipartite);
    }
    let diam = diameter(g)? as u64;
    Ok(1 + 2 * diam * (g.max_degree() as u64).saturating_sub(1))
}

fn class_size(g: &Graph, d: usize) -> usize {
    g.degree_class(d).len()
}

fn degree_window_values(g: &Graph, width: usize, r_min: usize) -> Vec<usize> {
    let (lo, hi) = (g.min_degree(), g.max_degree());
    (r_min..=hi / 2 + 2)
        .filter(|&r| 2 * r >= hi && 2 * r >= width && 2 * r - width <= lo)
        .collect()
}

/// Whether some `r ≥ 5` with all degrees in `{2r−4, …, 2r}` satisfies
/// `|V_{2r−4}|(r−5) ≤ (r−1)(|V_{2r−2}|+|V_{2r−1}|+|V_{2r}|)` on a bipartite
/// graph. Errors when no such `r` fits the degrees.
pub fn bipdiff4_hypothesis(g: &Graph) -> Result<bool> {
    let rs = degree_window_values(g, 4, 5);
    if rs.is_empty() || g.vertex_count() == 0 {
        return Err(Error::Precondition("degrees do not fit {2r-4, ..., 2r} for any r >= 5".into()));
    }
    if bipartition(g).is_none() {
        return Ok(false);
    }
    Ok(rs.into_iter().any(|r| {
        let low = class_size(g, 2 * r - 4) as u64;
        let high = (class_size(g, 2 * r - 2) + class_size(g, 2 * r - 1) + class_size(g, 2 * r)) as u64;
        low * (r as u64 - 5) <= (r as u64 - 1) * high
    }))
}

/// The conjectured bound `total ≤ |V|`.
pub fn conjecture_check(g: &Graph, report: &DeficiencyReport) -> bool {
    report.total <= g.vertex_count() as u64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    Lower,
    Upper,
    Exact,
    Conjectured,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub tag: &'static str,
    pub kind: BoundKind,
    /// Exact value as `p` or `p/q`.
    pub value: String,
    #[serde(skip)]
    pub rational: Rational,
    /// `Some(holds)` once compared with a certified deficiency.
    pub verdict: Option<bool>,
}

/// Extra structure a graph is known to have, enabling family bounds.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BoundContext {
    /// The graph is `Ĝ` for this base graph.
    pub hat_base: Option<Graph>,
    /// The graph is `T̃` for this tree.
    pub tilde_tree: Option<Graph>,
    /// The graph is an Erd graph over `π(n)` with these multiplicities.
    pub erd: Option<(u32, Vec<u32>)>,
    /// The graph is `H_{p,q}`.
    pub hertz: Option<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub vertex_count: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub bipartite: bool,
    pub entries: Vec<BoundEntry>,
    /// `1 + 2·diam·(Δ−1)` for connected bipartite graphs.
    pub wc_upper: Option<u64>,
    pub certified: Option<u64>,
}

fn entry(tag: &'static str, kind: BoundKind, value: Rational) -> BoundEntry {
    BoundEntry { tag, kind, value: value.to_string(), rational: value, verdict: None }
}

fn int(v: impl TryInto<i64>) -> Rational {
    Rational::from_integer(v.try_into().unwrap_or(i64::MAX))
}

/// Every bound whose hypothesis holds for `g` (and for the structure in `ctx`).
pub fn bound_report(g: &Graph, ctx: &BoundContext) -> Result<BoundReport> {
    let n = g.vertex_count();
    let (delta, delta_min) = (g.max_degree(), g.min_degree());
    let bipartite = bipartition(g).is_some();
    let mut entries = vec![entry("trivial-upper-bound", BoundKind::Upper, int(ub_trivial(g)))];
    if delta_min == delta {
        entries.push(entry("regular-upper-bound", BoundKind::Upper, int(0)));
    }
    if delta <= 3 {
        entries.push(entry("maxdeg3-upper-bound", BoundKind::Upper, int(0)));
    }
    if delta <= 5 {
        entries.push(entry("maxdeg5-upper-bound", BoundKind::Upper, int(n)));
    }
    if delta - delta_min <= 2 {
        entries.push(entry("small-spread-upper-bound", BoundKind::Upper, int(n)));
    }
    if bipartite {
        if delta <= 4 {
            entries.push(entry("bipartite-maxdeg4-upper-bound", BoundKind::Upper, int(0)));
        }
        if delta >= 5 {
            entries.push(entry("bipartite-upper-bound", BoundKind::Upper, int(ub_bipartite(g)?)));
        }
        if delta <= 6 {
            entries.push(entry("bipartite-maxdeg6-upper-bound", BoundKind::Upper, int(class_size(g, 3))));
        }
        if delta <= 8 {
            let v = class_size(g, 3) + class_size(g, 5);
            entries.push(entry("bipartite-maxdeg8-upper-bound", BoundKind::Upper, int(v)));
        }
        if let Some(v) = degree_window_values(g, 3, 2).into_iter().map(|r| class_size(g, 2 * r - 3)).min() {
            entries.push(entry("bipartite-window3-upper-bound", BoundKind::Upper, int(v)));
        }
        if matches!(bipdiff4_hypothesis(g), Ok(true)) {
            entries.push(entry("bipartite-window4-upper-bound", BoundKind::Upper, int(n)));
        }
    }
    if let Some(base) = &ctx.hat_base {
        entries.push(entry("hat-lower-bound", BoundKind::Lower, lb_hat(base)?));
    }
    if let Some(tree) = &ctx.tilde_tree {
        entries.push(entry("tilde-lower-bound", BoundKind::Lower, int(lb_tilde(tree)?)));
    }
    if let Some((p, q)) = ctx.hertz {
        if p >= 4 && q >= 3 {
            entries.push(entry("hertz-exact-value", BoundKind::Exact, int(hertz_def_value(p, q)?)));
        }
        entries.push(entry("tilde-lower-bound", BoundKind::Lower, int(lb_tilde(&hertz_tree(p, q)?)?)));
    }
    if let Some((order, r)) = &ctx.erd {
        let mut sorted = r.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        entries.push(entry("erd-lower-bound", BoundKind::Lower, lb_erd(*order, &sorted)?));
    }
    entries.push(entry("conjectured-upper-bound", BoundKind::Conjectured, int(n)));
    let wc = if bipartite && g.is_connected() && n > 0 { Some(wc_upper(g)?) } else { None };
    Ok(BoundReport {
        vertex_count: n,
        max_degree: delta,
        min_degree: delta_min,
        bipartite,
        entries,
        wc_upper: wc,
        certified: None,
    })
}

impl BoundReport {
    /// Records verdicts against a certified value of `def_c`.
    pub fn with_certified(mut self, value: u64) -> Self {
        let v = int(value);
        for e in &mut self.entries {
            e.verdict = Some(match e.kind {
                BoundKind::Lower => e.rational <= v,
                BoundKind::Upper | BoundKind::Conjectured => v <= e.rational,
                BoundKind::Exact => v == e.rational,
            });
        }
        self.certified = Some(value);
        self
    }

    /// Tags of entries whose verdict is a violation.
    pub fn violations(&self) -> Vec<&'static str> {
        self.entries.iter().filter(|e| e.verdict == Some(false)).map(|e| e.tag).collect()
    }

    pub fn get(&self, tag: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.tag == tag)
    }
}

/// Outcome of checking a claimed value of `def_c` for a user-supplied graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimVerdict {
    pub claimed: u64,
    pub status: SolverStatus,
    /// Best total found; optimal unless the budget ran out.
    pub best_total: Option<u64>,
    /// `None` when the search ran out of budget above the claimed value.
    pub holds: Option<bool>,
}

/// Checks `def_c(g) = claimed` with the exact solver over `Δ ≤ t ≤ |E|`.
pub fn check_claimed_def_c(g: &Graph, claimed: u64, opts: SearchOptions) -> Result<ClaimVerdict> {
    let t_min = (g.max_degree() as u32).max(1);
    let r = min_cyclic_deficiency(g, t_min, default_t_max(g).max(t_min), opts)?;
    let holds = match (r.status, r.best_total) {
        (SolverStatus::ExhaustedBudget, Some(best)) if best < claimed => Some(false),
        (SolverStatus::ExhaustedBudget, _) => None,
        (_, best) => Some(best == Some(claimed)),
    };
    Ok(ClaimVerdict { claimed, status: r.status, best_total: r.best_total, holds })
}
