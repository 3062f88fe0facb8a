use serde::Serialize;

use crate::cyclic::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Palettes are `u64` bitmasks, so `t` is capped here.
pub const MAX_T: u32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Maximum number of color assignments tried over the whole run.
    pub budget: u64,
    /// Require every color `1..=t` to appear.
    pub surjective: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: DEFAULT_BUDGET, surjective: false }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolverStatus {
    /// A cyclic interval coloring (total 0) was found.
    Colorable,
    /// The search finished; `best_total` is optimal for `t_min ≤ t ≤ t_max`.
    OptimumFound,
    /// The node budget ran out; `best_total` is only an upper bound.
    ExhaustedBudget,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverResult {
    pub status: SolverStatus,
    pub best_total: Option<u64>,
    pub witness: Option<EdgeColoring>,
    pub t_used: Option<u32>,
    pub nodes_explored: u64,
}

// Largest circular run of zeros in the low t bits of `mask` (mask nonzero).
fn max_gap(mask: u64, t: u32) -> u32 {
    let full = if t == 64 { u64::MAX } else { (1u64 << t) - 1 };
    // Rotate so that bit 0 is set; then the gaps are plain runs.
    let shift = mask.trailing_zeros();
    let rotated = if shift == 0 { mask & full } else { ((mask >> shift) | (mask << (t - shift))) & full };
    let mut gap = 0;
    let mut run = 0;
    for i in 0..t {
        if rotated & (1 << i) == 0 {
            run += 1;
            gap = gap.max(run);
        } else {
            run = 0;
        }
    }
    gap
}

/// Lower bound on the deficiency at a vertex of degree `d` whose colors so
/// far are `mask`: the shortest covering arc minus `d`. Exact once all `d`
/// colors are present.
fn vertex_bound(mask: u64, d: usize, t: u32) -> u64 {
    if mask == 0 {
        return 0;
    }
    let arc = (t - max_gap(mask, t)) as u64;
    arc.saturating_sub(d as u64)
}

/// Edge order: vertices by degree descending (ties by index), each adding
/// its not yet listed incident edges in ascending order.
pub fn edge_order(g: &Graph) -> Vec<EdgeId> {
    let mut verts: Vec<usize> = (0..g.vertex_count()).collect();
    verts.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut listed = vec![false; g.edge_count()];
    let mut order = Vec::with_capacity(g.edge_count());
    for v in verts {
        let mut inc: Vec<EdgeId> = g.incident(v).iter().map(|&(_, e)| e).collect();
        inc.sort_unstable();
        for e in inc {
            if !listed[e] {
                listed[e] = true;
                order.push(e);
            }
        }
    }
    order
}

pub(crate) struct Budget {
    pub limit: u64,
    pub used: u64,
}

struct Search<'g> {
    g: &'g Graph,
    t: u32,
    order: Vec<EdgeId>,
    surjective: bool,
    mask: Vec<u64>,
    bound: Vec<u64>,
    lb: u64,
    color: Vec<u32>,
    uses: Vec<u32>,
    distinct: u32,
    // Search for totals strictly below this.
    limit: u64,
    best: Option<(u64, Vec<u32>)>,
}

impl<'g> Search<'g> {
    fn assign(&mut self, e: EdgeId, c: u32) {
        let (u, v) = self.g.endpoints(e);
        for x in [u, v] {
            self.mask[x] |= 1 << (c - 1);
            let b = vertex_bound(self.mask[x], self.g.degree(x), self.t);
            self.lb = self.lb - self.bound[x] + b;
            self.bound[x] = b;
        }
        self.color[e] = c;
        if self.uses[c as usize] == 0 {
            self.distinct += 1;
        }
        self.uses[c as usize] += 1;
    }

    fn unassign(&mut self, e: EdgeId, c: u32) {
        let (u, v) = self.g.endpoints(e);
        for x in [u, v] {
            self.mask[x] &= !(1 << (c - 1));
            let b = vertex_bound(self.mask[x], self.g.degree(x), self.t);
            self.lb = self.lb - self.bound[x] + b;
            self.bound[x] = b;
        }
        self.color[e] = 0;
        self.uses[c as usize] -= 1;
        if self.uses[c as usize] == 0 {
            self.distinct -= 1;
        }
    }

    fn delta_for(&self, e: EdgeId, c: u32) -> u64 {
        let (u, v) = self.g.endpoints(e);
        [u, v]
            .iter()
            .map(|&x| vertex_bound(self.mask[x] | 1 << (c - 1), self.g.degree(x), self.t) - self.bound[x])
            .sum()
    }

    fn run(&mut self, depth: usize, budget: &mut Budget) -> Result<()> {
        if self.lb >= self.limit {
            return Ok(());
        }
        let remaining = (self.order.len() - depth) as u32;
        if self.surjective && self.t - self.distinct > remaining {
            return Ok(());
        }
        if depth == self.order.len() {
            self.limit = self.lb;
            self.best = Some((self.lb, self.color.clone()));
            return Ok(());
        }
        let e = self.order[depth];
        let (u, v) = self.g.endpoints(e);
        let free = !(self.mask[u] | self.mask[v]);
        let choices: Vec<u32> = if depth == 0 { vec![1] } else { (1..=self.t).collect() };
        let mut ranked: Vec<(u64, u32)> = choices
            .into_iter()
            .filter(|&c| free & (1 << (c - 1)) != 0)
            .map(|c| (self.delta_for(e, c), c))
            .collect();
        ranked.sort_unstable();
        for (delta, c) in ranked {
            if self.lb + delta >= self.limit {
                break;
            }
            budget.used += 1;
            if budget.used > budget.limit {
                return Err(Error::BudgetExhausted(budget.limit));
            }
            self.assign(e, c);
            let r = self.run(depth + 1, budget);
            self.unassign(e, c);
            r?;
        }
        Ok(())
    }
}

/// Best proper `t`-coloring with total below `limit`, if any, and whether
/// the budget ran out before the search finished.
pub(crate) fn search_t(
    g: &Graph,
    t: u32,
    limit: u64,
    surjective: bool,
    budget: &mut Budget,
) -> Result<(Option<(u64, EdgeColoring)>, bool)> {
    if t == 0 || t > MAX_T {
        return Err(Error::InvalidParameter(format!("palette size {t} outside 1..={MAX_T}")));
    }
    let mut s = Search {
        g,
        t,
        order: edge_order(g),
        surjective,
        mask: vec![0; g.vertex_count()],
        bound: vec![0; g.vertex_count()],
        lb: 0,
        color: vec![0; g.edge_count()],
        uses: vec![0; t as usize + 1],
        distinct: 0,
        limit,
        best: None,
    };
    let exhausted = match s.run(0, budget) {
        Ok(()) => false,
        Err(Error::BudgetExhausted(_)) => true,
        Err(e) => return Err(e),
    };
    let best = match s.best {
        Some((total, colors)) => Some((total, EdgeColoring::new(t, colors)?)),
        None => None,
    };
    Ok((best, exhausted))
}

fn check_t(g: &Graph, t: u32) -> Result<()> {
    if (t as usize) < g.max_degree() {
        return Err(Error::InvalidParameter(format!("t = {t} is below the maximum degree {}", g.max_degree())));
    }
    Ok(())
}

/// A cyclic interval `t`-coloring, or `None` if there is none.
pub fn decide_cyclic_t(g: &Graph, t: u32) -> Result<Option<EdgeColoring>> {
    decide_cyclic_t_budget(g, t, DEFAULT_BUDGET)
}

pub fn decide_cyclic_t_budget(g: &Graph, t: u32, budget: u64) -> Result<Option<EdgeColoring>> {
    decide_with(g, t, SearchOptions { budget, surjective: false })
}

pub fn decide_with(g: &Graph, t: u32, opts: SearchOptions) -> Result<Option<EdgeColoring>> {
    check_t(g, t)?;
    let mut budget = Budget { limit: opts.budget, used: 0 };
    match search_t(g, t, 1, opts.surjective, &mut budget)? {
        (Some((_, c)), _) => Ok(Some(c)),
        (None, true) => Err(Error::BudgetExhausted(opts.budget)),
        (None, false) => Ok(None),
    }
}

/// Minimum total cyclic deficiency over proper `t`-colorings,
/// `t_min ≤ t ≤ t_max`, scanning `t` upwards and stopping at total 0.
pub fn min_cyclic_deficiency(g: &Graph, t_min: u32, t_max: u32, opts: SearchOptions) -> Result<SolverResult> {
    check_t(g, t_min)?;
    if t_min == 0 || t_min > t_max {
        return Err(Error::InvalidParameter(format!("empty range {t_min}..={t_max}")));
    }
    let mut budget = Budget { limit: opts.budget, used: 0 };
    let mut best: Option<(u64, EdgeColoring)> = None;
    let mut status = SolverStatus::OptimumFound;
    for t in t_min..=t_max {
        let limit = best.as_ref().map_or(u64::MAX, |b| b.0);
        let (found, exhausted) = search_t(g, t, limit, opts.surjective, &mut budget)?;
        if found.is_some() {
            best = found;
        }
        if best.as_ref().is_some_and(|b| b.0 == 0) {
            status = SolverStatus::Colorable;
            break;
        }
        if exhausted {
            status = SolverStatus::ExhaustedBudget;
            break;
        }
    }
    Ok(SolverResult {
        status,
        best_total: best.as_ref().map(|b| b.0),
        t_used: best.as_ref().map(|b| b.1.t()),
        witness: best.map(|b| b.1),
        nodes_explored: budget.used.min(budget.limit),
    })
}

/// Default upper end of the `t` range: `max(|E|, Δ, 1)`.
pub fn default_t_max(g: &Graph) -> u32 {
    g.edge_count().max(g.max_degree()).max(1).min(MAX_T as usize) as u32
}

/// Largest `t ≤ cap` with a cyclic interval coloring using all `t` colors;
/// `None` if no `t` in `Δ..=cap` works.
pub fn wc_max(g: &Graph, cap: u32, budget: u64) -> Result<Option<u32>> {
    let low = g.max_degree().max(1) as u32;
    let high = cap.min(g.edge_count() as u32).min(MAX_T);
    let mut b = Budget { limit: budget, used: 0 };
    for t in (low..=high).rev() {
        match search_t(g, t, 1, true, &mut b)? {
            (Some(_), _) => return Ok(Some(t)),
            (None, true) => return Err(Error::BudgetExhausted(budget)),
            (None, false) => {}
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::{cyclic_deficiency_report, max_circular_gap, verify_proper};
    use crate::families::{complete, cycle, gen_s, path, petersen_graph, star};

    #[test]
    fn bitmask_gap_matches_set_version() {
        for t in 1..=9u32 {
            for mask in 1u64..(1 << t) {
                let set: Vec<u32> = (1..=t).filter(|c| mask & (1 << (c - 1)) != 0).collect();
                assert_eq!(max_gap(mask, t), max_circular_gap(&set, t).unwrap());
            }
        }
    }

    #[test]
    fn decide_examples() {
        let c5 = cycle(5).unwrap();
        let w = decide_cyclic_t(&c5, 3).unwrap().unwrap();
        assert!(verify_proper(&c5, &w).unwrap());
        assert!(decide_cyclic_t(&star(3).unwrap(), 3).unwrap().is_some());
        let p = petersen_graph();
        assert!(decide_cyclic_t(&p, 3).unwrap().is_none());
        assert!(decide_cyclic_t(&p, 4).unwrap().is_some());
        assert!(decide_cyclic_t(&p, 2).is_err());
    }

    #[test]
    fn min_deficiency_examples() {
        let s = gen_s(1, 1, 1).unwrap();
        let r = min_cyclic_deficiency(&s, 4, 12, SearchOptions::default()).unwrap();
        assert_eq!((r.status, r.best_total), (SolverStatus::Colorable, Some(0)));
        let w = r.witness.unwrap();
        assert_eq!(cyclic_deficiency_report(&s, &w).unwrap().total, 0);
        let k4 = complete(4).unwrap();
        let r = min_cyclic_deficiency(&k4, 3, 6, SearchOptions::default()).unwrap();
        assert_eq!(r.best_total, Some(0));
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let k5 = complete(5).unwrap();
        let opts = SearchOptions { budget: 3, surjective: false };
        let r = min_cyclic_deficiency(&k5, 4, 10, opts).unwrap();
        assert_eq!(r.status, SolverStatus::ExhaustedBudget);
        assert_eq!(decide_cyclic_t_budget(&k5, 4, 3), Err(Error::BudgetExhausted(3)));
    }

    #[test]
    fn tree_wc() {
        assert_eq!(wc_max(&path(4).unwrap(), 10, DEFAULT_BUDGET).unwrap(), Some(3));
        assert_eq!(wc_max(&star(3).unwrap(), 10, DEFAULT_BUDGET).unwrap(), Some(3));
    }
}
