//! Fan recoloring (Misra–Gries) with an explicit palette size.
//!
//! With `palette = Δ + 1` this is the classical Vizing construction. With
//! `palette = Δ` it succeeds whenever the vertices of degree `Δ` are pairwise
//! nonadjacent: edges away from those vertices are colored first, then each
//! remaining edge is colored with its fan centered at the max-degree end, whose
//! neighbours all keep a free color.

use crate::cyclic::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{is_bipartite, EdgeId, Graph, VertexId};

struct State<'g> {
    g: &'g Graph,
    palette: u32,
    color: Vec<u32>,
    // at[v][c] is the edge colored `c` at `v`; index 0 unused.
    at: Vec<Vec<Option<EdgeId>>>,
}

impl<'g> State<'g> {
    fn new(g: &'g Graph, palette: u32) -> Self {
        State {
            g,
            palette,
            color: vec![0; g.edge_count()],
            at: vec![vec![None; palette as usize + 1]; g.vertex_count()],
        }
    }

    fn is_free(&self, v: VertexId, c: u32) -> bool {
        self.at[v][c as usize].is_none()
    }

    fn free(&self, v: VertexId) -> Option<u32> {
        (1..=self.palette).find(|&c| self.is_free(v, c))
    }

    fn paint(&mut self, e: EdgeId, c: u32) {
        let (u, v) = self.g.endpoints(e);
        let old = self.color[e];
        if old != 0 {
            self.at[u][old as usize] = None;
            self.at[v][old as usize] = None;
        }
        self.color[e] = c;
        if c != 0 {
            self.at[u][c as usize] = Some(e);
            self.at[v][c as usize] = Some(e);
        }
    }

    fn no_free(&self, v: VertexId) -> Error {
        Error::ClaimFailure(format!("fan vertex {v} has no free color in palette {}", self.palette))
    }

    // Swap c and d along the maximal c/d path that leaves x by its d edge.
    fn invert_path(&mut self, x: VertexId, c: u32, d: u32) {
        let mut path = Vec::new();
        let (mut v, mut want) = (x, d);
        while let Some(e) = self.at[v][want as usize] {
            path.push((e, want));
            v = self.g.opposite(e, v);
            want = if want == d { c } else { d };
            if v == x {
                break;
            }
        }
        for &(e, _) in &path {
            self.paint(e, 0);
        }
        for &(e, old) in &path {
            self.paint(e, if old == d { c } else { d });
        }
    }

    fn color_edge(&mut self, e: EdgeId, x: VertexId) -> Result<()> {
        let f = self.g.opposite(e, x);
        if let Some(c) = (1..=self.palette).find(|&c| self.is_free(x, c) && self.is_free(f, c)) {
            self.paint(e, c);
            return Ok(());
        }
        // Maximal fan at x starting with f.
        let mut fan = vec![(f, e)];
        let mut in_fan = vec![false; self.g.vertex_count()];
        in_fan[f] = true;
        loop {
            let last = fan.last().expect("nonempty").0;
            let next = self.g.incident(x).iter().copied().filter(|&(w, ew)| {
                !in_fan[w] && self.color[ew] != 0 && self.is_free(last, self.color[ew])
            });
            match next.min_by_key(|&(_, ew)| ew) {
                Some((w, ew)) => {
                    in_fan[w] = true;
                    fan.push((w, ew));
                }
                None => break,
            }
        }
        let c = self.free(x).ok_or_else(|| self.no_free(x))?;
        let last = fan.last().expect("nonempty").0;
        let d = self.free(last).ok_or_else(|| self.no_free(last))?;
        if c != d {
            self.invert_path(x, c, d);
        }
        // Shortest prefix that is still a fan and ends at a vertex free in d.
        let mut w = None;
        for i in 0..fan.len() {
            if i > 0 {
                let ci = self.color[fan[i].1];
                if ci == 0 || !self.is_free(fan[i - 1].0, ci) {
                    break;
                }
            }
            if self.is_free(fan[i].0, d) {
                w = Some(i);
                break;
            }
        }
        let w = w.ok_or_else(|| Error::ClaimFailure(format!("no fan prefix free in color {d} at {x}")))?;
        for i in 0..w {
            let next = self.color[fan[i + 1].1];
            self.paint(fan[i + 1].1, 0);
            self.paint(fan[i].1, next);
        }
        if !self.is_free(x, d) || !self.is_free(fan[w].0, d) {
            return Err(Error::ClaimFailure(format!("color {d} not free after fan rotation at {x}")));
        }
        self.paint(fan[w].1, d);
        Ok(())
    }

    // König step for bipartite graphs: free a at u, b at v; swap the a/b path
    // from v, which cannot reach u.
    fn color_edge_bipartite(&mut self, e: EdgeId) -> Result<()> {
        let (u, v) = self.g.endpoints(e);
        let a = self.free(u).ok_or_else(|| self.no_free(u))?;
        if !self.is_free(v, a) {
            let b = self.free(v).ok_or_else(|| self.no_free(v))?;
            self.invert_path(v, b, a);
        }
        if !self.is_free(u, a) || !self.is_free(v, a) {
            return Err(Error::ClaimFailure(format!("alternating path from {v} reached {u}")));
        }
        self.paint(e, a);
        Ok(())
    }
}

/// Proper coloring with colors from `1..=palette`.
///
/// Requires `Δ ≤ palette` and, when `Δ = palette`, the max-degree vertices to
/// be independent (otherwise `AdjacentMaxDegree`).
pub fn fan_coloring(g: &Graph, palette: u32) -> Result<EdgeColoring> {
    let palette = palette.max(1);
    let delta = g.max_degree();
    if delta > palette as usize {
        return Err(Error::Precondition(format!("maximum degree {delta} exceeds palette {palette}")));
    }
    let full: Vec<bool> = (0..g.vertex_count()).map(|v| g.degree(v) == palette as usize).collect();
    if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| full[u] && full[v]) {
        return Err(Error::AdjacentMaxDegree(u, v));
    }
    let mut st = State::new(g, palette);
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if !full[u] && !full[v] {
            st.color_edge(e, u)?;
        }
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if full[u] {
            st.color_edge(e, u)?;
        } else if full[v] {
            st.color_edge(e, v)?;
        }
    }
    EdgeColoring::new(palette, st.color)
}

/// Proper coloring with at most `Δ + 1` colors; `t` is the largest color used.
pub fn vizing_coloring(g: &Graph) -> Result<EdgeColoring> {
    let c = fan_coloring(g, g.max_degree() as u32 + 1)?;
    c.with_t(c.max_color().max(1))
}

/// Proper `Δ`-coloring of a graph whose max-degree vertices are independent,
/// or of any bipartite graph (alternating paths).
pub fn class1_coloring(g: &Graph) -> Result<EdgeColoring> {
    let delta = g.max_degree() as u32;
    match fan_coloring(g, delta) {
        Err(Error::AdjacentMaxDegree(u, v)) => {
            if !is_bipartite(g) {
                return Err(Error::AdjacentMaxDegree(u, v));
            }
            let mut st = State::new(g, delta.max(1));
            for e in 0..g.edge_count() {
                st.color_edge_bipartite(e)?;
            }
            EdgeColoring::new(delta.max(1), st.color)
        }
        other => other,
    }
}
