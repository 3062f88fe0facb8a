//! Color sets modulo `t`, proper edge colorings and their cyclic deficiency.
//!
//! A set `S ⊆ {1..t}` is a cyclic interval modulo `t` when it, or its
//! complement, is a run of consecutive integers; equivalently `S` is a
//! circular arc of `{1..t}`. The deficiency of `S` modulo `t` is the number of
//! colors that must be added to reach such an arc. The smallest arc covering
//! `S` omits exactly the largest circular gap of `S`, which gives the closed
//! form `t - |S| - maxgap(S)`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};

fn normalized(s: &[u32], t: u32) -> Result<Vec<u32>> {
    if t == 0 {
        return Err(Error::InvalidParameter("palette size t must be positive".into()));
    }
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut v = s.to_vec();
    v.sort_unstable();
    v.dedup();
    if let Some(&bad) = v.iter().find(|&&x| x == 0 || x > t) {
        return Err(Error::ColorOutOfRange { element: bad, t });
    }
    Ok(v)
}

fn gap_of_sorted(s: &[u32], t: u32) -> u32 {
    let wrap = s[0] + t - s[s.len() - 1] - 1;
    s.windows(2).map(|w| w[1] - w[0] - 1).fold(wrap, u32::max)
}

/// The longest run of values of `{1..t} \ s` between circularly consecutive
/// elements of `s`.
pub fn max_circular_gap(s: &[u32], t: u32) -> Result<u32> {
    let s = normalized(s, t)?;
    Ok(gap_of_sorted(&s, t))
}

/// Length of the shortest circular arc of `{1..t}` containing `s`.
pub fn covering_arc(s: &[u32], t: u32) -> Result<u32> {
    Ok(t - max_circular_gap(s, t)?)
}

/// Minimum number of colors to add to `s` to obtain a cyclic interval
/// modulo `t`.
pub fn deficiency_mod_t(s: &[u32], t: u32) -> Result<u32> {
    let s = normalized(s, t)?;
    Ok(t - s.len() as u32 - gap_of_sorted(&s, t))
}

pub fn is_cyclic_interval(s: &[u32], t: u32) -> Result<bool> {
    Ok(deficiency_mod_t(s, t)? == 0)
}

/// At most one added color turns `s` into a cyclic interval modulo `t`.
pub fn is_near_cyclic(s: &[u32], t: u32) -> Result<bool> {
    Ok(deficiency_mod_t(s, t)? <= 1)
}

/// Gap count of `s` as a plain (non-wrapping) interval:
/// `max(s) - min(s) + 1 - |s|`.
pub fn interval_deficiency(s: &[u32]) -> Result<u32> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut v = s.to_vec();
    v.sort_unstable();
    v.dedup();
    Ok(v[v.len() - 1] - v[0] + 1 - v.len() as u32)
}

/// An assignment of colors `1..=t` to the edges of a graph, indexed by edge
/// identity. Colorings need not use every color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    t: u32,
    colors: Vec<Option<u32>>,
}

impl EdgeColoring {
    /// A complete coloring; every color must lie in `1..=t`.
    pub fn new(t: u32, colors: Vec<u32>) -> Result<Self> {
        let mut c = EdgeColoring::uncolored(t, colors.len())?;
        for (e, color) in colors.into_iter().enumerate() {
            c.set(e, color)?;
        }
        Ok(c)
    }

    pub fn uncolored(t: u32, edge_count: usize) -> Result<Self> {
        if t == 0 {
            return Err(Error::InvalidParameter("palette size t must be positive".into()));
        }
        Ok(EdgeColoring { t, colors: vec![None; edge_count] })
    }

    pub fn set(&mut self, e: EdgeId, color: u32) -> Result<()> {
        if color == 0 || color > self.t {
            return Err(Error::ColorOutOfRange { element: color, t: self.t });
        }
        self.colors[e] = Some(color);
        Ok(())
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, e: EdgeId) -> Option<u32> {
        self.colors[e]
    }

    pub fn colors(&self) -> &[Option<u32>] {
        &self.colors
    }

    pub fn is_complete(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    /// Same colors, different palette size.
    pub fn with_t(&self, t: u32) -> Result<Self> {
        let mut c = EdgeColoring::uncolored(t, self.len())?;
        for (e, color) in self.colors.iter().enumerate() {
            if let Some(color) = *color {
                c.set(e, color)?;
            }
        }
        Ok(c)
    }

    /// `S(v, α)`: sorted colors on the colored edges at `v`.
    pub fn palette(&self, g: &Graph, v: VertexId) -> Vec<u32> {
        let mut p: Vec<u32> = g.incident(v).iter().filter_map(|&(_, e)| self.colors[e]).collect();
        p.sort_unstable();
        p
    }

    pub fn colors_used(&self) -> BTreeSet<u32> {
        self.colors.iter().flatten().copied().collect()
    }

    pub fn max_color(&self) -> u32 {
        self.colors.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Every color of `1..=t` occurs on some edge.
    pub fn is_surjective(&self) -> bool {
        self.colors_used().len() == self.t as usize
    }

    /// Shifts every color by `k` modulo `t`.
    pub fn rotated(&self, k: u32) -> Self {
        let t = self.t;
        EdgeColoring {
            t,
            colors: self.colors.iter().map(|c| c.map(|x| (x - 1 + k) % t + 1)).collect(),
        }
    }

    /// Renames color `c` to `perm[c - 1]`; `perm` must be a permutation of
    /// `1..=t`.
    pub fn permuted(&self, perm: &[u32]) -> Result<Self> {
        let mut sorted = perm.to_vec();
        sorted.sort_unstable();
        if sorted != (1..=self.t).collect::<Vec<_>>() {
            return Err(Error::InvalidParameter("not a permutation of the palette".into()));
        }
        Ok(EdgeColoring {
            t: self.t,
            colors: self.colors.iter().map(|c| c.map(|x| perm[x as usize - 1])).collect(),
        })
    }
}

fn check_shape(g: &Graph, c: &EdgeColoring) -> Result<()> {
    if c.len() != g.edge_count() {
        return Err(Error::ColoringSizeMismatch { expected: g.edge_count(), found: c.len() });
    }
    if let Some(e) = c.colors.iter().position(Option::is_none) {
        return Err(Error::UncoloredEdge(e));
    }
    Ok(())
}

/// First pair of adjacent edges sharing a color, scanning vertices in order.
pub fn find_conflict(g: &Graph, c: &EdgeColoring) -> Result<Option<(EdgeId, EdgeId)>> {
    check_shape(g, c)?;
    let mut seen: Vec<Option<EdgeId>> = vec![None; c.t as usize + 1];
    for v in 0..g.vertex_count() {
        let inc = g.incident(v);
        for &(_, e) in inc {
            let color = c.colors[e].unwrap_or(0) as usize;
            if let Some(prev) = seen[color] {
                return Ok(Some((prev.min(e), prev.max(e))));
            }
            seen[color] = Some(e);
        }
        for &(_, e) in inc {
            seen[c.colors[e].unwrap_or(0) as usize] = None;
        }
    }
    Ok(None)
}

/// True iff no two edges sharing an endpoint have the same color.
pub fn verify_proper(g: &Graph, c: &EdgeColoring) -> Result<bool> {
    Ok(find_conflict(g, c)?.is_none())
}

/// Per-vertex deficiencies of a proper coloring.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct DeficiencyReport {
    pub t: u32,
    pub per_vertex: Vec<u32>,
    pub total: u64,
    pub is_interval: Vec<bool>,
    pub is_cyclic_interval: Vec<bool>,
}

impl DeficiencyReport {
    fn from_parts(t: u32, per_vertex: Vec<u32>, palettes: &[Vec<u32>]) -> Self {
        let is_interval = palettes
            .iter()
            .map(|p| p.is_empty() || interval_deficiency(p).map(|d| d == 0).unwrap_or(false))
            .collect();
        let is_cyclic_interval = palettes
            .iter()
            .map(|p| p.is_empty() || deficiency_mod_t(p, t).map(|d| d == 0).unwrap_or(false))
            .collect();
        DeficiencyReport {
            t,
            total: per_vertex.iter().map(|&d| u64::from(d)).sum(),
            per_vertex,
            is_interval,
            is_cyclic_interval,
        }
    }
}

fn proper_palettes(g: &Graph, c: &EdgeColoring) -> Result<Vec<Vec<u32>>> {
    if let Some((e1, e2)) = find_conflict(g, c)? {
        return Err(Error::ImproperColoring(e1, e2));
    }
    Ok((0..g.vertex_count()).map(|v| c.palette(g, v)).collect())
}

/// `def_c(v, α)` for every vertex and their sum `def_c(G, α)`. Isolated
/// vertices contribute 0.
pub fn cyclic_deficiency_report(g: &Graph, c: &EdgeColoring) -> Result<DeficiencyReport> {
    let palettes = proper_palettes(g, c)?;
    let per_vertex = palettes
        .iter()
        .map(|p| if p.is_empty() { Ok(0) } else { deficiency_mod_t(p, c.t) })
        .collect::<Result<Vec<_>>>()?;
    Ok(DeficiencyReport::from_parts(c.t, per_vertex, &palettes))
}

/// Non-wrapping gap counts `(max - min + 1) - |S(v)|` for every vertex.
pub fn interval_deficiency_report(g: &Graph, c: &EdgeColoring) -> Result<DeficiencyReport> {
    let palettes = proper_palettes(g, c)?;
    let per_vertex = palettes
        .iter()
        .map(|p| if p.is_empty() { Ok(0) } else { interval_deficiency(p) })
        .collect::<Result<Vec<_>>>()?;
    Ok(DeficiencyReport::from_parts(c.t, per_vertex, &palettes))
}
