//! Graphs with `Δ − δ ≤ 2`: total cyclic deficiency at most `|V|`.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::colorers::fan::{class1_coloring, fan_coloring, vizing_coloring};
use crate::cyclic::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};

/// Edge orders tried by the matching construction before giving up.
pub const MATCHING_ATTEMPTS: u64 = 256;

/// Colors the edges of a graph of maximum degree 2 with no odd cycle using
/// `first` and `second` alternately along each path and cycle. Returns the
/// colors in the order of `edges`.
pub fn two_color_paths_and_cycles(g: &Graph, edges: &[EdgeId], first: u32, second: u32) -> Result<Vec<u32>> {
    let mut at: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
    for (i, &e) in edges.iter().enumerate() {
        let (u, v) = g.endpoints(e);
        at[u].push(i);
        at[v].push(i);
    }
    if let Some(v) = (0..g.vertex_count()).find(|&v| at[v].len() > 2) {
        return Err(Error::ClaimFailure(format!("vertex {v} meets {} of the selected edges", at[v].len())));
    }
    let trace = |start: usize, from: VertexId| -> Vec<usize> {
        let (mut seq, mut i, mut v) = (vec![start], start, from);
        loop {
            v = g.opposite(edges[i], v);
            match at[v].iter().copied().find(|&j| j != i) {
                Some(j) if j != start => {
                    seq.push(j);
                    i = j;
                }
                _ => return seq,
            }
        }
    };
    let mut colors = vec![0u32; edges.len()];
    let paint = |seq: &[usize], colors: &mut Vec<u32>| {
        for (pos, &i) in seq.iter().enumerate() {
            colors[i] = if pos % 2 == 0 { first } else { second };
        }
    };
    // Paths from their lower end first, then the remaining cycles.
    for v in 0..g.vertex_count() {
        if at[v].len() == 1 && colors[at[v][0]] == 0 {
            paint(&trace(at[v][0], v), &mut colors);
        }
    }
    for i in 0..edges.len() {
        if colors[i] == 0 {
            let seq = trace(i, g.endpoints(edges[i]).0);
            if seq.len() % 2 == 1 {
                return Err(Error::ClaimFailure(format!("odd cycle of length {} through edge {}", seq.len(), edges[i])));
            }
            paint(&seq, &mut colors);
        }
    }
    Ok(colors)
}

// Matching of `left` into `right` candidates by augmenting paths, where
// `allowed(x, y)` tells which edges may be used.
fn augment(
    x: VertexId,
    g: &Graph,
    allowed: &dyn Fn(VertexId, VertexId, EdgeId) -> bool,
    owner: &mut [Option<(VertexId, EdgeId)>],
    visited: &mut [bool],
) -> bool {
    for &(y, e) in g.incident(x) {
        if !allowed(x, y, e) || visited[y] {
            continue;
        }
        visited[y] = true;
        let free = match owner[y] {
            None => true,
            Some((x2, _)) => augment(x2, g, allowed, owner, visited),
        };
        if free {
            owner[y] = Some((x, e));
            return true;
        }
    }
    false
}

/// A matching of `h` covering every vertex of `w` (an independent set),
/// using as few partners covered by `m_cover` as possible.
fn covering_matching(h: &Graph, w: &[VertexId], m_cover: &[bool]) -> Result<Vec<EdgeId>> {
    let n = h.vertex_count();
    let mut in_w = vec![false; n];
    for &x in w {
        in_w[x] = true;
    }
    let mut owner: Vec<Option<(VertexId, EdgeId)>> = vec![None; n];
    let mut matched = vec![false; n];
    let outside = |_: VertexId, y: VertexId, _: EdgeId| !in_w[y] && !m_cover[y];
    let anywhere = |_: VertexId, y: VertexId, _: EdgeId| !in_w[y];
    let phases: [&dyn Fn(VertexId, VertexId, EdgeId) -> bool; 2] = [&outside, &anywhere];
    for allowed in phases {
        for &x in w {
            if !matched[x] {
                let mut visited = vec![false; n];
                matched[x] = augment(x, h, allowed, &mut owner, &mut visited);
            }
        }
    }
    if let Some(&x) = w.iter().find(|&&x| !matched[x]) {
        return Err(Error::ClaimFailure(format!("no matching covers max-degree vertex {x}")));
    }
    let mut edges: Vec<EdgeId> = owner.iter().flatten().map(|&(_, e)| e).collect();
    edges.sort_unstable();
    Ok(edges)
}

// Greedy maximal matching of the subgraph induced by vertices of degree
// `d`, scanning edges in `order`.
fn greedy_matching(g: &Graph, d: usize, order: &[EdgeId]) -> (Vec<EdgeId>, Vec<bool>) {
    let mut covered = vec![false; g.vertex_count()];
    let mut out = Vec::new();
    for &e in order {
        let (u, v) = g.endpoints(e);
        if g.degree(u) == d && g.degree(v) == d && !covered[u] && !covered[v] {
            covered[u] = true;
            covered[v] = true;
            out.push(e);
        }
    }
    (out, covered)
}

fn edge_order(count: usize, attempt: u64) -> Vec<EdgeId> {
    let mut order: Vec<EdgeId> = (0..count).collect();
    if attempt > 0 {
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(attempt));
    }
    order
}

/// The three-matching construction for a Class 2 graph; `k = Δ`, `t = k+1`.
/// Attempt 0 scans edges in identity order, later attempts in seeded shuffled
/// orders; the first attempt whose matching union has no odd cycle wins.
fn matching_route(g: &Graph, k: usize) -> Result<EdgeColoring> {
    let mut last = None;
    for attempt in 0..MATCHING_ATTEMPTS {
        match matching_attempt(g, k, attempt) {
            Err(Error::ClaimFailure(msg)) => last = Some(msg),
            other => return other,
        }
    }
    Err(Error::ClaimFailure(last.unwrap_or_default()))
}

fn matching_attempt(g: &Graph, k: usize, attempt: u64) -> Result<EdgeColoring> {
    let (m, m_cover) = greedy_matching(g, k, &edge_order(g.edge_count(), attempt));
    let mut in_hat = vec![false; g.edge_count()];
    for &e in &m {
        in_hat[e] = true;
    }
    let (h, h_back) = g.spanning_subgraph(|e| !in_hat[e]);
    let w = h.degree_class(k);
    let m1: Vec<EdgeId> = covering_matching(&h, &w, &m_cover)?.into_iter().map(|e| h_back[e]).collect();
    for &e in &m1 {
        in_hat[e] = true;
    }
    let (j, j_back) = g.spanning_subgraph(|e| !in_hat[e]);
    let (m2, _) = greedy_matching(&j, k - 1, &edge_order(j.edge_count(), attempt));
    for e in m2 {
        in_hat[j_back[e]] = true;
    }
    let hat: Vec<EdgeId> = (0..g.edge_count()).filter(|&e| in_hat[e]).collect();
    let hat_colors = two_color_paths_and_cycles(g, &hat, k as u32, k as u32 + 1)?;
    let (rest, rest_back) = g.spanning_subgraph(|e| !in_hat[e]);
    let psi = fan_coloring(&rest, k as u32 - 1).map_err(|err| match err {
        Error::AdjacentMaxDegree(u, v) => Error::ClaimFailure(format!(
            "vertices {} and {} of degree {} stay adjacent after removing the matchings",
            u,
            v,
            k - 1
        )),
        other => other,
    })?;
    let mut colors = vec![0u32; g.edge_count()];
    for (e, &orig) in rest_back.iter().enumerate() {
        colors[orig] = psi.color(e).expect("complete coloring");
    }
    for (i, &e) in hat.iter().enumerate() {
        colors[e] = hat_colors[i];
    }
    EdgeColoring::new(k as u32 + 1, colors)
}

/// For `Δ − δ ≤ 2`, with `k = Δ`: a `k`-coloring when the degree-`k`
/// vertices are independent or Vizing finds one; otherwise a matching `M` of
/// the degree-`k` vertices, a matching `M'` covering the degree-`k` vertices
/// of `G − M`, a maximal matching `M''` of the degree-`(k−1)` vertices left,
/// colors `k, k+1` on their union and `1..k−1` elsewhere.
pub fn smalldiff_coloring(g: &Graph) -> Result<EdgeColoring> {
    let (delta, min) = (g.max_degree(), g.min_degree());
    if delta - min > 2 {
        return Err(Error::Precondition(format!("degree spread {} exceeds 2", delta - min)));
    }
    if delta == 0 {
        return EdgeColoring::new(1, Vec::new());
    }
    match class1_coloring(g) {
        Ok(c) => return Ok(c),
        Err(Error::AdjacentMaxDegree(..)) => {}
        Err(e) => return Err(e),
    }
    let viz = vizing_coloring(g)?;
    if viz.max_color() as usize <= delta {
        return viz.with_t(delta as u32);
    }
    if delta - min <= 1 {
        // Every vertex misses at most two of the Δ+1 colors.
        return viz.with_t(delta as u32 + 1);
    }
    matching_route(g, delta)
}
