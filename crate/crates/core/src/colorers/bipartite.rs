//! Colorings of bipartite graphs from 2-factorizations of a regular cover.

use crate::colorers::petersen::petersen_factorize;
use crate::cyclic::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{is_bipartite, two_copy_join, EdgeId, Graph, Multigraph};

/// The deficiency guaranteed by [`bipartite_bound_coloring`]:
/// `Σ_{3≤d≤Δ−3} (Δ−2−d)|V_d|` for even `Δ` and `Σ_{3≤d≤Δ−2} (Δ−1−d)|V_d|`
/// for odd `Δ`.
pub fn bipartite_certified_bound(g: &Graph) -> u64 {
    let delta = g.max_degree();
    let (top, shift) = if delta % 2 == 0 { (delta.saturating_sub(3), 2) } else { (delta.saturating_sub(2), 1) };
    g.degrees()
        .iter()
        .filter(|&&d| d >= 3 && d <= top)
        .map(|&d| (delta - shift - d) as u64)
        .sum()
}

// Even maximum degree 2r: pad two joined copies with loops to a 2r-regular
// multigraph, factorize, and color the cycles of factor i with 2i−1, 2i.
fn even_case(g: &Graph, r: usize) -> Result<Vec<u32>> {
    let n = g.vertex_count();
    let doubled = two_copy_join(g, |h, v| h.degree(v) % 2 == 1);
    let mut mg = Multigraph::from_graph(&doubled);
    for v in 0..2 * n {
        for _ in 0..(2 * r - doubled.degree(v)) / 2 {
            mg.add_edge(v, v)?;
        }
    }
    let factors = petersen_factorize(&mg)?;
    let mut colors = vec![0u32; doubled.edge_count()];
    for (i, factor) in factors.factors.iter().enumerate() {
        let (odd, even) = (2 * i as u32 + 1, 2 * i as u32 + 2);
        let real: Vec<EdgeId> = factor.iter().copied().filter(|&e| !mg.is_loop(e)).collect();
        let mut at: Vec<Vec<EdgeId>> = vec![Vec::new(); 2 * n];
        for &e in &real {
            let (u, v) = mg.endpoints(e);
            at[u].push(e);
            at[v].push(e);
        }
        let mut done = vec![false; mg.edge_count()];
        for &first in &real {
            if done[first] {
                continue;
            }
            // Walk the cycle through `first`, alternating colors.
            let (start, _) = mg.endpoints(first);
            let (mut v, mut e, mut parity) = (start, first, 0);
            while !done[e] {
                done[e] = true;
                colors[e] = if parity == 0 { odd } else { even };
                parity ^= 1;
                v = mg.opposite(e, v);
                e = *at[v].iter().find(|&&x| x != e).ok_or_else(|| {
                    Error::ClaimFailure(format!("factor {i} is not 2-regular at vertex {v}"))
                })?;
            }
            if parity == 1 {
                return Err(Error::ClaimFailure(format!("factor {i} contains an odd cycle")));
            }
        }
    }
    colors.truncate(g.edge_count());
    Ok(colors)
}

/// Proper coloring of a bipartite graph with `t = Δ` (even `Δ`) or `Δ + 1`
/// (odd `Δ`) whose total cyclic deficiency is at most
/// [`bipartite_certified_bound`].
pub fn bipartite_bound_coloring(g: &Graph) -> Result<EdgeColoring> {
    if !is_bipartite(g) {
        return Err(Error::NotBipartite);
    }
    let delta = g.max_degree();
    if delta <= 1 {
        return EdgeColoring::new(1, vec![1; g.edge_count()]);
    }
    if delta % 2 == 0 {
        return EdgeColoring::new(delta as u32, even_case(g, delta / 2)?);
    }
    let lifted = two_copy_join(g, |h, v| h.degree(v) == delta);
    let mut colors = even_case(&lifted, (delta + 1) / 2)?;
    colors.truncate(g.edge_count());
    EdgeColoring::new(delta as u32 + 1, colors)
}
