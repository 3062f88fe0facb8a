//! 2-factorization of regular multigraphs of even degree.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{euler_circuits, EdgeId, Multigraph};

/// Edge sets of the factors, each in ascending edge order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorDecomposition {
    pub factors: Vec<Vec<EdgeId>>,
}

impl FactorDecomposition {
    /// True when the factors partition the edges and each is a spanning
    /// 2-regular subgraph (a loop counts 2).
    pub fn is_valid_for(&self, mg: &Multigraph) -> bool {
        let mut seen = vec![false; mg.edge_count()];
        for f in &self.factors {
            let mut deg = vec![0usize; mg.vertex_count()];
            for &e in f {
                if e >= seen.len() || seen[e] {
                    return false;
                }
                seen[e] = true;
                let (u, v) = mg.endpoints(e);
                deg[u] += 1;
                deg[v] += 1;
            }
            if deg.iter().any(|&d| d != 2) {
                return false;
            }
        }
        seen.into_iter().all(|s| s)
    }
}

// Kuhn augmentation on the out/in auxiliary graph. `arcs[x]` lists
// (in-vertex, edge) pairs still available at out-vertex x.
fn augment(
    x: usize,
    arcs: &[Vec<(usize, EdgeId)>],
    used: &[bool],
    owner: &mut [Option<(usize, EdgeId)>],
    visited: &mut [bool],
) -> bool {
    for &(y, e) in &arcs[x] {
        if used[e] || visited[y] {
            continue;
        }
        visited[y] = true;
        let free = match owner[y] {
            None => true,
            Some((x2, _)) => augment(x2, arcs, used, owner, visited),
        };
        if free {
            owner[y] = Some((x, e));
            return true;
        }
    }
    false
}

/// Splits a `2r`-regular multigraph into `r` edge-disjoint 2-factors.
///
/// Edges are oriented along Euler circuits, which makes every vertex have
/// `r` outgoing and `r` incoming arcs; perfect matchings between out- and
/// in-copies then pull back to 2-factors.
pub fn petersen_factorize(mg: &Multigraph) -> Result<FactorDecomposition> {
    let n = mg.vertex_count();
    if let Some(v) = (0..n).find(|&v| mg.degree(v) % 2 == 1) {
        return Err(Error::NonEulerian(v));
    }
    let deg = if n == 0 { 0 } else { mg.degree(0) };
    if let Some(v) = (0..n).find(|&v| mg.degree(v) != deg) {
        return Err(Error::Precondition(format!("not regular: vertex {v} has degree {} instead of {deg}", mg.degree(v))));
    }
    let r = deg / 2;
    let mut arcs = vec![Vec::new(); n];
    for circuit in euler_circuits(mg)? {
        let walk = circuit.vertices(mg);
        for (i, &e) in circuit.edges.iter().enumerate() {
            arcs[walk[i]].push((walk[i + 1], e));
        }
    }
    for a in &mut arcs {
        a.sort_by_key(|&(_, e)| e);
    }
    let mut used = vec![false; mg.edge_count()];
    let mut factors = Vec::with_capacity(r);
    for _ in 0..r {
        let mut owner: Vec<Option<(usize, EdgeId)>> = vec![None; n];
        for x in 0..n {
            let mut visited = vec![false; n];
            if !augment(x, &arcs, &used, &mut owner, &mut visited) {
                return Err(Error::ClaimFailure("regular bipartite auxiliary graph has no perfect matching".into()));
            }
        }
        let mut factor: Vec<EdgeId> = owner.iter().map(|o| o.expect("perfect matching").1).collect();
        factor.sort_unstable();
        for &e in &factor {
            used[e] = true;
        }
        factors.push(factor);
    }
    Ok(FactorDecomposition { factors })
}
