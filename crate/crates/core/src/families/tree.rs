use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Leaves and the path score maximum `M(T)` of a tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeMetrics {
    pub leaves: Vec<VertexId>,
    pub m_value: usize,
    /// First pair `(u, v)`, `u < v`, attaining `m_value`; absent for a single vertex.
    pub best_pair: Option<(VertexId, VertexId)>,
}

fn parents_from(t: &Graph, root: VertexId) -> Vec<Option<VertexId>> {
    let mut parent = vec![None; t.vertex_count()];
    let mut seen = vec![false; t.vertex_count()];
    let mut stack = vec![root];
    seen[root] = true;
    while let Some(x) = stack.pop() {
        for y in t.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                parent[y] = Some(x);
                stack.push(y);
            }
        }
    }
    parent
}

/// Edges of the `u`-`v` path plus edges with exactly one end on it.
pub fn lp_score(t: &Graph, u: VertexId, v: VertexId) -> Result<usize> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let parent = parents_from(t, u);
    let (mut x, mut deg_sum, mut len) = (v, t.degree(v), 1);
    while let Some(p) = parent[x] {
        deg_sum += t.degree(p);
        len += 1;
        x = p;
    }
    Ok(deg_sum + 1 - len)
}

pub fn tree_metrics(t: &Graph) -> Result<TreeMetrics> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let n = t.vertex_count();
    let leaves = t.degree_class(1);
    let deg = t.degrees();
    let mut m_value = 0;
    let mut best_pair = None;
    for u in 0..n {
        // Walk outward from u, carrying the path's degree sum and length.
        let parent = parents_from(t, u);
        let mut acc = vec![(0usize, 0usize); n];
        acc[u] = (deg[u], 1);
        let mut order = vec![u];
        let mut i = 0;
        while i < order.len() {
            let x = order[i];
            i += 1;
            for y in t.neighbors(x) {
                if parent[y] == Some(x) {
                    acc[y] = (acc[x].0 + deg[y], acc[x].1 + 1);
                    order.push(y);
                }
            }
        }
        for v in u + 1..n {
            let score = acc[v].0 + 1 - acc[v].1;
            if best_pair.is_none() || score > m_value {
                m_value = score;
                best_pair = Some((u, v));
            }
        }
    }
    Ok(TreeMetrics { leaves, m_value, best_pair })
}
