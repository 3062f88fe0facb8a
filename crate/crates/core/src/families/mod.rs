//! Named graph families and structural transforms.
//!
//! Every generator fixes its vertex numbering and attaches role labels so that
//! colorers and tests can address vertices by role (`u0`, `x3`, `apex`, ...).
//! The numbering of each family is documented on its constructor.

mod projective;
mod tree;

pub use projective::{is_prime, projective_plane, ProjectivePlane};
pub use tree::{lp_score, tree_metrics, TreeMetrics};

use crate::error::{Error, Result};
use crate::graph::Graph;

fn labelled(g: Graph, labels: Vec<String>) -> Graph {
    g.with_labels(labels).expect("one label per vertex")
}

fn require(cond: bool, msg: impl Into<String>) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg.into()))
    }
}

/// `K_n` on `0..n`, edges in lexicographic order.
pub fn complete(n: usize) -> Result<Graph> {
    require(n >= 1, "complete graph needs n >= 1")?;
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// `K_{m,n}`: left part `0..m`, right part `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    require(m >= 1 && n >= 1, "complete bipartite graph needs m, n >= 1")?;
    let mut g = Graph::new(m + n);
    for u in 0..m {
        for v in 0..n {
            g.add_edge(u, m + v)?;
        }
    }
    Ok(g)
}

/// `C_n` with edges `i, i+1 (mod n)`.
pub fn cycle(n: usize) -> Result<Graph> {
    require(n >= 3, "cycle needs n >= 3")?;
    let mut g = Graph::new(n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n)?;
    }
    Ok(g)
}

/// `P_n`: the path on `n` vertices.
pub fn path(n: usize) -> Result<Graph> {
    require(n >= 1, "path needs n >= 1")?;
    let mut g = Graph::new(n);
    for i in 1..n {
        g.add_edge(i - 1, i)?;
    }
    Ok(g)
}

/// `K_{1,n}` with the center at 0.
pub fn star(n: usize) -> Result<Graph> {
    complete_bipartite(1, n)
}

/// `Q_n` on bit strings `0..2^n`; edges ordered by lower endpoint, then bit.
pub fn hypercube(n: u32) -> Result<Graph> {
    require(n <= 20, "hypercube dimension above 20 is not supported")?;
    let size = 1usize << n;
    let mut g = Graph::new(size);
    for v in 0..size {
        for bit in 0..n {
            let w = v ^ (1 << bit);
            if v < w {
                g.add_edge(v, w)?;
            }
        }
    }
    Ok(g)
}

/// The Petersen graph: outer cycle `0..5`, inner pentagram `5..10`.
pub fn petersen_graph() -> Graph {
    let mut g = Graph::new(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5).expect("simple");
        g.add_edge(i, i + 5).expect("simple");
        g.add_edge(5 + i, 5 + (i + 2) % 5).expect("simple");
    }
    g
}

fn names(prefix: &str, count: usize) -> impl Iterator<Item = String> + '_ {
    (1..=count).map(move |i| format!("{prefix}{i}"))
}

/// `S_{a,b,c}`.
///
/// Vertices: `u0..u3 = 0..4`, `v1..v3 = 4..7`, then `x_1..x_a`, `y_1..y_b`,
/// `z_1..z_c`. Edges: the hexagon `u1v1, v1u2, u2v2, v2u3, u3v3, v3u1`, then
/// `u0x_i, u1x_i` for each `i`, `u0y_j, u2y_j` for each `j`, `u0z_k, u3z_k`
/// for each `k`.
pub fn gen_s(a: usize, b: usize, c: usize) -> Result<Graph> {
    require(a >= 1 && b >= 1 && c >= 1, "S_{a,b,c} needs a, b, c >= 1")?;
    let (x0, y0, z0) = (7, 7 + a, 7 + a + b);
    let mut g = Graph::new(7 + a + b + c);
    for (p, q) in [(1, 4), (4, 2), (2, 5), (5, 3), (3, 6), (6, 1)] {
        g.add_edge(p, q)?;
    }
    for (start, count, hub) in [(x0, a, 1), (y0, b, 2), (z0, c, 3)] {
        for i in 0..count {
            g.add_edge(0, start + i)?;
            g.add_edge(hub, start + i)?;
        }
    }
    let labels = ["u0", "u1", "u2", "u3", "v1", "v2", "v3"]
        .iter()
        .map(|s| s.to_string())
        .chain(names("x", a))
        .chain(names("y", b))
        .chain(names("z", c))
        .collect();
    Ok(labelled(g, labels))
}

/// `M_{a,b,c}`.
///
/// Vertices: `u0..u3 = 0..4`, then `x_1..x_a`, `y_1..y_b`, `z_1..z_c`.
/// Edges: `u0x_i, u1x_i, u2x_i` per `i`; `u0y_j, u2y_j, u3y_j` per `j`;
/// `u0z_k, u3z_k, u1z_k` per `k`.
pub fn gen_m(a: usize, b: usize, c: usize) -> Result<Graph> {
    require(a >= 1 && b >= 1 && c >= 1, "M_{a,b,c} needs a, b, c >= 1")?;
    let (x0, y0, z0) = (4, 4 + a, 4 + a + b);
    let mut g = Graph::new(4 + a + b + c);
    for (start, count, hubs) in [(x0, a, [0, 1, 2]), (y0, b, [0, 2, 3]), (z0, c, [0, 3, 1])] {
        for i in 0..count {
            for h in hubs {
                g.add_edge(h, start + i)?;
            }
        }
    }
    let labels = ["u0", "u1", "u2", "u3"]
        .iter()
        .map(|s| s.to_string())
        .chain(names("x", a))
        .chain(names("y", b))
        .chain(names("z", c))
        .collect();
    Ok(labelled(g, labels))
}

/// Index of vertex `d` in [`gen_hertz`]`(p, q)`.
pub fn hertz_d(p: usize) -> usize {
    p + 1
}

/// The Hertz graph `H_{p,q}`.
///
/// Vertices: `a = 0`, `b_i = i` for `1 <= i <= p`, `d = p + 1`, and
/// `c_j^(i) = p + 2 + (i-1)q + (j-1)`. Edges: `ab_i`, then `b_i c_j^(i)`
/// (`i`-major), then `c_j^(i) d`.
pub fn gen_hertz(p: usize, q: usize) -> Result<Graph> {
    require(p >= 2 && q >= 2, "H_{p,q} needs p, q >= 2")?;
    let c = |i: usize, j: usize| p + 2 + i * q + j;
    let mut g = Graph::new(p * q + p + 2);
    for i in 0..p {
        g.add_edge(0, 1 + i)?;
    }
    for i in 0..p {
        for j in 0..q {
            g.add_edge(1 + i, c(i, j))?;
        }
    }
    for i in 0..p {
        for j in 0..q {
            g.add_edge(c(i, j), hertz_d(p))?;
        }
    }
    let mut labels = vec!["a".to_string()];
    labels.extend(names("b", p));
    labels.push("d".into());
    for i in 1..=p {
        for j in 1..=q {
            labels.push(format!("c{j}^{i}"));
        }
    }
    Ok(labelled(g, labels))
}

/// The tree `H_{p,q} - d`.
pub fn hertz_tree(p: usize, q: usize) -> Result<Graph> {
    gen_hertz(p, q)?.without_vertex(hertz_d(p))
}

fn base_labels(g: &Graph) -> Vec<String> {
    match g.labels() {
        Some(l) => l.to_vec(),
        None => (0..g.vertex_count()).map(|v| format!("v{v}")).collect(),
    }
}

/// `S(G)`: vertex `n + e` subdivides edge `e`; edges `v_i w_e, v_j w_e` per
/// edge of `g` in order.
pub fn subdivide(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let mut s = Graph::new(n + g.edge_count());
    let mut labels = base_labels(g);
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        s.add_edge(u, n + e).expect("fresh vertex");
        s.add_edge(v, n + e).expect("fresh vertex");
        labels.push(format!("w{u}_{v}"));
    }
    labelled(s, labels)
}

/// `Ĝ`: `S(G)` plus an apex (the last vertex, `n + m`) joined to every
/// subdivision vertex; the apex edges follow the edges of `S(G)`.
pub fn hat(g: &Graph) -> Result<Graph> {
    require(g.edge_count() >= 1, "hat needs at least one edge")?;
    let n = g.vertex_count();
    let mut h = subdivide(g);
    let apex = h.add_vertex();
    for e in 0..g.edge_count() {
        h.add_edge(apex, n + e)?;
    }
    let mut labels = h.labels().map(<[String]>::to_vec).unwrap_or_default();
    labels[apex] = "u".into();
    h.set_labels(labels)?;
    Ok(h)
}

/// `T̃`: apex `u = n` joined to every leaf of the tree `t`, in ascending leaf
/// order after the tree edges.
pub fn tilde(t: &Graph) -> Result<Graph> {
    if !t.is_tree() || t.vertex_count() < 2 {
        return Err(Error::NotATree);
    }
    let leaves = t.degree_class(1);
    let mut labels = base_labels(t);
    let mut g = t.clone();
    let apex = g.add_vertex();
    for leaf in leaves {
        g.add_edge(apex, leaf)?;
    }
    labels.push("u".into());
    g.set_labels(labels)?;
    Ok(g)
}

/// `Erd(r_1, ..., r_N)` over the plane `π(n)`, `N = n² + n + 1`.
///
/// Vertices: `u = 0`, point `k` is vertex `k` (`1..=N`), then the `r_i`
/// copies of line `l_i` in line order. Edges: `u` to every line copy, then
/// each line copy to the points of its line in ascending order.
pub fn gen_erd(n: u32, r: &[u32]) -> Result<Graph> {
    let plane = projective_plane(n)?;
    let count = plane.point_count();
    if r.len() != count {
        return Err(Error::InvalidParameter(format!("need {count} multiplicities, got {}", r.len())));
    }
    require(r.iter().all(|&x| x >= 1), "multiplicities must be >= 1")?;
    let total: usize = r.iter().map(|&x| x as usize).sum();
    let mut g = Graph::new(1 + count + total);
    let mut labels: Vec<String> = std::iter::once("u".to_string())
        .chain((1..=count).map(|k| format!("p{k}")))
        .collect();
    let mut copies = Vec::with_capacity(total);
    for (i, &ri) in r.iter().enumerate() {
        for s in 1..=ri {
            copies.push((i, 1 + count + copies.len()));
            labels.push(format!("l{}_{s}", i + 1));
        }
    }
    for &(_, vtx) in &copies {
        g.add_edge(0, vtx)?;
    }
    for &(line, vtx) in &copies {
        for &point in &plane.lines()[line] {
            g.add_edge(vtx, point)?;
        }
    }
    Ok(labelled(g, labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{bipartition, diameter, is_bipartite};

    #[test]
    fn s_graph_counts() {
        let g = gen_s(7, 7, 7).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (28, 48));
        let g = gen_s(1, 1, 1).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (10, 12));
        assert!(is_bipartite(&g) && g.is_connected());
        assert_eq!(gen_s(2, 3, 4).unwrap().degree(0), 9);
        assert!(gen_s(0, 1, 1).is_err());
    }

    #[test]
    fn m_graph_counts() {
        let g = gen_m(5, 5, 5).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (19, 45));
        let g = gen_m(1, 1, 1).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (7, 9));
        assert!(is_bipartite(&g) && g.is_connected());
        assert_eq!(gen_m(1, 2, 3).unwrap().degree(0), 6);
    }

    #[test]
    fn hertz_counts() {
        let g = gen_hertz(4, 3).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count(), g.max_degree()), (18, 28, 12));
        let g2 = gen_hertz(2, 2).unwrap();
        assert_eq!((g2.vertex_count(), g2.edge_count()), (8, 10));
        let (x, y) = bipartition(&g).unwrap();
        assert!(x.contains(&0));
        assert!((6..18).all(|c| x.contains(&c)));
        assert!(y.contains(&hertz_d(4)));
        assert!(gen_hertz(1, 3).is_err());
    }

    #[test]
    fn subdivide_and_hat() {
        let k2 = complete(2).unwrap();
        let s = subdivide(&k2);
        assert_eq!(s.edges(), &[(0, 2), (1, 2)]);
        let h = hat(&complete(4).unwrap()).unwrap();
        assert_eq!((h.vertex_count(), h.edge_count()), (11, 18));
        assert_eq!(h.degree(10), 6);
        assert!(is_bipartite(&hat(&petersen_graph()).unwrap()));
        assert!(hat(&Graph::new(3)).is_err());
    }

    #[test]
    fn tilde_examples() {
        let c4 = tilde(&path(3).unwrap()).unwrap();
        assert_eq!(c4.vertex_count(), 4);
        assert!(c4.degrees().iter().all(|&d| d == 2));
        assert!(c4.is_connected());
        let s = tilde(&star(4).unwrap()).unwrap();
        assert_eq!(s.degree(5), 4);
        assert_eq!(s.max_degree(), 4);
        assert_eq!(tilde(&cycle(4).unwrap()), Err(Error::NotATree));
    }

    #[test]
    fn erd_counts() {
        let g = gen_erd(3, &[1; 13]).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count(), g.max_degree()), (27, 65, 13));
        assert!(is_bipartite(&g) && g.is_connected());
        let g = gen_erd(2, &[1; 7]).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count(), g.max_degree()), (15, 28, 7));
        let g = gen_erd(2, &[2, 1, 1, 1, 1, 1, 1]).unwrap();
        assert_eq!(g.max_degree(), 8);
        assert!(gen_erd(2, &[1; 6]).is_err());
        assert_eq!(gen_erd(4, &[1; 21]), Err(Error::UnsupportedOrder(4)));
    }

    #[test]
    fn classic_families() {
        let q3 = hypercube(3).unwrap();
        assert_eq!((q3.vertex_count(), q3.edge_count()), (8, 12));
        let k33 = complete_bipartite(3, 3).unwrap();
        assert_eq!((diameter(&k33).unwrap(), k33.max_degree()), (2, 3));
        assert_eq!(complete(5).unwrap().edge_count(), 10);
        assert_eq!(hypercube(5).unwrap().edge_count(), 5 * 16);
        assert!(cycle(2).is_err());
    }

    #[test]
    fn handshake_holds_for_generators() {
        let graphs = [
            gen_s(3, 1, 2).unwrap(),
            gen_m(2, 2, 4).unwrap(),
            gen_hertz(3, 4).unwrap(),
            hat(&petersen_graph()).unwrap(),
            gen_erd(3, &[2; 13]).unwrap(),
            hypercube(4).unwrap(),
        ];
        for g in graphs {
            assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
        }
    }
}
