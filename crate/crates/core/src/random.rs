//! Seeded random generators. Every generator is a pure function of its
//! parameters and seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Multigraph};

const MAX_ATTEMPTS: usize = 10_000;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random `2r`-regular multigraph on `n` vertices (configuration model; loops
/// and parallel edges allowed).
pub fn random_even_regular_multigraph(n: usize, r: usize, seed: u64) -> Result<Multigraph> {
    if n == 0 || r == 0 {
        return Err(Error::InvalidParameter("need n >= 1 and r >= 1".into()));
    }
    let mut rng = rng(seed);
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat(v).take(2 * r)).collect();
    stubs.shuffle(&mut rng);
    let mut mg = Multigraph::new(n);
    for pair in stubs.chunks(2) {
        mg.add_edge(pair[0], pair[1])?;
    }
    Ok(mg)
}

/// Random simple bipartite graph with parts of size `left` and `right` and
/// maximum degree exactly `delta`. Each admissible pair is kept with
/// probability `density`, subject to the degree cap.
pub fn random_bipartite(left: usize, right: usize, delta: usize, density: f64, seed: u64) -> Result<Graph> {
    if delta == 0 || left == 0 || right == 0 || (delta > right && delta > left) {
        return Err(Error::InvalidParameter("delta does not fit the parts".into()));
    }
    let mut rng = rng(seed);
    let mut g = Graph::new(left + right);
    // Force one vertex of degree delta on the side that can hold it.
    if delta <= right {
        for j in 0..delta {
            g.add_edge(0, left + j)?;
        }
    } else {
        for i in 0..delta {
            g.add_edge(i, left)?;
        }
    }
    let mut pairs: Vec<(usize, usize)> = (0..left).flat_map(|i| (0..right).map(move |j| (i, left + j))).collect();
    pairs.shuffle(&mut rng);
    for (u, v) in pairs {
        if g.has_edge(u, v) || !rng.gen_bool(density.clamp(0.0, 1.0)) {
            continue;
        }
        if g.degree(u) < delta && g.degree(v) < delta {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// Random simple graph on `n` vertices with maximum degree at most `delta`.
pub fn random_bounded_degree(n: usize, delta: usize, density: f64, seed: u64) -> Result<Graph> {
    let mut rng = rng(seed);
    let mut g = Graph::new(n);
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    pairs.shuffle(&mut rng);
    for (u, v) in pairs {
        if rng.gen_bool(density.clamp(0.0, 1.0)) && g.degree(u) < delta && g.degree(v) < delta {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// Random simple graph on `n` vertices with every degree in `{k−2, k−1, k}`
/// and at least one vertex of degree `k`. Retries with fresh randomness until
/// the degree window is met.
pub fn random_small_spread(n: usize, k: usize, seed: u64) -> Result<Graph> {
    if k < 2 || k >= n {
        return Err(Error::InvalidParameter("need 2 <= k < n".into()));
    }
    let mut rng = rng(seed);
    for _ in 0..MAX_ATTEMPTS {
        let mut g = Graph::new(n);
        let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        pairs.shuffle(&mut rng);
        for (u, v) in pairs {
            if g.degree(u) < k && g.degree(v) < k {
                g.add_edge(u, v)?;
            }
        }
        if g.min_degree() + 2 >= k && g.max_degree() == k {
            return Ok(g);
        }
    }
    Err(Error::InvalidParameter(format!("no degree window found for n={n}, k={k}")))
}

/// Uniform random labelled tree on `n` vertices via a Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("need n >= 1".into()));
    }
    if n <= 2 {
        return Graph::from_edges(n, if n == 2 { &[(0, 1)] } else { &[] });
    }
    let mut rng = rng(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut deg = vec![1usize; n];
    for &x in &seq {
        deg[x] += 1;
    }
    let mut g = Graph::new(n);
    for &x in &seq {
        let leaf = (0..n).find(|&v| deg[v] == 1).expect("a leaf exists");
        g.add_edge(leaf, x)?;
        deg[leaf] -= 1;
        deg[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    g.add_edge(rest[0], rest[1])?;
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_bipartite;

    #[test]
    fn deterministic() {
        assert_eq!(random_tree(12, 7).unwrap(), random_tree(12, 7).unwrap());
        assert_eq!(random_small_spread(10, 5, 3).unwrap(), random_small_spread(10, 5, 3).unwrap());
    }

    #[test]
    fn shapes() {
        let mg = random_even_regular_multigraph(9, 3, 1).unwrap();
        assert!((0..9).all(|v| mg.degree(v) == 6));
        let b = random_bipartite(8, 9, 6, 0.7, 2).unwrap();
        assert!(is_bipartite(&b) && b.max_degree() == 6);
        let g = random_bounded_degree(15, 4, 0.5, 4).unwrap();
        assert!(g.max_degree() <= 4);
        let s = random_small_spread(12, 6, 5).unwrap();
        assert!(s.max_degree() == 6 && s.min_degree() >= 4);
        assert!(random_tree(20, 9).unwrap().is_tree());
    }
}
