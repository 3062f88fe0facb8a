//! Exhaustive enumeration of small graphs up to isomorphism.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_ENUMERATION_ORDER: usize = 6;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn rec(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == cur.len() {
            out.push(cur.clone());
            return;
        }
        for i in k..cur.len() {
            cur.swap(k, i);
            rec(k + 1, cur, out);
            cur.swap(k, i);
        }
    }
    rec(0, &mut cur, &mut out);
    out
}

// Bit (m-1-i) stands for pair i, so the first pair is the most significant
// bit and the integer order is the lexicographic order of adjacency strings.
struct Canon {
    m: usize,
    maps: Vec<Vec<usize>>,
}

impl Canon {
    fn new(n: usize) -> Self {
        let ps = pairs(n);
        let index: BTreeMap<(usize, usize), usize> = ps.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let maps = permutations(n)
            .into_iter()
            .map(|perm| {
                ps.iter()
                    .map(|&(a, b)| {
                        let (x, y) = (perm[a].min(perm[b]), perm[a].max(perm[b]));
                        index[&(x, y)]
                    })
                    .collect()
            })
            .collect();
        Canon { m: ps.len(), maps }
    }

    fn form(&self, code: u32) -> u32 {
        let m = self.m;
        self.maps
            .iter()
            .map(|map| {
                (0..m)
                    .filter(|&i| code & (1 << (m - 1 - i)) != 0)
                    .fold(0u32, |acc, i| acc | 1 << (m - 1 - map[i]))
            })
            .min()
            .unwrap_or(0)
    }
}

fn from_code(n: usize, code: u32) -> Graph {
    let ps = pairs(n);
    let m = ps.len();
    let edges: Vec<(usize, usize)> = (0..m).filter(|&i| code & (1 << (m - 1 - i)) != 0).map(|i| ps[i]).collect();
    Graph::from_edges(n, &edges).expect("pairs are simple")
}

/// Canonical adjacency code of a graph on at most 6 vertices: the
/// lexicographically least pair bitstring over all relabelings.
pub fn canonical_code(g: &Graph) -> Result<u32> {
    let n = g.vertex_count();
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::InvalidParameter(format!("canonical codes need n <= {MAX_ENUMERATION_ORDER}")));
    }
    let ps = pairs(n);
    let m = ps.len();
    let code = ps
        .iter()
        .enumerate()
        .filter(|(_, &(a, b))| g.has_edge(a, b))
        .fold(0u32, |acc, (i, _)| acc | 1 << (m - 1 - i));
    Ok(Canon::new(n).form(code))
}

/// One representative per isomorphism class of connected graphs on exactly
/// `n ≤ 6` vertices, in ascending canonical-code order.
pub fn gen_all_connected(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::InvalidParameter(format!("enumeration supports n <= {MAX_ENUMERATION_ORDER}")));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let canon = Canon::new(n);
    let mut forms = BTreeSet::new();
    for code in 0..(1u32 << canon.m) {
        let g = from_code(n, code);
        if g.is_connected() {
            forms.insert(canon.form(code));
        }
    }
    Ok(forms.into_iter().map(|c| from_code(n, c)).collect())
}

// AHU encoding of the tree rooted at `root`.
fn rooted_code(t: &Graph, root: usize, parent: Option<usize>) -> String {
    let mut children: Vec<String> = t.neighbors(root).filter(|&w| Some(w) != parent).map(|w| rooted_code(t, w, Some(root))).collect();
    children.sort();
    format!("({})", children.concat())
}

fn centers(t: &Graph) -> Vec<usize> {
    let n = t.vertex_count();
    let mut deg = t.degrees();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for w in t.neighbors(v) {
                if deg[w] > 1 {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// Isomorphism-invariant code of a tree (AHU encoding at its center).
pub fn tree_code(t: &Graph) -> Result<String> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    Ok(centers(t).into_iter().map(|c| rooted_code(t, c, None)).min().unwrap_or_default())
}

fn prufer_tree(n: usize, seq: &[usize]) -> Graph {
    let mut deg = vec![1usize; n];
    for &x in seq {
        deg[x] += 1;
    }
    let mut g = Graph::new(n);
    for &x in seq {
        let leaf = (0..n).find(|&v| deg[v] == 1).expect("a leaf exists");
        g.add_edge(leaf, x).expect("tree edge");
        deg[leaf] -= 1;
        deg[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    g.add_edge(rest[0], rest[1]).expect("tree edge");
    g
}

/// One tree per isomorphism class on exactly `n` vertices (`1 ≤ n ≤ 9`),
/// ordered by code.
pub fn gen_all_trees(n: usize) -> Result<Vec<Graph>> {
    if !(1..=9).contains(&n) {
        return Err(Error::InvalidParameter("tree enumeration supports 1 <= n <= 9".into()));
    }
    if n <= 2 {
        return Ok(vec![Graph::from_edges(n, if n == 2 { &[(0, 1)] } else { &[] })?]);
    }
    let mut found: BTreeMap<String, Graph> = BTreeMap::new();
    let total = n.pow(n as u32 - 2);
    let mut seq = vec![0usize; n - 2];
    for mut idx in 0..total {
        for s in seq.iter_mut() {
            *s = idx % n;
            idx /= n;
        }
        let t = prufer_tree(n, &seq);
        found.entry(tree_code(&t)?).or_insert(t);
    }
    Ok(found.into_values().collect())
}
