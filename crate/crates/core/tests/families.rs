use std::collections::BTreeSet;

use cdt_core::families::{
    gen_erd, gen_hertz, gen_m, gen_s, hertz_d, hertz_tree, path, projective_plane, star, tree_metrics,
};
use cdt_core::random::random_tree;
use cdt_core::Graph;
use proptest::prelude::*;

fn handshake_edges(g: &Graph) -> usize {
    g.degrees().iter().sum::<usize>() / 2
}

#[test]
fn family_counts() {
    for (a, b, c, n, m) in [(1, 1, 1, 10, 12), (7, 7, 7, 28, 48)] {
        let g = gen_s(a, b, c).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (n, m));
        assert_eq!((7 + a + b + c, 6 + 2 * (a + b + c)), (n, m));
        assert_eq!(handshake_edges(&g), m);
    }
    for (a, b, c, n, m) in [(1, 1, 1, 7, 9), (5, 5, 5, 19, 45)] {
        let g = gen_m(a, b, c).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (n, m));
        assert_eq!((4 + a + b + c, 3 * (a + b + c)), (n, m));
        assert_eq!(handshake_edges(&g), m);
    }
    let h = gen_hertz(2, 2).unwrap();
    assert_eq!((h.vertex_count(), h.edge_count()), (8, 10));
    let h = gen_hertz(4, 3).unwrap();
    assert_eq!((h.vertex_count(), h.edge_count(), h.max_degree()), (18, 28, 12));
    assert_eq!(h.degree(hertz_d(4)), 12);
}

#[test]
fn erd_counts() {
    for (n, r, verts, edges, delta) in [
        (3u32, vec![1u32; 13], 27usize, 65usize, 13usize),
        (2, vec![1; 7], 15, 28, 7),
        (2, vec![2, 1, 1, 1, 1, 1, 1], 16, 32, 8),
    ] {
        let g = gen_erd(n, &r).unwrap();
        let total: usize = r.iter().map(|&x| x as usize).sum();
        let plane = (n * n + n + 1) as usize;
        assert_eq!((g.vertex_count(), g.edge_count(), g.max_degree()), (verts, edges, delta));
        assert_eq!(verts, 1 + plane + total);
        assert_eq!(edges, total * (n as usize + 2));
    }
    assert!(gen_erd(4, &[1; 21]).is_err());
}

// Checks the plane axioms from the raw line lists.
fn axioms_by_brute_force(n: u32) -> bool {
    let p = projective_plane(n).unwrap();
    let lines: Vec<BTreeSet<usize>> = p.lines().iter().map(|l| l.iter().copied().collect()).collect();
    let points: BTreeSet<usize> = lines.iter().flatten().copied().collect();
    let q = (n * n + n + 1) as usize;
    if points.len() != q || lines.len() != q || lines.iter().any(|l| l.len() != n as usize + 1) {
        return false;
    }
    let pts: Vec<usize> = points.into_iter().collect();
    for (i, a) in pts.iter().enumerate() {
        for b in &pts[i + 1..] {
            if lines.iter().filter(|l| l.contains(a) && l.contains(b)).count() != 1 {
                return false;
            }
        }
    }
    for i in 0..q {
        for j in i + 1..q {
            if lines[i].intersection(&lines[j]).count() != 1 {
                return false;
            }
        }
    }
    // Four points, no three on a line.
    pts.iter().any(|&a| {
        pts.iter().any(|&b| {
            pts.iter().any(|&c| {
                pts.iter().any(|&d| {
                    let quad = [a, b, c, d];
                    BTreeSet::from(quad).len() == 4
                        && lines.iter().all(|l| quad.iter().filter(|x| l.contains(x)).count() <= 2)
                })
            })
        })
    })
}

#[test]
fn planes_satisfy_axioms() {
    for n in [2, 3, 5, 7] {
        assert!(axioms_by_brute_force(n), "order {n}");
        assert!(projective_plane(n).unwrap().check_axioms());
    }
}

// LP(P) as the number of edges with an endpoint on the path, over all pairs.
fn m_oracle(t: &Graph) -> usize {
    let n = t.vertex_count();
    let path_between = |s: usize, d: usize| -> Vec<usize> {
        let mut prev = vec![usize::MAX; n];
        let mut stack = vec![s];
        prev[s] = s;
        while let Some(v) = stack.pop() {
            for w in t.neighbors(v) {
                if prev[w] == usize::MAX {
                    prev[w] = v;
                    stack.push(w);
                }
            }
        }
        let mut p = vec![d];
        while *p.last().unwrap() != s {
            p.push(prev[*p.last().unwrap()]);
        }
        p
    };
    let mut best = 0;
    for s in 0..n {
        for d in s + 1..n {
            let on: BTreeSet<usize> = path_between(s, d).into_iter().collect();
            let count = t.edges().iter().filter(|(u, v)| on.contains(u) || on.contains(v)).count();
            best = best.max(count);
        }
    }
    best
}

#[test]
fn tree_metric_examples() {
    assert_eq!(tree_metrics(&path(4).unwrap()).unwrap().m_value, 3);
    assert_eq!(m_oracle(&path(4).unwrap()), 3);
    assert_eq!(tree_metrics(&star(3).unwrap()).unwrap().m_value, 3);
    assert_eq!(m_oracle(&star(3).unwrap()), 3);
    assert_eq!(tree_metrics(&star(6).unwrap()).unwrap().m_value, m_oracle(&star(6).unwrap()));
    for p in 4..=8 {
        for q in 3..=6 {
            let t = hertz_tree(p, q).unwrap();
            let m = tree_metrics(&t).unwrap();
            assert_eq!(m.m_value, p + 2 * q);
            assert_eq!(m.leaves.len(), p * q);
            assert_eq!(m_oracle(&t), p + 2 * q);
        }
    }
}

proptest! {
    #[test]
    fn tree_metrics_match_oracle(n in 2usize..14, seed in any::<u64>()) {
        let t = random_tree(n, seed).unwrap();
        prop_assert_eq!(tree_metrics(&t).unwrap().m_value, m_oracle(&t));
    }
}
