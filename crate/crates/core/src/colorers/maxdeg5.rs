//! Graphs of maximum degree at most 5: total cyclic deficiency at most `|V|`.

use crate::colorers::fan::{fan_coloring, vizing_coloring};
use crate::cyclic::{deficiency_mod_t, EdgeColoring};
use crate::error::{Error, Result};
use crate::exact::decide_cyclic_t_budget;
use crate::graph::{maximal_matching, Graph};

/// Search budget for the exact attempt on graphs of maximum degree ≤ 3.
pub const SMALL_DEGREE_BUDGET: u64 = 200_000;

fn mask_of(palette: &[u32]) -> u8 {
    palette.iter().filter(|&&c| c <= 5).fold(0, |m, &c| m | 1 << (c - 1))
}

fn mask(colors: &[u32]) -> u8 {
    colors.iter().fold(0, |m, &c| m | 1 << (c - 1))
}

/// Counts of the palette classes used by the selection rule, taken on colors
/// `1..=5` (color 6 dropped): `(|A135|, |A234|, |A14|+|A25|, |A12|+|A45|)`.
pub fn palette_class_counts(g: &Graph, c: &EdgeColoring) -> (usize, usize, usize, usize) {
    let masks: Vec<u8> = (0..g.vertex_count()).map(|v| mask_of(&c.palette(g, v))).collect();
    class_counts(&masks, &[1, 2, 3, 4, 5])
}

fn class_counts(masks: &[u8], perm: &[u32; 5]) -> (usize, usize, usize, usize) {
    let count = |sets: &[&[u32]]| {
        let targets: Vec<u8> = sets.iter().map(|s| mask(s)).collect();
        masks.iter().filter(|&&m| targets.contains(&permute_mask(m, perm))).count()
    };
    (
        count(&[&[1, 3, 5]]),
        count(&[&[2, 3, 4]]),
        count(&[&[1, 4], &[2, 5]]),
        count(&[&[1, 2], &[4, 5]]),
    )
}

fn permute_mask(m: u8, perm: &[u32; 5]) -> u8 {
    (0..5).filter(|i| m & (1 << i) != 0).fold(0, |acc, i| acc | 1 << (perm[i] - 1))
}

fn permutations() -> Vec<[u32; 5]> {
    let mut out = Vec::with_capacity(120);
    let mut cur = [1u32, 2, 3, 4, 5];
    fn rec(k: usize, cur: &mut [u32; 5], out: &mut Vec<[u32; 5]>) {
        if k == 5 {
            out.push(*cur);
            return;
        }
        for i in k..5 {
            cur[k..=i].rotate_right(1);
            rec(k + 1, cur, out);
            cur[k..=i].rotate_left(1);
        }
    }
    rec(0, &mut cur, &mut out);
    out
}

fn max_degree_five(g: &Graph) -> Result<EdgeColoring> {
    let v5 = g.degree_class(5);
    let m = maximal_matching(g, &v5);
    let (rest, back) = g.spanning_subgraph(|e| !m.contains(e));
    let phi = fan_coloring(&rest, 5)?;
    let n = g.vertex_count();
    // Per-vertex masks on colors 1..=5 and the matched flag (color 6).
    let mut masks = vec![0u8; n];
    for (e, &orig) in back.iter().enumerate() {
        let (u, v) = g.endpoints(orig);
        let c = phi.color(e).expect("complete coloring");
        masks[u] |= 1 << (c - 1);
        masks[v] |= 1 << (c - 1);
    }
    let covered = m.covered(g);
    let deficiency = |perm: &[u32; 5]| -> u64 {
        (0..n)
            .filter(|&v| g.degree(v) > 0)
            .map(|v| {
                let pm = permute_mask(masks[v], perm);
                let mut set: Vec<u32> = (1..=5).filter(|c| pm & (1 << (c - 1)) != 0).collect();
                if covered[v] {
                    set.push(6);
                }
                deficiency_mod_t(&set, 6).expect("nonempty palette") as u64
            })
            .sum()
    };
    let best = permutations()
        .into_iter()
        .filter(|p| {
            let (a135, a234, bad, good) = class_counts(&masks, p);
            a135 <= a234 && bad <= good
        })
        .map(|p| (deficiency(&p), p))
        .min_by_key(|&(total, _)| total)
        .ok_or_else(|| Error::ClaimFailure("no color permutation satisfies the palette inequalities".into()))?
        .1;
    let mut colors = vec![6u32; g.edge_count()];
    for (e, &orig) in back.iter().enumerate() {
        colors[orig] = best[phi.color(e).expect("complete coloring") as usize - 1];
    }
    EdgeColoring::new(6, colors)
}

/// Δ ≤ 3: exact cyclic interval search at `t = Δ, Δ+1` under a small budget,
/// else Vizing. Δ = 4: Vizing. Δ = 5: a 5-coloring of `G − M` for a maximal
/// matching `M` of the degree-5 vertices, `M` colored 6, and the permutation
/// of colors 1..5 with least total deficiency among those satisfying
/// `|A135| ≤ |A234|` and `|A14|+|A25| ≤ |A12|+|A45|`.
pub fn maxdeg5_coloring(g: &Graph) -> Result<EdgeColoring> {
    let delta = g.max_degree();
    match delta {
        0 => EdgeColoring::new(1, Vec::new()),
        1..=3 => {
            for t in [delta, delta + 1] {
                if let Ok(Some(c)) = decide_cyclic_t_budget(g, t as u32, SMALL_DEGREE_BUDGET) {
                    return Ok(c);
                }
            }
            vizing_coloring(g)
        }
        4 => vizing_coloring(g),
        5 => max_degree_five(g),
        _ => Err(Error::Precondition(format!("maximum degree {delta} exceeds 5"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::{cyclic_deficiency_report, verify_proper};
    use crate::families::{complete, petersen_graph};

    #[test]
    fn permutations_are_distinct_and_start_with_identity() {
        let p = permutations();
        assert_eq!(p.len(), 120);
        assert_eq!(p[0], [1, 2, 3, 4, 5]);
        let set: std::collections::BTreeSet<_> = p.iter().collect();
        assert_eq!(set.len(), 120);
    }

    #[test]
    fn k6_has_zero_deficiency() {
        let g = complete(6).unwrap();
        let c = maxdeg5_coloring(&g).unwrap();
        assert!(verify_proper(&g, &c).unwrap());
        assert_eq!(cyclic_deficiency_report(&g, &c).unwrap().total, 0);
    }

    #[test]
    fn cubic_and_quartic() {
        let g = petersen_graph();
        let c = maxdeg5_coloring(&g).unwrap();
        assert_eq!(cyclic_deficiency_report(&g, &c).unwrap().total, 0);
        let k5 = complete(5).unwrap();
        let c = maxdeg5_coloring(&k5).unwrap();
        let rep = cyclic_deficiency_report(&k5, &c).unwrap();
        assert!(rep.per_vertex.iter().all(|&d| d <= 1));
        assert!(maxdeg5_coloring(&complete(7).unwrap()).is_err());
    }
}
