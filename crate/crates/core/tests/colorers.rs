use cdt_core::colorers::{
    bipartite_bound_coloring, bipartite_certified_bound, class1_coloring, color_m, color_s, maxdeg5_coloring,
    palette_class_counts, petersen_factorize, smalldiff_coloring, vizing_coloring,
};
use cdt_core::cyclic::{cyclic_deficiency_report, verify_proper};
use cdt_core::families::{complete, gen_m, gen_s, hypercube, petersen_graph};
use cdt_core::random::{
    random_bipartite, random_bounded_degree, random_even_regular_multigraph, random_small_spread,
};
use cdt_core::{Graph, Multigraph};
use proptest::prelude::*;

fn total(g: &Graph, c: &cdt_core::EdgeColoring) -> u64 {
    assert!(verify_proper(g, c).unwrap());
    cyclic_deficiency_report(g, c).unwrap().total
}

#[test]
fn formula_examples() {
    let c = color_s(7, 7, 7).unwrap();
    assert_eq!(c.t(), 21);
    assert_eq!(total(&gen_s(7, 7, 7).unwrap(), &c), 0);
    for (a, b, cc, t) in [(5, 5, 5, 16), (1, 2, 3, 7)] {
        let c = color_m(a, b, cc).unwrap();
        assert_eq!(c.t(), t);
        assert_eq!(total(&gen_m(a, b, cc).unwrap(), &c), 0);
    }
}

#[test]
fn k5_factorization() {
    let k5 = complete(5).unwrap();
    let mut mg = Multigraph::new(5);
    for &(u, v) in k5.edges() {
        mg.add_edge(u, v).unwrap();
    }
    let d = petersen_factorize(&mg).unwrap();
    assert_eq!(d.factors.len(), 2);
    assert!(d.is_valid_for(&mg));
}

#[test]
fn vizing_on_petersen() {
    let p = petersen_graph();
    let c = vizing_coloring(&p).unwrap();
    assert!(verify_proper(&p, &c).unwrap() && c.t() <= 4);
}

#[test]
fn class1_when_max_degree_vertices_are_independent() {
    for seed in 0..40 {
        let mut g = random_bounded_degree(14, 5, 0.4, seed).unwrap();
        // Drop edges between max-degree vertices until they are independent.
        loop {
            let d = g.max_degree();
            let bad = g.edges().iter().position(|&(u, v)| g.degree(u) == d && g.degree(v) == d);
            match bad {
                Some(e) => g = g.spanning_subgraph(|x| x != e).0,
                None => break,
            }
        }
        let c = class1_coloring(&g).unwrap();
        assert!(verify_proper(&g, &c).unwrap());
        assert_eq!(c.colors_used().len(), g.max_degree());
        assert!(c.max_color() as usize <= g.max_degree());
    }
}

#[test]
fn bipartite_examples() {
    let q4 = hypercube(4).unwrap();
    assert_eq!(total(&q4, &bipartite_bound_coloring(&q4).unwrap()), 0);
    for seed in 0..30 {
        let g = random_bipartite(9, 10, 4, 0.6, seed).unwrap();
        assert_eq!(total(&g, &bipartite_bound_coloring(&g).unwrap()), 0);
    }
}

#[test]
fn small_spread_caps_per_degree_class() {
    for seed in 0..200u64 {
        let n = 12 + (seed % 40) as usize;
        let k = 3 + (seed % 7) as usize;
        let g = random_small_spread(n, k, seed).unwrap();
        let c = smalldiff_coloring(&g).unwrap();
        let r = cyclic_deficiency_report(&g, &c).unwrap();
        assert!(verify_proper(&g, &c).unwrap());
        assert!(r.total <= n as u64);
        for v in 0..n {
            let cap = match k - g.degree(v) {
                0 => 0,
                1 => 1,
                _ => 2,
            };
            assert!(r.per_vertex[v] <= cap, "seed {seed} vertex {v}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn petersen_factors(n in 1usize..=40, r in 1usize..=5, seed in any::<u64>()) {
        let mg = random_even_regular_multigraph(n, r, seed).unwrap();
        let d = petersen_factorize(&mg).unwrap();
        prop_assert_eq!(d.factors.len(), r);
        prop_assert!(d.is_valid_for(&mg));
    }

    #[test]
    fn vizing_is_proper(n in 2usize..30, delta in 1usize..8, seed in any::<u64>()) {
        let g = random_bounded_degree(n, delta, 0.5, seed).unwrap();
        let c = vizing_coloring(&g).unwrap();
        prop_assert!(verify_proper(&g, &c).unwrap());
        prop_assert!(c.max_color() as usize <= g.max_degree() + 1);
    }

    #[test]
    fn bipartite_within_certified_bound(delta in 5usize..=10, seed in any::<u64>()) {
        let g = random_bipartite(12, 14, delta, 0.5, seed).unwrap();
        let c = bipartite_bound_coloring(&g).unwrap();
        prop_assert!(total(&g, &c) <= bipartite_certified_bound(&g));
    }

    #[test]
    fn maxdeg5_properties(n in 2usize..=60, seed in any::<u64>()) {
        let g = random_bounded_degree(n, 5, 0.3, seed).unwrap();
        let c = maxdeg5_coloring(&g).unwrap();
        prop_assert!(c.max_color() <= 6);
        prop_assert!(total(&g, &c) <= n as u64);
        for v in 0..n {
            let p = c.palette(&g, v);
            prop_assert!(p != [3, 6] && p != [2, 4, 6]);
        }
        if g.max_degree() == 5 {
            let (a135, a234, a14_25, a12_45) = palette_class_counts(&g, &c);
            prop_assert!(a135 <= a234);
            prop_assert!(a14_25 <= a12_45);
        }
    }
}
