use cdt_core::bounds::{
    bipdiff4_hypothesis, bound_report, conjecture_check, hertz_def_value, lb_erd, lb_tilde, ub_trivial, BoundContext,
    BoundKind, Rational,
};
use cdt_core::colorers::maxdeg5_coloring;
use cdt_core::cyclic::cyclic_deficiency_report;
use cdt_core::exact::{default_t_max, gen_all_connected, gen_all_trees, min_cyclic_deficiency, SearchOptions, SolverStatus};
use cdt_core::families::{
    complete, complete_bipartite, cycle, gen_hertz, gen_m, gen_s, hat, hertz_tree, path, star, tilde,
};
use cdt_core::random::{random_bipartite, random_bounded_degree};
use cdt_core::Graph;

fn certify(g: &Graph) -> Option<u64> {
    let t_min = (g.max_degree() as u32).max(1);
    let r = min_cyclic_deficiency(g, t_min, default_t_max(g).max(t_min), SearchOptions { budget: 5_000_000, surjective: false })
        .unwrap();
    (r.status != SolverStatus::ExhaustedBudget).then(|| r.best_total.unwrap())
}

#[test]
fn sandwich_on_small_corpus() {
    let mut corpus: Vec<(Graph, BoundContext)> = Vec::new();
    for n in 1..=5 {
        corpus.extend(gen_all_connected(n).unwrap().into_iter().map(|g| (g, BoundContext::default())));
    }
    for n in 2..=6 {
        for t in gen_all_trees(n).unwrap() {
            corpus.push((tilde(&t).unwrap(), BoundContext { tilde_tree: Some(t), ..Default::default() }));
        }
    }
    for base in [path(2).unwrap(), path(3).unwrap(), complete(3).unwrap(), star(3).unwrap(), path(4).unwrap()] {
        corpus.push((hat(&base).unwrap(), BoundContext { hat_base: Some(base), ..Default::default() }));
    }
    corpus.push((gen_s(1, 1, 1).unwrap(), BoundContext::default()));
    corpus.push((gen_m(1, 1, 1).unwrap(), BoundContext::default()));
    corpus.push((gen_hertz(2, 2).unwrap(), BoundContext { hertz: Some((2, 2)), ..Default::default() }));
    corpus.push((complete_bipartite(3, 3).unwrap(), BoundContext::default()));
    let mut certified = 0;
    for (g, ctx) in &corpus {
        let Some(value) = certify(g) else { continue };
        certified += 1;
        let rep = bound_report(g, ctx).unwrap().with_certified(value);
        assert!(rep.violations().is_empty(), "{:?}: {:?}", g.edges(), rep.violations());
    }
    assert!(certified >= corpus.len() - 2);
}

#[test]
fn tree_and_hertz_values() {
    assert_eq!(lb_tilde(&hertz_tree(5, 3).unwrap()).unwrap(), 2);
    for p in 4..=8 {
        for q in 3..=6 {
            let v = hertz_def_value(p, q).unwrap();
            assert_eq!(v, (p * q) as i64 - p as i64 - 2 * q as i64 - 2);
        }
    }
}

#[test]
fn erd_closed_forms() {
    for n in [2u32, 3, 5, 7] {
        let count = (n * n + n + 1) as usize;
        for k in 1..=3u32 {
            let (n, k) = (n as i64, k as i64);
            let want = Rational::new(n * n * k - 9 * k * (n + 1) + 9, 10);
            assert_eq!(lb_erd(n as u32, &vec![k as u32; count]).unwrap(), want);
        }
    }
}

#[test]
fn conjecture_on_random_maxdeg5() {
    for seed in 0..30 {
        let g = random_bounded_degree(30, 5, 0.3, seed).unwrap();
        let c = maxdeg5_coloring(&g).unwrap();
        assert!(conjecture_check(&g, &cyclic_deficiency_report(&g, &c).unwrap()));
    }
    let c6 = cycle(6).unwrap();
    let zero = cyclic_deficiency_report(&c6, &cdt_core::EdgeColoring::new(2, vec![1, 2, 1, 2, 1, 2]).unwrap()).unwrap();
    assert!(conjecture_check(&c6, &zero));
}

#[test]
fn bipartite_reports() {
    for seed in 0..20 {
        let g = random_bipartite(10, 12, 6, 0.6, seed).unwrap();
        let rep = bound_report(&g, &BoundContext::default()).unwrap();
        let v3 = g.degree_class(3).len().to_string();
        assert_eq!(rep.get("bipartite-maxdeg6-upper-bound").unwrap().value, v3);
        assert!(rep.entries.iter().all(|e| e.verdict.is_none()));
        assert!(rep.get("trivial-upper-bound").unwrap().kind == BoundKind::Upper);
        let d = g.max_degree();
        let by_hand: u64 = (0..g.vertex_count()).map(|v| g.degree(v)).filter(|&x| x >= 2 && x < d).map(|x| (d - x) as u64).sum();
        assert_eq!(ub_trivial(&g), by_hand);
    }
    for r in 5..=8 {
        assert!(bipdiff4_hypothesis(&complete_bipartite(2 * r, 2 * r - 4).unwrap()).unwrap());
    }
}
