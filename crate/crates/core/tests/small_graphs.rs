//! Exhaustive comparison against brute force on every labeled graph with 6 vertices.

mod common;

use chargraph::exactness::check_n_exact;
use chargraph::graph::{complement, is_bipartite, longest_odd_cycle_at_least, max_clique, Bipartiteness};
use common::*;

#[test]
fn searches_agree_with_brute_force_on_all_6_vertex_graphs() {
    for mask in 0u32..(1 << 15) {
        let g = decode(&SIX_PRIMES, mask);

        let clique = max_clique(&g).unwrap();
        assert_eq!(clique.as_slice(), naive_max_clique(&g).as_slice(), "mask {mask:#x}");

        let longest = naive_longest_odd_cycle(&g);
        for l in [3, 5] {
            let found = longest_odd_cycle_at_least(&g, l).unwrap();
            assert_eq!(found.is_some(), longest >= l, "mask {mask:#x}, L = {l}");
            if let Some(w) = found {
                assert!(w.len() >= l && w.len() % 2 == 1 && w.validates_in(&g));
            }
        }

        match is_bipartite(&g) {
            Bipartiteness::Bipartite { left, right } => {
                assert!(naive_bipartite(&g), "mask {mask:#x}");
                assert_eq!(left.union(&right), *g.vertices());
                assert!(g.edges().iter().all(|&(p, q)| left.contains(p) != left.contains(q)));
            }
            Bipartiteness::OddCycle(w) => {
                assert!(!naive_bipartite(&g), "mask {mask:#x}");
                assert!(w.len() % 2 == 1 && w.validates_in(&g));
            }
        }
    }
}

#[test]
fn n_exact_agrees_with_definition_on_all_6_vertex_graphs() {
    for mask in 0u32..(1 << 15) {
        let g = decode(&SIX_PRIMES, mask);
        assert_eq!(complement(&g), naive_complement(&g));
        for n in 4..=6 {
            let report = check_n_exact(&g, n).unwrap();
            assert_eq!(report.verdict, naive_n_exact(&g, n), "mask {mask:#x}, n = {n}");
            assert!(report.revalidate(&g));
        }
    }
}

#[test]
fn smaller_vertex_counts() {
    for size in 1..=5 {
        let labels = &SIX_PRIMES[..size];
        let m = pairs(size).len();
        for mask in 0u32..(1 << m) {
            let g = decode(labels, mask);
            assert_eq!(max_clique(&g).unwrap().as_slice(), naive_max_clique(&g).as_slice());
            assert_eq!(is_bipartite(&g).is_bipartite(), naive_bipartite(&g));
            let longest = naive_longest_odd_cycle(&g);
            assert_eq!(longest_odd_cycle_at_least(&g, 3).unwrap().is_some(), longest >= 3);
            assert_eq!(check_n_exact(&g, 4).unwrap().verdict, naive_n_exact(&g, 4));
        }
    }
}
