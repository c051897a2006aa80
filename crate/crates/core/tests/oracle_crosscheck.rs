//! The branch-and-bound oracles against plain subset enumeration.

mod common;

use common::graph_strategy;
use proptest::prelude::*;
use tricut_core::enumerate::{all_graphs, isomorphic_graphs};
use tricut_core::extremal::clebsch;
use tricut_core::graph6::parse_graph6;
use tricut_core::oracles::{
    alpha1, bipartizes, covers_triangles, is_triangle_independent, tau1, tau2, tau_b, OracleLimits,
};
use tricut_core::sweep::ctau_scan;
use tricut_core::{Graph, Partition};

fn triangle_hits(g: &Graph, chosen: &[(usize, usize)]) -> Vec<usize> {
    g.triangles()
        .iter()
        .map(|&[a, b, c]| [(a, b), (a, c), (b, c)].iter().filter(|e| chosen.contains(e)).count())
        .collect()
}

fn subsets(g: &Graph) -> impl Iterator<Item = Vec<(usize, usize)>> + '_ {
    let edges = g.edges();
    (0u32..1 << edges.len()).map(move |mask| {
        edges
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect()
    })
}

fn brute_alpha1(g: &Graph) -> usize {
    subsets(g)
        .filter(|sub| triangle_hits(g, sub).iter().all(|&h| h <= 1))
        .map(|sub| sub.len())
        .max()
        .unwrap()
}

fn brute_cover(g: &Graph, times: usize) -> usize {
    subsets(g)
        .filter(|sub| triangle_hits(g, sub).iter().all(|&h| h >= times))
        .map(|sub| sub.len())
        .min()
        .unwrap()
}

fn brute_tau_b(g: &Graph) -> usize {
    (0u64..1 << g.n())
        .map(|mask| {
            g.edges()
                .iter()
                .filter(|&&(u, v)| (mask >> u & 1) == (mask >> v & 1))
                .count()
        })
        .min()
        .unwrap()
}

fn check_all(g: &Graph) {
    let a = alpha1(g).unwrap();
    assert_eq!(a.value, brute_alpha1(g), "alpha1 on {:?}", g.edges());
    assert!(is_triangle_independent(g, a.edges()));
    assert_eq!(a.edges().len(), a.value);

    let b = tau_b(g).unwrap();
    assert_eq!(b.value, brute_tau_b(g), "tau_B on {:?}", g.edges());
    let p: &Partition = b.partition().unwrap();
    assert!(bipartizes(g, p));
    assert_eq!(p.inside_edges(g).unwrap(), b.value);

    let t1 = tau1(g).unwrap();
    assert_eq!(t1.value, brute_cover(g, 1));
    assert!(covers_triangles(g, t1.edges(), 1));

    let t2 = tau2(g).unwrap();
    assert_eq!(t2.direct.value, brute_cover(g, 2));
    assert!(covers_triangles(g, t2.direct.edges(), 2));
    assert!(t2.agree);
    assert_eq!(t2.via_identity, g.edge_count() - a.value);
}

#[test]
fn oracles_match_brute_force_on_all_graphs_up_to_five() {
    for n in 0..=5 {
        for g in all_graphs(n, false).unwrap() {
            check_all(&g);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn oracles_match_brute_force_on_random_graphs(g in graph_strategy(7)) {
        prop_assume!(g.edge_count() <= 16);
        check_all(&g);
    }

    #[test]
    fn oracle_inequalities(g in graph_strategy(9)) {
        let a = alpha1(&g).unwrap().value;
        let b = tau_b(&g).unwrap().value;
        let t1 = tau1(&g).unwrap().value;
        // Mantel on the bipartite remainder, and a bipartizing set hits
        // every triangle.
        prop_assert!(4 * (g.edge_count() - b) <= g.n() * g.n());
        prop_assert!(t1 <= b);
        prop_assert!(4 * (a + b) <= g.n() * g.n());
    }

    #[test]
    fn oracles_are_monotone_under_edge_deletion(g in graph_strategy(8), pick in any::<usize>()) {
        prop_assume!(g.edge_count() > 0);
        let edges = g.edges();
        let (u, v) = edges[pick % edges.len()];
        let mut h = g.clone();
        h.remove_edge(u, v).unwrap();
        prop_assert!(tau1(&h).unwrap().value <= tau1(&g).unwrap().value);
        prop_assert!(tau_b(&h).unwrap().value <= tau_b(&g).unwrap().value);
        prop_assert!(alpha1(&h).unwrap().value + 1 >= alpha1(&g).unwrap().value);
    }

    #[test]
    fn oracles_are_label_invariant(g in graph_strategy(7), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        let mut x = seed;
        for i in (1..perm.len()).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (x >> 33) as usize % (i + 1));
        }
        let h = g.permuted(&perm);
        prop_assert_eq!(alpha1(&g).unwrap().value, alpha1(&h).unwrap().value);
        prop_assert_eq!(tau_b(&g).unwrap().value, tau_b(&h).unwrap().value);
        prop_assert_eq!(tau1(&g).unwrap().value, tau1(&h).unwrap().value);
    }
}

#[test]
fn complete_graph_values() {
    let k5 = Graph::complete(5).unwrap();
    assert_eq!(alpha1(&k5).unwrap().value, 2);
    assert_eq!(tau_b(&k5).unwrap().value, 4);
    assert_eq!(tau1(&k5).unwrap().value, 4);
    assert_eq!(tau2(&k5).unwrap().direct.value, 8);
}

#[test]
fn clebsch_independence_and_bipartization() {
    let g = clebsch();
    assert!(g.triangles().is_empty());
    let independent = (0u32..1 << 16)
        .filter(|&m| g.edges().iter().all(|&(u, v)| m >> u & 1 == 0 || m >> v & 1 == 0))
        .map(|m| m.count_ones())
        .max()
        .unwrap();
    assert_eq!(independent, 5);
    assert_eq!(tau_b(&g).unwrap().value, 8);
}

#[test]
fn limits_are_enforced() {
    let big = Graph::complete(13).unwrap();
    assert!(alpha1(&big).is_err());
    assert!(tau1(&Graph::complete(11).unwrap()).is_err());
    let wide = OracleLimits {
        tau1: 11,
        ..OracleLimits::default()
    };
    assert!(wide.tau1(&Graph::empty(11).unwrap()).is_ok());
}

#[test]
fn ctau_minimum_is_the_five_wheel() {
    let scan = ctau_scan(6).unwrap();
    let wheel = Graph::from_edges(
        6,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (0, 5),
            (1, 4),
            (1, 5),
            (2, 3),
            (2, 5),
            (3, 4),
        ],
    )
    .unwrap();
    let argmin = parse_graph6(scan.argmin.as_deref().unwrap()).unwrap();
    assert!(isomorphic_graphs(&argmin, &wheel));
    assert_eq!(scan.min_ratio.unwrap(), tricut_core::rational::ratio(5, 3));
    assert_eq!(scan.rows.iter().filter(|r| r.n == 6).count(), 118);
}
