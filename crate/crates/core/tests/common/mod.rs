#![allow(dead_code)]

use proptest::prelude::*;
use tricut_core::enumerate::pairs;
use tricut_core::{EdgeLabel, Graph, Trigraph, TrigraphCandidate};

/// Builds a valid trigraph from arbitrary label bytes: pairs are taken in
/// order and a label that would break validity is replaced by `N`.
pub fn repaired_trigraph(n: usize, labels: &[u8]) -> Trigraph {
    let mut c = Vec::new();
    let mut s = Vec::new();
    for (p, &l) in pairs(n).into_iter().zip(labels.iter().cycle()) {
        match l % 3 {
            0 => continue,
            1 => c.push(p),
            _ => s.push(p),
        }
        if !TrigraphCandidate::from_edges(n, &c, &s).unwrap().validate().is_empty() {
            c.retain(|&q| q != p);
            s.retain(|&q| q != p);
        }
    }
    Trigraph::from_edges(n, &c, &s).unwrap()
}

pub fn trigraph_strategy(max_n: usize) -> impl Strategy<Value = Trigraph> {
    (0..=max_n, prop::collection::vec(any::<u8>(), 1..40)).prop_map(|(n, labels)| repaired_trigraph(n, &labels))
}

pub fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n, prop::collection::vec(any::<bool>(), 1..64)).prop_map(|(n, bits)| {
        let edges: Vec<_> = pairs(n)
            .into_iter()
            .zip(bits.iter().cycle())
            .filter(|(_, &b)| b)
            .map(|(p, _)| p)
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

/// Characteristic functions read through the public label accessor.
pub fn s(t: &Trigraph, u: usize, v: usize) -> i64 {
    (t.label(u, v).unwrap() == EdgeLabel::S) as i64
}

pub fn c(t: &Trigraph, u: usize, v: usize) -> i64 {
    (t.label(u, v).unwrap() == EdgeLabel::C) as i64
}

pub fn n(t: &Trigraph, u: usize, v: usize) -> i64 {
    1 - s(t, u, v) - c(t, u, v)
}
