//! Exhaustive enumeration of small labelled graphs and trigraphs.
//!
//! Graphs on `n` vertices are indexed by an adjacency code: the upper triangle
//! read in graph6 pair order `(0,1), (0,2), (1,2), (0,3), ...`, first pair in
//! the most significant bit. Numeric order on codes is therefore
//! lexicographic order on bit strings, and the canonical representative of
//! an isomorphism class is its minimum code over all vertex relabellings.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::trigraph::{Trigraph, TrigraphCandidate};
use crate::{bit, Vertex};

pub const GRAPH_ENUMERATION_MAX_VERTICES: usize = 7;
pub const TRIGRAPH_ENUMERATION_MAX_VERTICES: usize = 5;

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Pairs `(i, j)`, `i < j`, in graph6 order.
pub fn pairs(n: usize) -> Vec<(Vertex, Vertex)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let ps = pairs(n);
    let m = ps.len();
    let mut g = Graph::empty(n).expect("enumeration sizes are small");
    for (k, &(i, j)) in ps.iter().enumerate() {
        if code >> (m - 1 - k) & 1 == 1 {
            g.add_edge(i, j).unwrap();
        }
    }
    g
}

pub fn graph_code(g: &Graph) -> u64 {
    let ps = pairs(g.n());
    assert!(ps.len() <= 64, "adjacency code needs at most 64 pairs");
    ps.iter().fold(0u64, |acc, &(i, j)| acc << 1 | g.has_edge(i, j) as u64)
}

/// Calls `visit` with every permutation of `0..n` in lexicographic order
/// until it returns `false`.
pub(crate) fn for_each_permutation(n: usize, mut visit: impl FnMut(&[Vertex]) -> bool) {
    let mut perm: Vec<Vertex> = (0..n).collect();
    loop {
        if !visit(&perm) {
            return;
        }
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            return;
        };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
}

fn relabelled_code(rows: &[u64], ps: &[(Vertex, Vertex)], perm: &[Vertex]) -> u64 {
    ps.iter().fold(0u64, |acc, &(i, j)| {
        acc << 1 | (rows[perm[i]] & bit(perm[j]) != 0) as u64
    })
}

fn rows(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|v| g.neighbors(v)).collect()
}

/// Minimum adjacency code over all `n!` relabellings.
pub fn canonical_code(g: &Graph) -> u64 {
    let ps = pairs(g.n());
    let rows = rows(g);
    let mut best = u64::MAX;
    for_each_permutation(g.n(), |perm| {
        best = best.min(relabelled_code(&rows, &ps, perm));
        true
    });
    best
}

/// Whether `g`'s own code is minimal in its isomorphism class. Stops at the
/// first relabelling with a smaller code.
pub fn is_canonical(g: &Graph) -> bool {
    let ps = pairs(g.n());
    let rows = rows(g);
    let own = graph_code(g);
    let mut minimal = true;
    for_each_permutation(g.n(), |perm| {
        if relabelled_code(&rows, &ps, perm) < own {
            minimal = false;
        }
        minimal
    });
    minimal
}

pub fn isomorphic_graphs(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_code(a) == canonical_code(b)
}

/// Brute-force trigraph isomorphism, respecting both labels.
pub fn isomorphic_trigraphs(a: &Trigraph, b: &Trigraph) -> bool {
    if a.n() != b.n() || a.s_count() != b.s_count() || a.c_count() != b.c_count() {
        return false;
    }
    let mut found = false;
    for_each_permutation(a.n(), |perm| {
        found = a.permuted(perm) == *b;
        !found
    });
    found
}

fn check_graph_n(n: usize) -> Result<()> {
    if n > GRAPH_ENUMERATION_MAX_VERTICES {
        Err(Error::SizeLimit {
            what: "graph enumeration",
            limit: GRAPH_ENUMERATION_MAX_VERTICES,
            n,
        })
    } else {
        Ok(())
    }
}

/// Number of labelled graphs on `n` vertices.
pub fn labelled_graph_count(n: usize) -> Result<u64> {
    check_graph_n(n)?;
    Ok(1u64 << pair_count(n))
}

/// All labelled graphs on `n` vertices in code order, or only the canonical
/// representative of each isomorphism class.
pub fn all_graphs(n: usize, canonical_only: bool) -> Result<impl Iterator<Item = Graph>> {
    let total = labelled_graph_count(n)?;
    Ok((0..total)
        .map(move |code| graph_from_code(n, code))
        .filter(move |g| !canonical_only || is_canonical(g)))
}

/// Pair labels are digits in base 3 (`0 = N`, `1 = C`, `2 = S`), first pair
/// least significant.
pub fn trigraph_candidate_from_code(n: usize, mut code: u64) -> TrigraphCandidate {
    let mut c = Vec::new();
    let mut s = Vec::new();
    for (i, j) in pairs(n) {
        match code % 3 {
            1 => c.push((i, j)),
            2 => s.push((i, j)),
            _ => {}
        }
        code /= 3;
    }
    TrigraphCandidate::from_edges(n, &c, &s).expect("enumeration sizes are small")
}

pub fn trigraph_code(t: &Trigraph) -> u64 {
    pairs(t.n()).iter().rev().fold(0u64, |acc, &(i, j)| {
        let digit = if t.is_s_edge(i, j) {
            2
        } else if t.c_row(i) & bit(j) != 0 {
            1
        } else {
            0
        };
        acc * 3 + digit
    })
}

pub fn trigraph_label_assignments(n: usize) -> Result<u64> {
    if n > TRIGRAPH_ENUMERATION_MAX_VERTICES {
        return Err(Error::SizeLimit {
            what: "trigraph enumeration",
            limit: TRIGRAPH_ENUMERATION_MAX_VERTICES,
            n,
        });
    }
    Ok(3u64.pow(pair_count(n) as u32))
}

/// Every valid triangle-free trigraph on `n` labelled vertices, in code order.
pub fn all_trigraphs(n: usize) -> Result<impl Iterator<Item = Trigraph>> {
    let total = trigraph_label_assignments(n)?;
    Ok((0..total).filter_map(move |code| trigraph_candidate_from_code(n, code).into_trigraph().ok()))
}
