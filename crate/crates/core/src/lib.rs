//! Exact tools for triangle-independent edge sets and bipartization.
//!
//! The crate is organised around the *triangle-free trigraph*: a vertex set
//! carrying two disjoint edge relations, plain edges `C` and
//! triangle-independent edges `S`, such that no two `S`-neighbours of a vertex
//! are adjacent. On top of that it provides
//!
//! * [`counts`]: the five ordered-quadruple configuration sums and the local
//!   weight function used to bound the cut produced by the recursive
//!   partitioning procedure,
//! * [`cut`]: that procedure (seeded random, derandomized) plus two exact
//!   evaluators of its expected number of monochromatic edges,
//! * [`oracles`]: brute-force `alpha_1`, `tau_B`, `tau_1` and `tau_2`,
//! * [`extremal`]: joins of complete balanced bipartite graphs, the Clebsch
//!   graph, and recognisers for the extremal family,
//! * [`enumerate`], [`graph6`] and [`sweep`]: exhaustive small-graph drivers
//!   that machine-check `alpha_1(G) + tau_B(G) <= |V(G)|^2 / 4` and its
//!   trigraph strengthening.
//!
//! All arithmetic is exact: integers for counts, [`Rational`] for
//! expectations and weights.

pub mod counts;
pub mod cut;
pub mod enumerate;
mod error;
pub mod extremal;
pub mod graph;
pub mod graph6;
pub mod oracles;
pub mod partition;
pub mod rational;
pub mod sweep;
pub mod trigraph;

pub use error::{Error, Result};
pub use graph::Graph;
pub use partition::{cut_counts, CutCounts, Partition, Side};
pub use rational::Rational;
pub use trigraph::{EdgeLabel, Trigraph, TrigraphCandidate, Violation, ViolationKind};

/// Largest vertex count representable by the bit-row adjacency used throughout.
pub const MAX_VERTICES: usize = 64;

pub type Vertex = usize;

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of `mask` in ascending order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}
