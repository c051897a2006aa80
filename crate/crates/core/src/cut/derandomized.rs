use serde::Serialize;

use super::CutResult;
use crate::counts::pair_sum_doubled;
use crate::partition::Partition;
use crate::rational::{ratio, Rational};
use crate::trigraph::Trigraph;
use crate::{bit, bits, full_mask, Vertex};

/// One recursion level: the pair chosen on the residual trigraph, its weight
/// `g(u, v)` computed on that residual, and the residual's vertex count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerandLevel {
    pub pair: (Vertex, Vertex),
    #[serde(serialize_with = "crate::rational::serde_ratio")]
    pub pair_sum: Rational,
    pub residual_size: usize,
    /// Whether the sub-solution below this level had its sides exchanged.
    pub flipped: bool,
}

impl DerandLevel {
    /// `g(u, v) <= |V'|² / 2`, the property that makes the level's choice safe.
    pub fn within_bound(&self) -> bool {
        self.pair_sum <= ratio((self.residual_size * self.residual_size) as i64, 2)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DerandTrace {
    pub levels: Vec<DerandLevel>,
    /// Vertices placed greedily once no `S`-edge was left, in placement order.
    pub tail: Vec<Vertex>,
}

pub fn derandomized_cut(t: &Trigraph) -> CutResult {
    derandomized_cut_traced(t).0
}

/// Deterministic version of the procedure.
///
/// On the residual set `Z` the ordered `S`-pair minimising `g` on `t[Z]` is
/// taken (lexicographically smallest on ties); `N_S(u) ∩ Z` goes to `A` and
/// `N_S(v) ∩ Z` to `B`. The rest `Z'` is solved recursively and then used as
/// is or with its sides exchanged, whichever leaves fewer monochromatic edges
/// towards the vertices just placed, so at most half of those edges are
/// monochromatic. With no `S`-edge left, vertices are placed in ascending
/// order on the side holding fewer of their already placed neighbours in
/// `Z` (ties to `A`).
pub fn derandomized_cut_traced(t: &Trigraph) -> (CutResult, DerandTrace) {
    let mut trace = DerandTrace::default();
    let in_b = solve(t, full_mask(t.n()), &mut trace);
    let partition = Partition::from_b_mask(t.n(), in_b).expect("mask within range");
    (CutResult::new(t, partition), trace)
}

/// Returns the set of vertices of `z` placed on side `B`.
fn solve(t: &Trigraph, z: u64, trace: &mut DerandTrace) -> u64 {
    let Some((u, v, pair_sum)) = best_pair(t, z) else {
        return greedy_tail(t, z, trace);
    };
    let level = trace.levels.len();
    trace.levels.push(DerandLevel {
        pair: (u, v),
        pair_sum,
        residual_size: z.count_ones() as usize,
        flipped: false,
    });

    let to_a = t.s_row(u) & z;
    let to_b = t.s_row(v) & z & !to_a;
    let residual = z & !(to_a | to_b);
    let sub_b = solve(t, residual, trace);
    let sub_a = residual & !sub_b;

    let mono = |side_a: u64, side_b: u64| -> u32 {
        bits(to_a).map(|w| (t.edge_row(w) & side_a).count_ones()).sum::<u32>()
            + bits(to_b).map(|w| (t.edge_row(w) & side_b).count_ones()).sum::<u32>()
    };
    let flip = mono(sub_b, sub_a) < mono(sub_a, sub_b);
    trace.levels[level].flipped = flip;
    to_b | if flip { sub_a } else { sub_b }
}

fn best_pair(t: &Trigraph, z: u64) -> Option<(Vertex, Vertex, Rational)> {
    let keep: Vec<Vertex> = bits(z).collect();
    let sub = t.induced_mask(z);
    let mut best: Option<(Vertex, Vertex, i64)> = None;
    for (i, j) in sub.ordered_s_pairs() {
        let g = pair_sum_doubled(&sub, i, j);
        if best.is_none_or(|(_, _, b)| g < b) {
            best = Some((keep[i], keep[j], g));
        }
    }
    best.map(|(u, v, g)| (u, v, ratio(g, 2)))
}

fn greedy_tail(t: &Trigraph, z: u64, trace: &mut DerandTrace) -> u64 {
    let (mut a, mut b) = (0u64, 0u64);
    for v in bits(z) {
        let row = t.edge_row(v);
        if (row & b).count_ones() < (row & a).count_ones() {
            b |= bit(v);
        } else {
            a |= bit(v);
        }
        trace.tail.push(v);
    }
    b
}
