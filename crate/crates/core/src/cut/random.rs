use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::CutResult;
use crate::error::{Error, Result};
use crate::partition::{Partition, Side};
use crate::trigraph::Trigraph;
use crate::{bit, bits, full_mask, Vertex};

/// The generator behind every seeded run: ChaCha8 keyed by
/// `seed_from_u64(seed)`. Independent workers split it with
/// `set_stream(worker_index)`.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub pair: (Vertex, Vertex),
    pub added_to_a: Vec<Vertex>,
    pub added_to_b: Vec<Vertex>,
}

/// Every random decision of one run, in order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunTrace {
    pub steps: Vec<TraceStep>,
    pub tail: Vec<(Vertex, Side)>,
}

impl RunTrace {
    /// Re-executes the recorded choices on `t`, checking every step against
    /// what the procedure would have done, and returns the final partition.
    pub fn replay(&self, t: &Trigraph) -> Result<Partition> {
        let mismatch = |msg: String| Error::TraceMismatch(msg);
        let (mut a, mut b) = (0u64, 0u64);
        for (i, step) in self.steps.iter().enumerate() {
            let (u, v) = step.pair;
            t.check_vertex(u)?;
            t.check_vertex(v)?;
            let assigned = a | b;
            if !t.is_s_edge(u, v) || assigned & (bit(u) | bit(v)) != 0 {
                return Err(mismatch(format!("step {i}: ({u}, {v}) is not an unassigned S-pair")));
            }
            let new_a = t.s_row(u) & !assigned;
            let new_b = t.s_row(v) & !(assigned | new_a);
            if bits(new_a).collect::<Vec<_>>() != step.added_to_a || bits(new_b).collect::<Vec<_>>() != step.added_to_b
            {
                return Err(mismatch(format!("step {i}: recorded assignments differ")));
            }
            a |= new_a;
            b |= new_b;
        }
        let rest = full_mask(t.n()) & !(a | b);
        if let Some((u, v)) = t
            .ordered_s_pairs()
            .into_iter()
            .find(|&(u, v)| rest & bit(u) != 0 && rest & bit(v) != 0)
        {
            return Err(mismatch(format!("trace stops while S-edge {u}-{v} is unassigned")));
        }
        let tail: Vec<Vertex> = self.tail.iter().map(|&(v, _)| v).collect();
        if tail != bits(rest).collect::<Vec<_>>() {
            return Err(mismatch("tail does not list the unassigned vertices in order".into()));
        }
        for &(v, side) in &self.tail {
            if side == Side::B {
                b |= bit(v);
            }
        }
        Partition::from_b_mask(t.n(), b)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("trace serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<RunTrace> {
        serde_json::from_str(text).map_err(|e| Error::parse(e.line().max(1), e.to_string()))
    }
}

/// One run of the randomized procedure, reproducible from `seed`.
pub fn random_cut(t: &Trigraph, seed: u64) -> (CutResult, RunTrace) {
    random_cut_with_rng(t, &mut seeded_rng(seed))
}

/// The pair is drawn uniformly among *ordered* pairs `(u, v)`, `uv ∈ S`, with
/// both ends unassigned; the `A` update happens before the `B` update.
pub fn random_cut_with_rng<R: Rng + ?Sized>(t: &Trigraph, rng: &mut R) -> (CutResult, RunTrace) {
    let (mut a, mut b) = (0u64, 0u64);
    let mut steps = Vec::new();
    loop {
        let free = full_mask(t.n()) & !(a | b);
        let pairs: Vec<(Vertex, Vertex)> = bits(free)
            .flat_map(|u| bits(t.s_row(u) & free).map(move |v| (u, v)))
            .collect();
        if pairs.is_empty() {
            break;
        }
        let (u, v) = pairs[rng.gen_range(0..pairs.len())];
        let new_a = t.s_row(u) & !(a | b);
        a |= new_a;
        let new_b = t.s_row(v) & !(a | b);
        b |= new_b;
        steps.push(TraceStep {
            pair: (u, v),
            added_to_a: bits(new_a).collect(),
            added_to_b: bits(new_b).collect(),
        });
    }
    let rest = full_mask(t.n()) & !(a | b);
    let mut tail = Vec::new();
    for v in bits(rest) {
        let side = if rng.gen::<bool>() { Side::B } else { Side::A };
        if side == Side::B {
            b |= bit(v);
        }
        tail.push((v, side));
    }
    let partition = Partition::from_b_mask(t.n(), b).expect("mask within range");
    (CutResult::new(t, partition), RunTrace { steps, tail })
}
