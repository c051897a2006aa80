//! The recursive cut-generating procedure on triangle-free trigraphs.
//!
//! While some `S`-edge has both ends unassigned, an ordered pair `(u, v)`
//! with `uv ∈ S` is chosen among the unassigned vertices, the unassigned
//! `S`-neighbours of `u` join side `A` and those of `v` join side `B`. Once no
//! such edge remains, the leftover vertices are placed independently.
//!
//! [`random_cut`] runs it with a seeded generator, [`derandomized_cut`] makes
//! every choice greedily against the local weight bound, and
//! [`exact_expectation`] / [`exhaustive_distribution`] evaluate the expected
//! number of monochromatic edges exactly, by two independent routes.

mod derandomized;
mod expectation;
mod random;

pub use derandomized::{derandomized_cut, derandomized_cut_traced, DerandLevel, DerandTrace};
pub use expectation::{
    conditional_expectation, exact_expectation, exhaustive_distribution, exhaustive_distribution_with_budget,
    Distribution, DEFAULT_BRANCH_BUDGET, EXPECTATION_MAX_VERTICES,
};
pub use random::{random_cut, random_cut_with_rng, seeded_rng, RunTrace, TraceStep};

use num_bigint::BigInt;
use serde::Serialize;

use crate::partition::{cut_counts, Partition};
use crate::rational::{quarter_square, Rational};
use crate::trigraph::Trigraph;

/// A partition together with its monochromatic edge count and the bound
/// `n²/4 - |S|` it is checked against.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutResult {
    pub partition: Partition,
    pub bar_e: usize,
    #[serde(serialize_with = "crate::rational::serde_ratio")]
    pub bound: Rational,
    pub certified: bool,
}

impl CutResult {
    pub(crate) fn new(t: &Trigraph, partition: Partition) -> CutResult {
        let bar_e = cut_counts(t, &partition)
            .expect("partition built for this trigraph")
            .bar_e;
        let bound = quarter_square(t.n()) - Rational::from_integer(BigInt::from(t.s_count()));
        CutResult {
            certified: Rational::from_integer(BigInt::from(bar_e)) <= bound,
            partition,
            bar_e,
            bound,
        }
    }
}
