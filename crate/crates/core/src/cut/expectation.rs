use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::SerializeMap;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{format_ratio, ratio, Rational};
use crate::trigraph::Trigraph;
use crate::{bit, bits, full_mask, Vertex};

/// The expectation memo holds one entry per vertex subset.
pub const EXPECTATION_MAX_VERTICES: usize = 24;

pub const DEFAULT_BRANCH_BUDGET: u64 = 20_000_000;

fn guard(t: &Trigraph) -> Result<()> {
    if t.n() > EXPECTATION_MAX_VERTICES {
        Err(Error::SizeLimit {
            what: "exact expectation",
            limit: EXPECTATION_MAX_VERTICES,
            n: t.n(),
        })
    } else {
        Ok(())
    }
}

/// Expected monochromatic count among edges inside an unassigned set,
/// memoised on that set. Edges leaving the chosen neighbourhoods towards the
/// residual set are monochromatic with probability one half because the
/// residual process is symmetric under exchanging the sides.
struct Expectation<'a> {
    t: &'a Trigraph,
    memo: HashMap<u64, Rational>,
}

impl<'a> Expectation<'a> {
    fn new(t: &'a Trigraph) -> Self {
        Expectation {
            t,
            memo: HashMap::new(),
        }
    }

    fn edges_within(&self, z: u64) -> usize {
        bits(z)
            .map(|v| (self.t.edge_row(v) & z).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// `½ e(A' ∪ B', Z') + E(Z')` for the ordered pair `(u, v)` inside `z`.
    fn after_choice(&mut self, z: u64, u: Vertex, v: Vertex) -> Rational {
        let t = self.t;
        let chosen = (t.s_row(u) | t.s_row(v)) & z;
        let residual = z & !chosen;
        let crossing: usize = bits(chosen)
            .map(|w| (t.edge_row(w) & residual).count_ones() as usize)
            .sum();
        ratio(crossing as i64, 2) + self.expect(residual)
    }

    fn expect(&mut self, z: u64) -> Rational {
        if let Some(e) = self.memo.get(&z) {
            return e.clone();
        }
        let t = self.t;
        let pairs: Vec<(Vertex, Vertex)> = bits(z)
            .flat_map(|u| bits(t.s_row(u) & z).map(move |v| (u, v)))
            .collect();
        let value = if pairs.is_empty() {
            ratio(self.edges_within(z) as i64, 2)
        } else {
            let total: Rational = pairs.iter().map(|&(u, v)| self.after_choice(z, u, v)).sum();
            total / Rational::from_integer(BigInt::from(pairs.len()))
        };
        self.memo.insert(z, value.clone());
        value
    }
}

/// Exact `E[ē(A, B)]` over the randomness of the procedure.
pub fn exact_expectation(t: &Trigraph) -> Result<Rational> {
    guard(t)?;
    Ok(Expectation::new(t).expect(full_mask(t.n())))
}

/// Exact `E[ē(A, B)]` conditioned on `(u, v)` being the first choice.
pub fn conditional_expectation(t: &Trigraph, u: Vertex, v: Vertex) -> Result<Rational> {
    guard(t)?;
    t.check_vertex(u)?;
    t.check_vertex(v)?;
    if !t.is_s_edge(u, v) {
        return Err(Error::NotAnSEdge(u, v));
    }
    Ok(Expectation::new(t).after_choice(full_mask(t.n()), u, v))
}

/// Exact law of `ē(A, B)`: monochromatic edge count to probability.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Distribution {
    probs: BTreeMap<usize, Rational>,
}

impl Distribution {
    pub fn probability(&self, bar_e: usize) -> Rational {
        self.probs.get(&bar_e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.probs.iter().map(|(&k, p)| (k, p))
    }

    pub fn total_mass(&self) -> Rational {
        self.probs.values().sum()
    }

    pub fn mean(&self) -> Rational {
        self.probs
            .iter()
            .map(|(&k, p)| p * Rational::from_integer(BigInt::from(k)))
            .sum()
    }

    pub fn support(&self) -> Vec<usize> {
        self.probs.keys().copied().collect()
    }

    fn add_scaled(&mut self, other: &Distribution, weight: &Rational) {
        for (&k, p) in &other.probs {
            *self.probs.entry(k).or_insert_with(Rational::zero) += p * weight;
        }
    }
}

impl Serialize for Distribution {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.probs.len()))?;
        for (k, p) in &self.probs {
            map.serialize_entry(&k.to_string(), &format_ratio(p))?;
        }
        map.end()
    }
}

struct OutOfBudget;

/// Branches over every choice the procedure can make, tracking the actual
/// sides. States `(A, B)` reached along different paths share one evaluation.
struct Brancher<'a> {
    t: &'a Trigraph,
    memo: HashMap<(u64, u64), Rc<Distribution>>,
    budget: u64,
    spent: u64,
}

impl<'a> Brancher<'a> {
    fn charge(&mut self, work: u64) -> std::result::Result<(), OutOfBudget> {
        self.spent = self.spent.saturating_add(work);
        if self.spent > self.budget {
            Err(OutOfBudget)
        } else {
            Ok(())
        }
    }

    fn choices(&self, a: u64, b: u64) -> Vec<(u64, u64)> {
        let t = self.t;
        let free = full_mask(t.n()) & !(a | b);
        bits(free)
            .flat_map(|u| bits(t.s_row(u) & free).map(move |v| (u, v)))
            .map(|(u, v)| {
                let a2 = a | (t.s_row(u) & !(a | b));
                let b2 = b | (t.s_row(v) & !(a2 | b));
                (a2, b2)
            })
            .collect()
    }

    fn tail(&mut self, a: u64, b: u64) -> std::result::Result<Distribution, OutOfBudget> {
        let t = self.t;
        let rest: Vec<Vertex> = bits(full_mask(t.n()) & !(a | b)).collect();
        let leaves = 1u64.checked_shl(rest.len() as u32).ok_or(OutOfBudget)?;
        self.charge(leaves)?;
        let weight = Rational::new(BigInt::one(), BigInt::from(leaves));
        let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
        for choice in 0..leaves {
            let mut in_b = b;
            for (i, &v) in rest.iter().enumerate() {
                if choice >> i & 1 == 1 {
                    in_b |= bit(v);
                }
            }
            let in_a = full_mask(t.n()) & !in_b;
            let twice: u32 = (0..t.n())
                .map(|v| (t.edge_row(v) & if in_b & bit(v) != 0 { in_b } else { in_a }).count_ones())
                .sum();
            *counts.entry(twice as usize / 2).or_default() += 1;
        }
        Ok(Distribution {
            probs: counts
                .into_iter()
                .map(|(k, c)| (k, &weight * Rational::from_integer(BigInt::from(c))))
                .collect(),
        })
    }

    fn explore(&mut self, a: u64, b: u64) -> std::result::Result<Rc<Distribution>, OutOfBudget> {
        if let Some(d) = self.memo.get(&(a, b)) {
            return Ok(d.clone());
        }
        self.charge(1)?;
        let next = self.choices(a, b);
        let dist = if next.is_empty() {
            self.tail(a, b)?
        } else {
            let weight = Rational::new(BigInt::one(), BigInt::from(next.len()));
            let mut acc = Distribution::default();
            for (a2, b2) in next {
                let sub = self.explore(a2, b2)?;
                acc.add_scaled(&sub, &weight);
            }
            acc
        };
        let dist = Rc::new(dist);
        self.memo.insert((a, b), dist.clone());
        Ok(dist)
    }
}

pub fn exhaustive_distribution(t: &Trigraph) -> Result<Distribution> {
    exhaustive_distribution_with_budget(t, DEFAULT_BRANCH_BUDGET)
}

/// `budget` caps the number of search states plus tail assignments visited.
/// Running out yields [`Error::BranchBudget`] with the probability mass of the
/// first-level branches that did complete.
pub fn exhaustive_distribution_with_budget(t: &Trigraph, budget: u64) -> Result<Distribution> {
    let mut brancher = Brancher {
        t,
        memo: HashMap::new(),
        budget,
        spent: 0,
    };
    let first = brancher.choices(0, 0);
    let out_of_budget = |mass: Rational| Error::BranchBudget {
        budget,
        explored_mass: mass,
    };
    if first.is_empty() {
        return brancher.tail(0, 0).map_err(|_| out_of_budget(Rational::zero()));
    }
    let weight = Rational::new(BigInt::one(), BigInt::from(first.len()));
    let mut acc = Distribution::default();
    let mut done = Rational::zero();
    for (a, b) in first {
        let sub = brancher.explore(a, b).map_err(|_| out_of_budget(done.clone()))?;
        acc.add_scaled(&sub, &weight);
        done += &weight;
    }
    Ok(acc)
}
