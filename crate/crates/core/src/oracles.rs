//! Brute-force ground truth for `alpha_1`, `tau_B`, `tau_1` and `tau_2`.
//!
//! Every oracle is exact and deterministic: the returned witness is the first
//! optimum met in a fixed search order, so identical graphs give identical
//! witnesses.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::Partition;
use crate::Vertex;

/// Vertex-count ceilings for the exponential searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    pub alpha1: usize,
    pub tau_b: usize,
    pub tau1: usize,
    pub tau2: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            alpha1: 12,
            tau_b: 24,
            tau1: 10,
            tau2: 12,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Witness {
    Edges(Vec<(Vertex, Vertex)>),
    Partition(Partition),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub value: usize,
    pub witness: Witness,
}

impl OracleResult {
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        match &self.witness {
            Witness::Edges(e) => e,
            Witness::Partition(_) => &[],
        }
    }

    pub fn partition(&self) -> Option<&Partition> {
        match &self.witness {
            Witness::Partition(p) => Some(p),
            Witness::Edges(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tau2Result {
    pub direct: OracleResult,
    pub via_identity: usize,
    pub agree: bool,
}

fn check_limit(what: &'static str, limit: usize, g: &Graph) -> Result<()> {
    if g.n() > limit {
        Err(Error::SizeLimit { what, limit, n: g.n() })
    } else {
        Ok(())
    }
}

/// Edges of a graph indexed `0..m` in canonical order, with triangles as
/// bit masks over those indices.
struct EdgeIndex {
    edges: Vec<(Vertex, Vertex)>,
    triangles: Vec<u128>,
}

impl EdgeIndex {
    fn new(g: &Graph) -> Self {
        let edges = g.edges();
        assert!(edges.len() <= 128, "edge index holds at most 128 edges");
        let index = |u: Vertex, v: Vertex| edges.binary_search(&(u.min(v), u.max(v))).unwrap();
        let triangles = g
            .triangles()
            .into_iter()
            .map(|[a, b, c]| (1u128 << index(a, b)) | (1u128 << index(a, c)) | (1u128 << index(b, c)))
            .collect();
        EdgeIndex { edges, triangles }
    }

    fn to_edges(&self, mask: u128) -> Vec<(Vertex, Vertex)> {
        (0..self.edges.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| self.edges[i])
            .collect()
    }
}

impl OracleLimits {
    /// Maximum triangle-independent edge set.
    ///
    /// Edges in no triangle are always taken. The rest are branched on in
    /// order of decreasing triangle count, include before exclude; taking an
    /// edge discards every edge sharing a triangle with it, and a branch is cut
    /// once `chosen + candidates` cannot beat the best so far.
    pub fn alpha1(&self, g: &Graph) -> Result<OracleResult> {
        check_limit("alpha1", self.alpha1, g)?;
        let idx = EdgeIndex::new(g);
        let m = idx.edges.len();
        let mut tri_count = vec![0usize; m];
        let mut conflict = vec![0u128; m];
        for &t in &idx.triangles {
            for e in (0..m).filter(|&e| t >> e & 1 == 1) {
                tri_count[e] += 1;
                conflict[e] |= t & !(1u128 << e);
            }
        }
        let free: u128 = (0..m).filter(|&e| tri_count[e] == 0).fold(0, |acc, e| acc | 1u128 << e);
        let mut order: Vec<usize> = (0..m).filter(|&e| tri_count[e] > 0).collect();
        order.sort_by_key(|&e| std::cmp::Reverse(tri_count[e]));

        // Search in position space so the lowest candidate bit is the next edge.
        let pos_conflict: Vec<u128> = order
            .iter()
            .map(|&e| {
                order
                    .iter()
                    .enumerate()
                    .filter(|&(_, &f)| conflict[e] >> f & 1 == 1)
                    .fold(0u128, |acc, (p, _)| acc | 1u128 << p)
            })
            .collect();

        struct Search<'a> {
            conflict: &'a [u128],
            best: Option<(u32, u128)>,
        }
        impl Search<'_> {
            fn run(&mut self, count: u32, chosen: u128, cand: u128) {
                if let Some((best, _)) = self.best {
                    if count + cand.count_ones() <= best {
                        return;
                    }
                }
                if cand == 0 {
                    self.best = Some((count, chosen));
                    return;
                }
                let p = cand.trailing_zeros() as usize;
                let e = 1u128 << p;
                self.run(count + 1, chosen | e, cand & !e & !self.conflict[p]);
                self.run(count, chosen, cand & !e);
            }
        }
        let all = if order.is_empty() {
            0
        } else {
            u128::MAX >> (128 - order.len())
        };
        let mut search = Search {
            conflict: &pos_conflict,
            best: None,
        };
        search.run(0, 0, all);
        let (_, chosen_pos) = search.best.expect("the empty set is always feasible");
        let chosen = order
            .iter()
            .enumerate()
            .filter(|&(p, _)| chosen_pos >> p & 1 == 1)
            .fold(free, |acc, (_, &e)| acc | 1u128 << e);
        Ok(OracleResult {
            value: chosen.count_ones() as usize,
            witness: Witness::Edges(idx.to_edges(chosen)),
        })
    }

    /// Minimum number of monochromatic edges over all bipartitions with
    /// vertex 0 on side `A`; the witness is the first optimum in increasing
    /// order of the `B`-side bit mask.
    pub fn tau_b(&self, g: &Graph) -> Result<OracleResult> {
        check_limit("tau_b", self.tau_b, g)?;
        let n = g.n();
        let full = crate::full_mask(n);
        let rows: Vec<u64> = (0..n).map(|v| g.neighbors(v)).collect();
        let mut best = (u32::MAX, 0u64);
        let half = if n == 0 { 1 } else { 1u64 << (n - 1) };
        for m in 0..half {
            let in_b = m << 1;
            let in_a = full & !in_b;
            let twice: u32 = (0..n)
                .map(|v| (rows[v] & if in_b >> v & 1 == 1 { in_b } else { in_a }).count_ones())
                .sum();
            if twice / 2 < best.0 {
                best = (twice / 2, in_b);
            }
        }
        Ok(OracleResult {
            value: best.0 as usize,
            witness: Witness::Partition(Partition::from_b_mask(n, best.1)?),
        })
    }

    /// Minimum edge set meeting every triangle.
    pub fn tau1(&self, g: &Graph) -> Result<OracleResult> {
        check_limit("tau1", self.tau1, g)?;
        Ok(min_triangle_cover(g, 1))
    }

    /// Minimum edge set containing two edges of every triangle, by direct
    /// search, compared with `|E| - alpha_1`.
    pub fn tau2(&self, g: &Graph) -> Result<Tau2Result> {
        check_limit("tau2", self.tau2, g)?;
        let direct = min_triangle_cover(g, 2);
        let via_identity = g.edge_count() - self.alpha1(g)?.value;
        Ok(Tau2Result {
            agree: direct.value == via_identity,
            direct,
            via_identity,
        })
    }
}

/// Smallest edge set with at least `k` edges in every triangle.
///
/// Branches on the lowest open edge of the first deficient triangle (include,
/// then exclude). The lower bound adds the deficits of deficient triangles
/// whose open edges are pairwise disjoint.
fn min_triangle_cover(g: &Graph, k: u32) -> OracleResult {
    let idx = EdgeIndex::new(g);

    struct Search<'a> {
        triangles: &'a [u128],
        k: u32,
        best: Option<(u32, u128)>,
    }
    impl Search<'_> {
        fn run(&mut self, chosen: u128, excluded: u128) {
            let count = chosen.count_ones();
            let mut first: Option<u128> = None;
            let mut bound = count;
            let mut used = 0u128;
            for &t in self.triangles {
                let deficit = self.k.saturating_sub((t & chosen).count_ones());
                if deficit == 0 {
                    continue;
                }
                let open = t & !chosen & !excluded;
                if open.count_ones() < deficit {
                    return;
                }
                first.get_or_insert(open);
                if open & used == 0 {
                    bound += deficit;
                    used |= open;
                }
            }
            if let Some((best, _)) = self.best {
                if bound >= best {
                    return;
                }
            }
            match first {
                None => self.best = Some((count, chosen)),
                Some(open) => {
                    let e = 1u128 << open.trailing_zeros();
                    self.run(chosen | e, excluded);
                    self.run(chosen, excluded | e);
                }
            }
        }
    }
    let mut search = Search {
        triangles: &idx.triangles,
        k,
        best: None,
    };
    search.run(0, 0);
    let (value, chosen) = search.best.expect("taking every edge is always feasible");
    OracleResult {
        value: value as usize,
        witness: Witness::Edges(idx.to_edges(chosen)),
    }
}

pub fn alpha1(g: &Graph) -> Result<OracleResult> {
    OracleLimits::default().alpha1(g)
}

pub fn tau_b(g: &Graph) -> Result<OracleResult> {
    OracleLimits::default().tau_b(g)
}

pub fn tau1(g: &Graph) -> Result<OracleResult> {
    OracleLimits::default().tau1(g)
}

pub fn tau2(g: &Graph) -> Result<Tau2Result> {
    OracleLimits::default().tau2(g)
}

fn edge_set_in(g: &Graph, edges: &[(Vertex, Vertex)]) -> Option<Graph> {
    let mut h = Graph::empty(g.n()).ok()?;
    for &(u, v) in edges {
        if !g.has_edge(u, v) {
            return None;
        }
        h.add_edge(u, v).ok()?;
    }
    Some(h)
}

/// Every triangle of `g` has at most one edge in `edges`.
pub fn is_triangle_independent(g: &Graph, edges: &[(Vertex, Vertex)]) -> bool {
    let Some(h) = edge_set_in(g, edges) else {
        return false;
    };
    g.triangles().iter().all(|&[a, b, c]| {
        [(a, b), (a, c), (b, c)]
            .iter()
            .filter(|&&(x, y)| h.has_edge(x, y))
            .count()
            <= 1
    })
}

/// Every triangle of `g` has at least `times` edges in `edges`.
pub fn covers_triangles(g: &Graph, edges: &[(Vertex, Vertex)], times: usize) -> bool {
    let Some(h) = edge_set_in(g, edges) else {
        return false;
    };
    g.triangles().iter().all(|&[a, b, c]| {
        [(a, b), (a, c), (b, c)]
            .iter()
            .filter(|&&(x, y)| h.has_edge(x, y))
            .count()
            >= times
    })
}

/// `g` minus the edges monochromatic under `p` is bipartite, checked by
/// two-colouring the remainder rather than trusting `p`.
pub fn bipartizes(g: &Graph, p: &Partition) -> bool {
    let Ok(inside) = p.inside_edges(g) else {
        return false;
    };
    let mut rest = g.clone();
    for (u, v) in g.edges() {
        if p.side(u) == p.side(v) {
            rest.remove_edge(u, v).unwrap();
        }
    }
    rest.is_bipartite() && g.edge_count() - rest.edge_count() == inside
}
