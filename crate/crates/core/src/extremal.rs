//! The extremal family: joins of complete balanced bipartite graphs, their
//! trigraph counterparts, recognisers for both, and the Clebsch graph.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::counts::config_counts;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracles::OracleLimits;
use crate::trigraph::Trigraph;
use crate::{bit, bits, full_mask, MAX_VERTICES};

/// Half-sizes `t_1, ..., t_k` of the factors `K_{t_i,t_i}`, kept in
/// non-increasing order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct JoinSpec {
    parts: Vec<usize>,
}

impl JoinSpec {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::JoinSpec("factor sizes must be positive".into()));
        }
        let total: usize = parts.iter().sum();
        if 2 * total > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n: 2 * total,
                max: MAX_VERTICES,
            });
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(JoinSpec { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn vertex_count(&self) -> usize {
        2 * self.parts.iter().sum::<usize>()
    }

    /// `sum t_i^2`, the size of the union of the bipartite factors.
    pub fn factor_edges(&self) -> usize {
        self.parts.iter().map(|t| t * t).sum()
    }

    /// `2 (sum t_i)^2 - sum t_i^2`.
    pub fn join_edges(&self) -> usize {
        let total: usize = self.parts.iter().sum();
        2 * total * total - self.factor_edges()
    }

    /// Vertex ranges of the two sides of each factor.
    fn sides(&self) -> Vec<(u64, u64)> {
        let mut offset = 0;
        self.parts
            .iter()
            .map(|&t| {
                let a = full_mask(t) << offset;
                let b = full_mask(t) << (offset + t);
                offset += 2 * t;
                (a, b)
            })
            .collect()
    }
}

impl fmt::Display for JoinSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|t| t.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for JoinSpec {
    type Err = Error;

    /// Comma-separated half-sizes such as `2,1,1`; the empty string is the
    /// empty join.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return JoinSpec::new(Vec::new());
        }
        let parts = text
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::JoinSpec(format!("bad factor size {:?}", p.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        JoinSpec::new(parts)
    }
}

/// Every spec on at most `max_vertices` vertices, the empty one included,
/// ordered by vertex count and then by parts.
pub fn join_specs_up_to(max_vertices: usize) -> Vec<JoinSpec> {
    fn partitions(total: usize, largest: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if total == 0 {
            out.push(prefix.clone());
            return;
        }
        for t in (1..=largest.min(total)).rev() {
            prefix.push(t);
            partitions(total - t, t, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for half in 0..=max_vertices.min(MAX_VERTICES) / 2 {
        let mut parts = Vec::new();
        partitions(half, half, &mut Vec::new(), &mut parts);
        out.extend(parts.into_iter().map(|p| JoinSpec { parts: p }));
    }
    out
}

/// `K_{t_1,t_1} ∨ ... ∨ K_{t_k,t_k}`. Factor `i` occupies the next `2 t_i`
/// vertices, the first `t_i` forming one side.
pub fn make_join(spec: &JoinSpec) -> Graph {
    let n = spec.vertex_count();
    let all = full_mask(n);
    let mut rows = vec![0u64; n];
    for (a, b) in spec.sides() {
        for v in bits(a) {
            rows[v] = all & !a;
        }
        for v in bits(b) {
            rows[v] = all & !b;
        }
    }
    Graph::from_rows(n, rows)
}

/// The C-join of complete balanced bipartite trigraphs: `S` is the union of
/// the factors, `C` every pair between factors.
pub fn make_cjoin_trigraph(spec: &JoinSpec) -> Trigraph {
    let n = spec.vertex_count();
    let all = full_mask(n);
    let mut c = vec![0u64; n];
    let mut s = vec![0u64; n];
    for (a, b) in spec.sides() {
        for (side, other) in [(a, b), (b, a)] {
            for v in bits(side) {
                s[v] = other;
                c[v] = all & !(a | b);
            }
        }
    }
    crate::trigraph::TrigraphCandidate::from_rows(n, c, s)
        .and_then(|t| t.into_trigraph())
        .expect("C-joins of bipartite factors are valid trigraphs")
}

/// Vertices are 4-bit strings, adjacent when they differ in exactly one or
/// in all four positions.
pub fn clebsch() -> Graph {
    let rows = (0..16u32)
        .map(|u| {
            (0..16u32)
                .filter(|v| matches!((u ^ v).count_ones(), 1 | 4))
                .fold(0u64, |row, v| row | bit(v as usize))
        })
        .collect();
    Graph::from_rows(16, rows)
}

/// Connected components of the graph given by `rows`, as vertex masks in
/// order of their least vertex.
fn components(rows: &[u64]) -> Vec<u64> {
    let mut unseen = full_mask(rows.len());
    let mut out = Vec::new();
    while unseen != 0 {
        let mut comp = unseen & unseen.wrapping_neg();
        let mut frontier = comp;
        while frontier != 0 {
            let reach = bits(frontier).fold(0u64, |acc, v| acc | rows[v]);
            frontier = reach & !comp;
            comp |= reach;
        }
        unseen &= !comp;
        out.push(comp);
    }
    out
}

/// Pairs equal sizes greedily after sorting; `None` if some size is left
/// unmatched.
fn pair_sizes(mut sizes: Vec<usize>) -> Option<Vec<usize>> {
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    if sizes.len() % 2 == 1 {
        return None;
    }
    let mut parts = Vec::with_capacity(sizes.len() / 2);
    for pair in sizes.chunks(2) {
        if pair[0] != pair[1] {
            return None;
        }
        parts.push(pair[0]);
    }
    Some(parts)
}

/// Recognises a join of complete balanced bipartite graphs through its
/// complement, which must be a disjoint union of cliques whose sizes pair up.
/// Among several valid pairings the sorted greedy one is returned.
pub fn is_join_of_cbb(g: &Graph) -> Option<JoinSpec> {
    let complement = g.complement();
    let rows: Vec<u64> = (0..g.n()).map(|v| complement.neighbors(v)).collect();
    let mut sizes = Vec::new();
    for comp in components(&rows) {
        if bits(comp).any(|v| rows[v] | bit(v) != comp) {
            return None;
        }
        sizes.push(comp.count_ones() as usize);
    }
    pair_sizes(sizes).map(|parts| JoinSpec { parts })
}

/// Recognises a C-join of complete balanced bipartite trigraphs: every
/// component of the `S`-graph is some `K_{t,t}` with no `C` inside it, and
/// every pair between components is in `C`.
pub fn is_cjoin_of_cbb(t: &Trigraph) -> Option<JoinSpec> {
    let n = t.n();
    let all = full_mask(n);
    let s_rows: Vec<u64> = (0..n).map(|v| t.s_row(v)).collect();
    let mut parts = Vec::new();
    for comp in components(&s_rows) {
        let root = comp.trailing_zeros() as usize;
        let b = s_rows[root];
        let a = comp & !b;
        if a.count_ones() != b.count_ones() || b == 0 {
            return None;
        }
        for v in bits(comp) {
            let (own, other) = if a & bit(v) != 0 { (a, b) } else { (b, a) };
            if s_rows[v] != other || own & bit(v) == 0 || t.c_row(v) != all & !comp {
                return None;
            }
        }
        parts.push(a.count_ones() as usize);
    }
    parts.sort_unstable_by(|x, y| y.cmp(x));
    Some(JoinSpec { parts })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LocalConditions {
    /// `n(uv) n(vw) (s(uw) + c(uw)) = 0` for all `u, v, w`.
    pub cond1: bool,
    /// `n(uv) s(vw) c(uw) = 0` for all `u, v, w`.
    pub cond2: bool,
    /// `C_4(G) = K_{1,3}(G)`.
    pub cond3: bool,
    /// Every vertex has an `S`-neighbour.
    pub cond4: bool,
    pub all: bool,
}

/// Evaluates the four local conditions literally, over all ordered triples
/// with repetition.
pub fn check_local_conditions(t: &Trigraph) -> LocalConditions {
    let n = t.n();
    let mut cond1 = true;
    let mut cond2 = true;
    for u in 0..n {
        for v in 0..n {
            for w in 0..n {
                cond1 &= t.nv(u, v) * t.nv(v, w) * (t.sv(u, w) + t.cv(u, w)) == 0;
                cond2 &= t.nv(u, v) * t.sv(v, w) * t.cv(u, w) == 0;
            }
        }
    }
    let counts = config_counts(t);
    let cond3 = counts.c4 == counts.k13;
    let cond4 = (0..n).all(|u| (0..n).map(|v| t.sv(u, v)).sum::<i64>() > 0);
    LocalConditions {
        cond1,
        cond2,
        cond3,
        cond4,
        all: cond1 && cond2 && cond3 && cond4,
    }
}

/// The structural consequences of equality used to pin down a connected
/// extremal trigraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TightnessConditions {
    /// Both ends of every `S`-edge have the same `S`-degree.
    pub equal_s_degrees: bool,
    /// `(n(uv)+c(uv)) s(vw) n(uw) s(ux) n(vx) (n(xw)+c(xw)) = 0`.
    pub product_ii: bool,
    /// `s(uv) s(uw) n(wx) c(vx) = 0`.
    pub product_iii: bool,
}

impl TightnessConditions {
    pub fn all(&self) -> bool {
        self.equal_s_degrees && self.product_ii && self.product_iii
    }
}

/// Evaluates the tightness conditions over all ordered quadruples.
pub fn check_tightness_conditions(t: &Trigraph) -> TightnessConditions {
    let n = t.n();
    let equal_s_degrees = t.s_edges().iter().all(|&(u, v)| t.s_degree(u) == t.s_degree(v));
    let mut product_ii = true;
    let mut product_iii = true;
    for u in 0..n {
        for v in 0..n {
            for w in 0..n {
                for x in 0..n {
                    product_ii &= (t.nv(u, v) + t.cv(u, v))
                        * t.sv(v, w)
                        * t.nv(u, w)
                        * t.sv(u, x)
                        * t.nv(v, x)
                        * (t.nv(x, w) + t.cv(x, w))
                        == 0;
                    product_iii &= t.sv(u, v) * t.sv(u, w) * t.nv(w, x) * t.cv(v, x) == 0;
                }
            }
        }
    }
    TightnessConditions {
        equal_s_degrees,
        product_ii,
        product_iii,
    }
}

/// Oracle values on `make_join(spec)` against the closed forms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JoinIdentities {
    pub spec: JoinSpec,
    pub n: usize,
    pub alpha1: usize,
    pub edges: usize,
    pub tau_b: usize,
    /// `alpha_1 = sum t_i^2`.
    pub alpha1_ok: bool,
    /// `|E| = 2 (sum t_i)^2 - sum t_i^2`.
    pub edges_ok: bool,
    /// `tau_B = |E| - n^2/4`.
    pub taub_ok: bool,
    /// `alpha_1 + tau_B = n^2/4`.
    pub equality_ok: bool,
}

impl JoinIdentities {
    pub fn all(&self) -> bool {
        self.alpha1_ok && self.edges_ok && self.taub_ok && self.equality_ok
    }
}

pub fn verify_join_identities(spec: &JoinSpec) -> Result<JoinIdentities> {
    verify_join_identities_with(spec, &OracleLimits::default())
}

pub fn verify_join_identities_with(spec: &JoinSpec, limits: &OracleLimits) -> Result<JoinIdentities> {
    let g = make_join(spec);
    let n = g.n();
    let alpha1 = limits.alpha1(&g)?.value;
    let tau_b = limits.tau_b(&g)?.value;
    let edges = g.edge_count();
    // n is even, so n^2/4 is an integer.
    let quarter = n * n / 4;
    Ok(JoinIdentities {
        spec: spec.clone(),
        n,
        alpha1,
        edges,
        tau_b,
        alpha1_ok: alpha1 == spec.factor_edges(),
        edges_ok: edges == spec.join_edges(),
        taub_ok: edges >= quarter && tau_b == edges - quarter,
        equality_ok: alpha1 + tau_b == quarter,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(text: &str) -> JoinSpec {
        text.parse().unwrap()
    }

    #[test]
    fn spec_parsing() {
        assert_eq!(spec("1,2,1").parts(), &[2, 1, 1]);
        assert_eq!(spec("").parts(), &[] as &[usize]);
        assert_eq!(spec(" 3 ").to_string(), "3");
        assert!("1,0".parse::<JoinSpec>().is_err());
        assert!("1,,2".parse::<JoinSpec>().is_err());
        assert!("-1".parse::<JoinSpec>().is_err());
        assert!("33".parse::<JoinSpec>().is_err());
    }

    #[test]
    fn join_examples() {
        let k4 = make_join(&spec("1,1"));
        assert_eq!(k4, Graph::complete(4).unwrap());
        let c4 = make_join(&spec("2"));
        assert_eq!((c4.n(), c4.edge_count()), (4, 4));
        assert!(c4.is_bipartite());
        assert_eq!(make_join(&spec("2,1")).edge_count(), 13);
        assert_eq!(make_join(&spec("")).n(), 0);
    }

    #[test]
    fn cjoin_examples() {
        let t = make_cjoin_trigraph(&spec("1,1"));
        assert_eq!(t.s_edges(), vec![(0, 1), (2, 3)]);
        assert_eq!(t.c_count(), 4);
        let t = make_cjoin_trigraph(&spec("2"));
        assert_eq!((t.s_count(), t.c_count()), (4, 0));
        let t = make_cjoin_trigraph(&spec("1,1,1"));
        assert_eq!((t.n(), t.s_count(), t.c_count()), (6, 3, 12));
    }

    #[test]
    fn clebsch_shape() {
        let g = clebsch();
        assert_eq!((g.n(), g.edge_count()), (16, 40));
        assert!((0..16).all(|v| g.degree(v) == 5));
        assert!(g.is_triangle_free());
    }

    #[test]
    fn recognises_joins() {
        assert_eq!(is_join_of_cbb(&Graph::complete(4).unwrap()), Some(spec("1,1")));
        assert_eq!(is_join_of_cbb(&Graph::cycle(4).unwrap()), Some(spec("2")));
        assert_eq!(is_join_of_cbb(&Graph::cycle(5).unwrap()), None);
        assert_eq!(is_join_of_cbb(&Graph::empty(0).unwrap()), Some(spec("")));
        assert_eq!(is_join_of_cbb(&Graph::complete(3).unwrap()), None);
        for s in join_specs_up_to(12) {
            assert_eq!(is_join_of_cbb(&make_join(&s)), Some(s.clone()), "{s}");
        }
    }

    #[test]
    fn recognises_cjoins() {
        for s in join_specs_up_to(10) {
            assert_eq!(is_cjoin_of_cbb(&make_cjoin_trigraph(&s)), Some(s.clone()), "{s}");
        }
        let path = Trigraph::from_edges(3, &[], &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(is_cjoin_of_cbb(&path), None);
        // K4 matching with one cross pair demoted to a non-edge.
        let t = Trigraph::from_edges(4, &[(0, 2), (0, 3), (1, 2)], &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(is_cjoin_of_cbb(&t), None);
        assert_eq!(is_cjoin_of_cbb(&Trigraph::empty(1).unwrap()), None);
    }

    #[test]
    fn spec_enumeration() {
        let specs = join_specs_up_to(6);
        let shown: Vec<String> = specs.iter().map(|s| s.to_string()).collect();
        assert_eq!(shown, ["", "1", "2", "1,1", "3", "2,1", "1,1,1"]);
    }

    #[test]
    fn local_conditions_examples() {
        assert!(check_local_conditions(&make_cjoin_trigraph(&spec("1,1"))).all);
        assert!(check_local_conditions(&make_cjoin_trigraph(&spec("2,1"))).all);
        let path = Trigraph::from_edges(3, &[], &[(0, 1), (1, 2)]).unwrap();
        let lc = check_local_conditions(&path);
        assert!(!lc.cond3 && !lc.all);
    }

    #[test]
    fn tightness_on_cjoins() {
        for s in join_specs_up_to(8) {
            assert!(check_tightness_conditions(&make_cjoin_trigraph(&s)).all(), "{s}");
        }
        let path = Trigraph::from_edges(3, &[], &[(0, 1), (1, 2)]).unwrap();
        assert!(!check_tightness_conditions(&path).equal_s_degrees);
    }

    #[test]
    fn join_identity_examples() {
        let id = verify_join_identities(&spec("1,1")).unwrap();
        assert_eq!((id.alpha1, id.edges, id.tau_b), (2, 6, 2));
        assert!(id.all());
        let id = verify_join_identities(&spec("2")).unwrap();
        assert_eq!((id.alpha1, id.tau_b), (4, 0));
        let id = verify_join_identities(&spec("2,1")).unwrap();
        assert_eq!((id.alpha1, id.edges, id.tau_b), (5, 13, 4));
        assert!(id.all());
    }
}
