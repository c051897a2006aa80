//! Triangle-free trigraphs.
//!
//! A trigraph is a vertex set `0..n` with two disjoint symmetric irreflexive
//! relations: plain edges `C` and triangle-independent edges `S`. It is
//! *triangle-free* when any two `S`-neighbours of a common vertex are
//! non-adjacent in `C ∪ S`. Every pair of distinct vertices therefore carries
//! exactly one [`EdgeLabel`], and the diagonal is labelled `N`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::de::{self, DeserializeSeed, MapAccess, SeqAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::{bit, bits, full_mask, Vertex, MAX_VERTICES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum EdgeLabel {
    C,
    S,
    N,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ViolationKind {
    Loop,
    Asymmetry,
    Overlap,
    Triangle,
}

/// One broken trigraph invariant together with the vertices witnessing it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub vertices: Vec<Vertex>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ViolationKind::Loop => "loop",
            ViolationKind::Asymmetry => "asymmetry",
            ViolationKind::Overlap => "overlap",
            ViolationKind::Triangle => "triangle",
        };
        let vs: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        write!(f, "{kind} violation at ({})", vs.join(","))
    }
}

/// An arbitrary `(n, C, S)` triple that has not been checked yet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrigraphCandidate {
    n: usize,
    c: Vec<u64>,
    s: Vec<u64>,
}

impl TrigraphCandidate {
    /// Raw bit rows; row `u` bit `v` set means `uv` is in the relation.
    /// Rows need not be symmetric or irreflexive, which is what
    /// [`validate`](Self::validate) is for.
    pub fn from_rows(n: usize, c: Vec<u64>, s: Vec<u64>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        assert!(c.len() == n && s.len() == n, "one row per vertex");
        let full = full_mask(n);
        if let Some(u) = (0..n).find(|&u| (c[u] | s[u]) & !full != 0) {
            let row = c[u] | s[u];
            let vertex = (64 - row.leading_zeros() - 1) as usize;
            return Err(Error::VertexOutOfRange { vertex, n });
        }
        Ok(TrigraphCandidate { n, c, s })
    }

    /// Symmetric candidate from unordered edge lists. Loops are accepted here
    /// and reported by `validate`.
    pub fn from_edges(n: usize, c_edges: &[(Vertex, Vertex)], s_edges: &[(Vertex, Vertex)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let mut c = vec![0u64; n];
        let mut s = vec![0u64; n];
        for (rows, edges) in [(&mut c, c_edges), (&mut s, s_edges)] {
            for &(u, v) in edges {
                for x in [u, v] {
                    if x >= n {
                        return Err(Error::VertexOutOfRange { vertex: x, n });
                    }
                }
                rows[u] |= bit(v);
                rows[v] |= bit(u);
            }
        }
        Ok(TrigraphCandidate { n, c, s })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Every violated invariant; empty means the candidate is a valid
    /// triangle-free trigraph.
    pub fn validate(&self) -> Vec<Violation> {
        let n = self.n;
        let mut loops = BTreeSet::new();
        let mut asym = BTreeSet::new();
        let mut overlap = BTreeSet::new();
        let mut triangles = BTreeSet::new();
        for u in 0..n {
            if (self.c[u] | self.s[u]) & bit(u) != 0 {
                loops.insert(vec![u]);
            }
            for rows in [&self.c, &self.s] {
                for v in bits(rows[u]) {
                    if rows[v] & bit(u) == 0 {
                        asym.insert(vec![u.min(v), u.max(v)]);
                    }
                }
            }
            for v in bits(self.c[u] & self.s[u]) {
                overlap.insert(vec![u.min(v), u.max(v)]);
            }
            let sn = self.s[u] & !bit(u);
            for v in bits(sn) {
                let adjacent = (self.c[v] | self.s[v]) & sn & !full_mask(v + 1) & !bit(v);
                for w in bits(adjacent) {
                    let mut t = vec![u, v, w];
                    t.sort_unstable();
                    triangles.insert(t);
                }
            }
        }
        let tag = |kind| move |vertices| Violation { kind, vertices };
        loops
            .into_iter()
            .map(tag(ViolationKind::Loop))
            .chain(asym.into_iter().map(tag(ViolationKind::Asymmetry)))
            .chain(overlap.into_iter().map(tag(ViolationKind::Overlap)))
            .chain(triangles.into_iter().map(tag(ViolationKind::Triangle)))
            .collect()
    }

    pub fn into_trigraph(self) -> Result<Trigraph> {
        let violations = self.validate();
        if violations.is_empty() {
            Ok(Trigraph {
                n: self.n,
                c: self.c,
                s: self.s,
            })
        } else {
            Err(Error::InvalidTrigraph(violations))
        }
    }
}

impl TryFrom<TrigraphCandidate> for Trigraph {
    type Error = Error;

    fn try_from(candidate: TrigraphCandidate) -> Result<Self> {
        candidate.into_trigraph()
    }
}

/// Free-function form of [`TrigraphCandidate::validate`].
pub fn validate(candidate: &TrigraphCandidate) -> Vec<Violation> {
    candidate.validate()
}

/// A validated triangle-free trigraph. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Trigraph {
    n: usize,
    c: Vec<u64>,
    s: Vec<u64>,
}

impl Trigraph {
    pub fn empty(n: usize) -> Result<Self> {
        TrigraphCandidate::from_edges(n, &[], &[])?.into_trigraph()
    }

    pub fn from_edges(n: usize, c_edges: &[(Vertex, Vertex)], s_edges: &[(Vertex, Vertex)]) -> Result<Self> {
        TrigraphCandidate::from_edges(n, c_edges, s_edges)?.into_trigraph()
    }

    /// The trigraph `(V(g), E(g) - S, S)`. Fails if `S` is not a subset of
    /// `E(g)` or if some triangle of `g` has two edges in `S`.
    pub fn from_graph_and_tis(g: &Graph, s_edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let n = g.n();
        let mut s = vec![0u64; n];
        for &(u, v) in s_edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if !g.has_edge(u, v) {
                return Err(Error::EdgeNotInGraph(u.min(v), u.max(v)));
            }
            s[u] |= bit(v);
            s[v] |= bit(u);
        }
        for [a, b, c] in g.triangles() {
            let inside = [(a, b), (a, c), (b, c)]
                .iter()
                .filter(|&&(x, y)| s[x] & bit(y) != 0)
                .count();
            if inside >= 2 {
                return Err(Error::NotTriangleIndependent([a, b, c]));
            }
        }
        let c = (0..n).map(|u| g.neighbors(u) & !s[u]).collect();
        Ok(Trigraph { n, c, s })
    }

    /// `(V(g), ∅, E(g))`; valid exactly when `g` is triangle-free.
    pub fn from_triangle_free_graph(g: &Graph) -> Result<Self> {
        Trigraph::from_graph_and_tis(g, &g.edges())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn c_row(&self, u: Vertex) -> u64 {
        self.c[u]
    }

    pub fn s_row(&self, u: Vertex) -> u64 {
        self.s[u]
    }

    /// Row of `C ∪ S`.
    pub fn edge_row(&self, u: Vertex) -> u64 {
        self.c[u] | self.s[u]
    }

    /// Row of the non-edge relation, which contains `u` itself.
    pub fn nonedge_row(&self, u: Vertex) -> u64 {
        !(self.c[u] | self.s[u]) & full_mask(self.n)
    }

    #[inline]
    pub(crate) fn sv(&self, u: Vertex, v: Vertex) -> i64 {
        ((self.s[u] >> v) & 1) as i64
    }

    #[inline]
    pub(crate) fn cv(&self, u: Vertex, v: Vertex) -> i64 {
        ((self.c[u] >> v) & 1) as i64
    }

    /// Characteristic function of non-edges, `n(vv) = 1`.
    #[inline]
    pub(crate) fn nv(&self, u: Vertex, v: Vertex) -> i64 {
        1 - self.cv(u, v) - self.sv(u, v)
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn label(&self, u: Vertex, v: Vertex) -> Result<EdgeLabel> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(if self.s[u] & bit(v) != 0 {
            EdgeLabel::S
        } else if self.c[u] & bit(v) != 0 {
            EdgeLabel::C
        } else {
            EdgeLabel::N
        })
    }

    pub fn is_s_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.s[u] & bit(v) != 0
    }

    pub fn s_degree(&self, u: Vertex) -> usize {
        self.s[u].count_ones() as usize
    }

    pub fn s_count(&self) -> usize {
        self.s.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn c_count(&self) -> usize {
        self.c.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    fn pairs(rows: &[u64]) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for (u, &row) in rows.iter().enumerate() {
            out.extend(bits(row & !full_mask(u + 1)).map(|v| (u, v)));
        }
        out
    }

    pub fn s_edges(&self) -> Vec<(Vertex, Vertex)> {
        Self::pairs(&self.s)
    }

    pub fn c_edges(&self) -> Vec<(Vertex, Vertex)> {
        Self::pairs(&self.c)
    }

    /// Ordered pairs `(u, v)` with `uv ∈ S`, lexicographic.
    pub fn ordered_s_pairs(&self) -> Vec<(Vertex, Vertex)> {
        (0..self.n).flat_map(|u| bits(self.s[u]).map(move |v| (u, v))).collect()
    }

    pub fn s_graph(&self) -> Graph {
        Graph::from_rows(self.n, self.s.clone())
    }

    /// The graph `(V, C ∪ S)`.
    pub fn underlying_graph(&self) -> Graph {
        Graph::from_rows(self.n, (0..self.n).map(|u| self.edge_row(u)).collect())
    }

    /// Induced subtrigraph on `vertices`, relabelled `0..|Z|` in ascending
    /// order of the original ids. Duplicates in `vertices` are ignored.
    pub fn induced(&self, vertices: &[Vertex]) -> Result<Trigraph> {
        let mut mask = 0u64;
        for &v in vertices {
            self.check_vertex(v)?;
            mask |= bit(v);
        }
        Ok(self.induced_mask(mask))
    }

    pub(crate) fn induced_mask(&self, mask: u64) -> Trigraph {
        let keep: Vec<Vertex> = bits(mask).collect();
        let squeeze = |row: u64| -> u64 {
            keep.iter()
                .enumerate()
                .filter(|&(_, &v)| row & bit(v) != 0)
                .fold(0, |acc, (i, _)| acc | bit(i))
        };
        Trigraph {
            n: keep.len(),
            c: keep.iter().map(|&v| squeeze(self.c[v])).collect(),
            s: keep.iter().map(|&v| squeeze(self.s[v])).collect(),
        }
    }

    /// The trigraph with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[Vertex]) -> Trigraph {
        assert_eq!(perm.len(), self.n, "permutation length must match vertex count");
        let mut c = vec![0u64; self.n];
        let mut s = vec![0u64; self.n];
        for u in 0..self.n {
            for v in bits(self.c[u]) {
                c[perm[u]] |= bit(perm[v]);
            }
            for v in bits(self.s[u]) {
                s[perm[u]] |= bit(perm[v]);
            }
        }
        Trigraph { n: self.n, c, s }
    }

    pub fn to_candidate(&self) -> TrigraphCandidate {
        TrigraphCandidate {
            n: self.n,
            c: self.c.clone(),
            s: self.s.clone(),
        }
    }

    /// Compact JSON: `{"n":..,"C":[[u,v],..],"S":[[u,v],..]}` with sorted
    /// pairs `u < v`.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Doc {
            n: usize,
            #[serde(rename = "C")]
            c: Vec<(Vertex, Vertex)>,
            #[serde(rename = "S")]
            s: Vec<(Vertex, Vertex)>,
        }
        serde_json::to_string(&Doc {
            n: self.n,
            c: self.c_edges(),
            s: self.s_edges(),
        })
        .expect("serializing plain integers cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Trigraph> {
        parse_trigraph_json(text)?.into_trigraph()
    }
}

/// Strict reader for the trigraph JSON format. Syntax, unknown or duplicate
/// keys, pairs with `u >= v`, out-of-range ids and duplicate pairs are parse
/// errors carrying a line number. Semantic invariants (overlap, triangles)
/// are left for [`TrigraphCandidate::validate`].
pub fn parse_trigraph_json(text: &str) -> Result<TrigraphCandidate> {
    let mut de = serde_json::Deserializer::from_str(text);
    let doc = RawDoc::deserialize(&mut de).and_then(|doc| de.end().map(|_| doc));
    let doc = doc.map_err(|e| Error::parse(e.line().max(1), strip_position(&e.to_string())))?;
    TrigraphCandidate::from_edges(doc.n, &doc.c, &doc.s)
}

fn strip_position(message: &str) -> String {
    match message.rfind(" at line ") {
        Some(i) => message[..i].to_string(),
        None => message.to_string(),
    }
}

struct RawDoc {
    n: usize,
    c: Vec<(Vertex, Vertex)>,
    s: Vec<(Vertex, Vertex)>,
}

impl<'de> Deserialize<'de> for RawDoc {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        deserializer.deserialize_map(DocVisitor)
    }
}

struct DocVisitor;

impl<'de> Visitor<'de> for DocVisitor {
    type Value = RawDoc;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str(r#"an object {"n": int, "C": [[u,v],...], "S": [[u,v],...]}"#)
    }

    fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> std::result::Result<RawDoc, A::Error> {
        let mut n: Option<usize> = None;
        let mut c: Option<Vec<(Vertex, Vertex)>> = None;
        let mut s: Option<Vec<(Vertex, Vertex)>> = None;
        while let Some(key) = map.next_key::<String>()? {
            match key.as_str() {
                "n" => {
                    if n.is_some() {
                        return Err(de::Error::duplicate_field("n"));
                    }
                    let value: usize = map.next_value()?;
                    if value > MAX_VERTICES {
                        return Err(de::Error::custom(format!(
                            "{value} vertices exceeds the supported maximum of {MAX_VERTICES}"
                        )));
                    }
                    n = Some(value);
                }
                "C" | "S" => {
                    let slot = if key == "C" { &mut c } else { &mut s };
                    if slot.is_some() {
                        return Err(de::Error::custom(format!("duplicate field `{key}`")));
                    }
                    *slot = Some(map.next_value_seed(EdgeListSeed { n })?);
                }
                other => return Err(de::Error::unknown_field(other, &["n", "C", "S"])),
            }
        }
        let n = n.ok_or_else(|| de::Error::missing_field("n"))?;
        let c = c.ok_or_else(|| de::Error::missing_field("C"))?;
        let s = s.ok_or_else(|| de::Error::missing_field("S"))?;
        // Lists that preceded "n" could not be range-checked inline.
        if let Some(&(u, v)) = c.iter().chain(&s).find(|&&(_, v)| v >= n) {
            return Err(de::Error::custom(format!(
                "pair [{u},{v}] has an endpoint outside 0..{n}"
            )));
        }
        Ok(RawDoc { n, c, s })
    }
}

struct EdgeListSeed {
    n: Option<usize>,
}

impl<'de> DeserializeSeed<'de> for EdgeListSeed {
    type Value = Vec<(Vertex, Vertex)>;

    fn deserialize<D: Deserializer<'de>>(self, deserializer: D) -> std::result::Result<Self::Value, D::Error> {
        deserializer.deserialize_seq(self)
    }
}

impl<'de> Visitor<'de> for EdgeListSeed {
    type Value = Vec<(Vertex, Vertex)>;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a list of vertex pairs [u, v]")
    }

    fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<Self::Value, A::Error> {
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        while let Some((u, v)) = seq.next_element::<(Vertex, Vertex)>()? {
            if u >= v {
                return Err(de::Error::custom(format!("pair [{u},{v}] must satisfy u < v")));
            }
            if let Some(n) = self.n {
                if v >= n {
                    return Err(de::Error::custom(format!(
                        "pair [{u},{v}] has an endpoint outside 0..{n}"
                    )));
                }
            }
            if !seen.insert((u, v)) {
                return Err(de::Error::custom(format!("duplicate pair [{u},{v}]")));
            }
            out.push((u, v));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Trigraph {
        Trigraph::from_edges(3, &[], &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn validate_examples() {
        let ok = TrigraphCandidate::from_edges(3, &[], &[(0, 1), (1, 2)]).unwrap();
        assert!(ok.validate().is_empty());

        let tri = TrigraphCandidate::from_edges(3, &[(1, 2)], &[(0, 1), (0, 2)]).unwrap();
        assert_eq!(
            tri.validate(),
            vec![Violation {
                kind: ViolationKind::Triangle,
                vertices: vec![0, 1, 2]
            }]
        );

        let overlap = TrigraphCandidate::from_edges(2, &[(0, 1)], &[(0, 1)]).unwrap();
        assert_eq!(
            overlap.validate(),
            vec![Violation {
                kind: ViolationKind::Overlap,
                vertices: vec![0, 1]
            }]
        );
    }

    #[test]
    fn validate_reports_loops_and_asymmetry() {
        let cand = TrigraphCandidate::from_rows(3, vec![0b010, 0, 0], vec![0, 0b010, 0]).unwrap();
        let kinds: Vec<_> = cand.validate().into_iter().map(|v| (v.kind, v.vertices)).collect();
        assert_eq!(
            kinds,
            vec![(ViolationKind::Loop, vec![1]), (ViolationKind::Asymmetry, vec![0, 1]),]
        );
        assert!(matches!(cand.into_trigraph(), Err(Error::InvalidTrigraph(_))));
    }

    #[test]
    fn all_s_triangle_is_reported_once() {
        let cand = TrigraphCandidate::from_edges(3, &[], &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(cand.validate().len(), 1);
    }

    #[test]
    fn from_graph_and_tis_examples() {
        let k3 = Graph::complete(3).unwrap();
        let t = Trigraph::from_graph_and_tis(&k3, &[(0, 1)]).unwrap();
        assert_eq!(t.s_edges(), vec![(0, 1)]);
        assert_eq!(t.c_edges(), vec![(0, 2), (1, 2)]);

        assert!(matches!(
            Trigraph::from_graph_and_tis(&k3, &[(0, 1), (0, 2)]),
            Err(Error::NotTriangleIndependent([0, 1, 2]))
        ));

        let c5 = Graph::cycle(5).unwrap();
        let t = Trigraph::from_graph_and_tis(&c5, &c5.edges()).unwrap();
        assert_eq!(t.c_count(), 0);
        assert_eq!(t.s_count(), 5);

        let p = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(matches!(
            Trigraph::from_graph_and_tis(&p, &[(1, 2)]),
            Err(Error::EdgeNotInGraph(1, 2))
        ));
    }

    #[test]
    fn labels_follow_diagonal_convention() {
        let t = path3();
        assert_eq!(t.label(0, 1).unwrap(), EdgeLabel::S);
        assert_eq!(t.label(0, 2).unwrap(), EdgeLabel::N);
        assert_eq!(t.label(1, 1).unwrap(), EdgeLabel::N);
        assert_eq!(t.nv(1, 1), 1);
        assert!(t.label(0, 3).is_err());
    }

    #[test]
    fn induced_examples() {
        let t = path3();
        let sub = t.induced(&[0, 2]).unwrap();
        assert_eq!(sub.n(), 2);
        assert_eq!(sub.s_count() + sub.c_count(), 0);

        let k4m = Trigraph::from_edges(4, &[(0, 2), (0, 3), (1, 2), (1, 3)], &[(0, 1), (2, 3)]).unwrap();
        let sub = k4m.induced(&[0, 1]).unwrap();
        assert_eq!(sub.s_edges(), vec![(0, 1)]);
        assert_eq!(sub.c_count(), 0);

        assert_eq!(t.induced(&[]).unwrap().n(), 0);
        assert!(t.induced(&[5]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let t = Trigraph::from_edges(4, &[(0, 2), (0, 3), (1, 2), (1, 3)], &[(0, 1), (2, 3)]).unwrap();
        let text = t.to_json();
        assert_eq!(text, r#"{"n":4,"C":[[0,2],[0,3],[1,2],[1,3]],"S":[[0,1],[2,3]]}"#);
        assert_eq!(Trigraph::from_json(&text).unwrap(), t);
    }

    #[test]
    fn json_errors_carry_line_numbers() {
        let cases = [
            ("{\n\"n\": 3,\n\"C\": [],\n\"S\": [[1,0]]\n}", 4),
            ("{\n\"n\": 3,\n\"C\": [[0,5]],\n\"S\": []\n}", 3),
            ("{\n\"n\": 3,\n\"C\": [[0,1],\n[0,1]],\n\"S\": []\n}", 4),
            ("{\n\"n\": 3,\n\"C\": [],\n\"S\": [],\n\"x\": 1\n}", 5),
            ("{\n\"n\": 3,\n\"C\": []\n}", 4),
            ("{\n\"n\": 3,\n\"C\": [[0,1,2]],\n\"S\": []\n}", 3),
            ("{\"n\": 3, \"C\": [], \"S\": []}\n{}", 2),
        ];
        for (text, line) in cases {
            match parse_trigraph_json(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "input {text:?}"),
                other => panic!("expected parse error for {text:?}, got {other:?}"),
            }
        }
    }

    #[test]
    fn json_range_check_when_n_comes_last() {
        let text = r#"{"C": [[0, 7]], "S": [], "n": 3}"#;
        assert!(matches!(parse_trigraph_json(text), Err(Error::Parse { .. })));
        let text = r#"{"C": [[0, 2]], "S": [], "n": 3}"#;
        assert!(parse_trigraph_json(text).is_ok());
    }

    #[test]
    fn overlap_survives_parsing_for_validation() {
        let cand = parse_trigraph_json(r#"{"n":2,"C":[[0,1]],"S":[[0,1]]}"#).unwrap();
        assert_eq!(cand.validate()[0].kind, ViolationKind::Overlap);
    }
}
