//! Simple undirected graphs on dense vertex ids `0..n`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::{bit, bits, full_mask, Vertex, MAX_VERTICES};

/// A finite simple graph. Adjacency is stored as one `u64` bit row per vertex,
/// so `n` is bounded by [`MAX_VERTICES`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list. Repeated edges are merged; loops and
    /// out-of-range ids are rejected.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            g.adj[u] = full_mask(n) & !bit(u);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    pub(crate) fn from_rows(n: usize, adj: Vec<u64>) -> Self {
        debug_assert_eq!(adj.len(), n);
        Graph { n, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
        Ok(())
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    /// Neighbourhood of `v` as a bit row.
    pub fn neighbors(&self, v: Vertex) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// All edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] & !full_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let full = full_mask(self.n);
        let adj = (0..self.n).map(|u| !self.adj[u] & full & !bit(u)).collect();
        Graph { n: self.n, adj }
    }

    /// Triangles `[a, b, c]` with `a < b < c`, in lexicographic order.
    pub fn triangles(&self) -> Vec<[Vertex; 3]> {
        let mut out = Vec::new();
        for a in 0..self.n {
            let up = self.adj[a] & !full_mask(a + 1);
            for b in bits(up) {
                for c in bits(up & self.adj[b] & !full_mask(b + 1)) {
                    out.push([a, b, c]);
                }
            }
        }
        out
    }

    pub fn is_triangle_free(&self) -> bool {
        (0..self.n).all(|u| bits(self.adj[u]).all(|v| self.adj[u] & self.adj[v] == 0))
    }

    /// Two-colouring by breadth-first search.
    pub fn is_bipartite(&self) -> bool {
        let mut colour: Vec<Option<bool>> = vec![None; self.n];
        for root in 0..self.n {
            if colour[root].is_some() {
                continue;
            }
            colour[root] = Some(false);
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].unwrap();
                for v in bits(self.adj[u]) {
                    match colour[v] {
                        None => {
                            colour[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must match vertex count");
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for v in bits(self.adj[u]) {
                adj[perm[u]] |= bit(perm[v]);
            }
        }
        Graph { n: self.n, adj }
    }

    /// Parses the edge-list format: a header line `n m` followed by exactly
    /// `m` lines `u v`. Blank lines after the last edge are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        let (line_no, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing header line `n m`"))?;
        let (n, m) = parse_pair(header, line_no, "header")?;
        if n > MAX_VERTICES {
            return Err(Error::parse(
                line_no,
                format!("{n} vertices exceeds the supported maximum of {MAX_VERTICES}"),
            ));
        }
        let mut g = Graph::empty(n)?;
        for k in 0..m {
            let (line_no, line) = lines
                .next()
                .ok_or_else(|| Error::parse(line_no + k + 1, format!("expected {m} edges, found {k}")))?;
            let (u, v) = parse_pair(line, line_no, "edge")?;
            if u >= n || v >= n {
                return Err(Error::parse(
                    line_no,
                    format!("edge {u} {v} has an endpoint outside 0..{n}"),
                ));
            }
            if u == v {
                return Err(Error::parse(line_no, format!("self-loop at vertex {u}")));
            }
            if g.has_edge(u, v) {
                return Err(Error::parse(line_no, format!("duplicate edge {u} {v}")));
            }
            g.add_edge(u, v)?;
        }
        for (line_no, line) in lines {
            if !line.trim().is_empty() {
                return Err(Error::parse(line_no, format!("unexpected content after {m} edges")));
            }
        }
        Ok(g)
    }

    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n, edges.len());
        for (u, v) in edges {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }
}

fn parse_pair(line: &str, line_no: usize, what: &str) -> Result<(usize, usize)> {
    let mut fields = line.split_whitespace();
    let mut next = |name: &str| -> Result<usize> {
        let field = fields
            .next()
            .ok_or_else(|| Error::parse(line_no, format!("{what} line is missing {name}")))?;
        field
            .parse::<usize>()
            .map_err(|_| Error::parse(line_no, format!("{what} line: `{field}` is not a non-negative integer")))
    };
    let a = next("the first field")?;
    let b = next("the second field")?;
    if fields.next().is_some() {
        return Err(Error::parse(line_no, format!("{what} line has more than two fields")));
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edges_are_canonical_and_sorted() {
        let g = Graph::from_edges(4, &[(3, 0), (1, 0), (2, 1), (1, 0)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 3), (1, 2)]);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn rejects_loops_and_range() {
        assert!(matches!(Graph::from_edges(3, &[(1, 1)]), Err(Error::SelfLoop(1))));
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(Graph::empty(65).is_err());
    }

    #[test]
    fn triangles_and_bipartiteness() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.triangles().len(), 4);
        assert!(!k4.is_bipartite());
        let c5 = Graph::cycle(5).unwrap();
        assert!(c5.is_triangle_free());
        assert!(!c5.is_bipartite());
        assert!(Graph::cycle(6).unwrap().is_bipartite());
        assert!(Graph::empty(0).unwrap().is_bipartite());
    }

    #[test]
    fn complement_of_k4_is_empty() {
        assert_eq!(Graph::complete(4).unwrap().complement().edge_count(), 0);
        assert_eq!(Graph::cycle(4).unwrap().complement().edges(), vec![(0, 2), (1, 3)]);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::cycle(5).unwrap();
        let text = g.to_edge_list();
        assert_eq!(Graph::parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        let cases = [
            ("", 1),
            ("3 x\n", 1),
            ("3 2\n0 1\n", 3),
            ("3 1\n0 3\n", 2),
            ("3 2\n0 1\n1 0\n", 3),
            ("3 1\n2 2\n", 2),
            ("3 1\n0 1 2\n", 2),
            ("3 1\n0 1\n1 2\n", 3),
        ];
        for (text, line) in cases {
            match Graph::parse_edge_list(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "input {text:?}"),
                other => panic!("expected parse error for {text:?}, got {other:?}"),
            }
        }
        assert!(Graph::parse_edge_list("3 1\n0 1\n\n").is_ok());
    }
}
