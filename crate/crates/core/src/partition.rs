use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::trigraph::Trigraph;
use crate::{bit, bits, full_mask, Vertex, MAX_VERTICES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

/// A total two-sided assignment of the vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    n: usize,
    in_b: u64,
}

impl Partition {
    /// Everything on side `A`.
    pub fn all_a(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(Partition { n, in_b: 0 })
    }

    pub fn from_b_mask(n: usize, in_b: u64) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        if in_b & !full_mask(n) != 0 {
            let vertex = (63 - in_b.leading_zeros()) as usize;
            return Err(Error::VertexOutOfRange { vertex, n });
        }
        Ok(Partition { n, in_b })
    }

    pub fn from_sides(sides: &[Side]) -> Result<Self> {
        let mut p = Partition::all_a(sides.len())?;
        for (v, side) in sides.iter().enumerate() {
            if *side == Side::B {
                p.in_b |= bit(v);
            }
        }
        Ok(p)
    }

    /// From a possibly partial assignment; any `None` is an error.
    pub fn from_assignment(assignment: &[Option<Side>]) -> Result<Self> {
        let sides = assignment
            .iter()
            .enumerate()
            .map(|(v, s)| s.ok_or(Error::PartialPartition(v)))
            .collect::<Result<Vec<_>>>()?;
        Partition::from_sides(&sides)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn side(&self, v: Vertex) -> Side {
        assert!(v < self.n, "vertex {v} out of range");
        if self.in_b & bit(v) != 0 {
            Side::B
        } else {
            Side::A
        }
    }

    pub fn sides(&self) -> Vec<Side> {
        (0..self.n).map(|v| self.side(v)).collect()
    }

    pub fn b_mask(&self) -> u64 {
        self.in_b
    }

    pub fn a_mask(&self) -> u64 {
        !self.in_b & full_mask(self.n)
    }

    pub fn a_vertices(&self) -> Vec<Vertex> {
        bits(self.a_mask()).collect()
    }

    pub fn b_vertices(&self) -> Vec<Vertex> {
        bits(self.in_b).collect()
    }

    /// The same cut with the sides exchanged.
    pub fn swapped(&self) -> Partition {
        Partition {
            n: self.n,
            in_b: self.a_mask(),
        }
    }

    fn same_side(&self, v: Vertex) -> u64 {
        if self.in_b & bit(v) != 0 {
            self.in_b
        } else {
            self.a_mask()
        }
    }

    fn check_size(&self, expected: usize) -> Result<()> {
        if self.n != expected {
            Err(Error::PartitionSize { got: self.n, expected })
        } else {
            Ok(())
        }
    }

    /// Edges of `g` with both ends on the same side.
    pub fn inside_edges(&self, g: &Graph) -> Result<usize> {
        self.check_size(g.n())?;
        Ok((0..self.n)
            .map(|v| (g.neighbors(v) & self.same_side(v)).count_ones() as usize)
            .sum::<usize>()
            / 2)
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Sides {
            #[serde(rename = "A")]
            a: Vec<Vertex>,
            #[serde(rename = "B")]
            b: Vec<Vertex>,
        }
        Sides {
            a: self.a_vertices(),
            b: self.b_vertices(),
        }
        .serialize(serializer)
    }
}

/// Edge statistics of a trigraph under a partition.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CutCounts {
    /// `C ∪ S` edges with both ends on one side.
    pub bar_e: usize,
    /// `C ∪ S` edges across the cut.
    pub e_cross: usize,
    pub s_cross: usize,
    pub s_inside_a: usize,
    pub s_inside_b: usize,
}

pub fn cut_counts(t: &Trigraph, p: &Partition) -> Result<CutCounts> {
    p.check_size(t.n())?;
    let a = p.a_mask();
    let b = p.b_mask();
    let mut twice = CutCounts::default();
    for v in 0..t.n() {
        let same = p.same_side(v);
        let other = same ^ full_mask(t.n());
        twice.bar_e += (t.edge_row(v) & same).count_ones() as usize;
        twice.e_cross += (t.edge_row(v) & other).count_ones() as usize;
        twice.s_cross += (t.s_row(v) & other).count_ones() as usize;
        if a & bit(v) != 0 {
            twice.s_inside_a += (t.s_row(v) & a).count_ones() as usize;
        } else {
            twice.s_inside_b += (t.s_row(v) & b).count_ones() as usize;
        }
    }
    Ok(CutCounts {
        bar_e: twice.bar_e / 2,
        e_cross: twice.e_cross / 2,
        s_cross: twice.s_cross / 2,
        s_inside_a: twice.s_inside_a / 2,
        s_inside_b: twice.s_inside_b / 2,
    })
}
