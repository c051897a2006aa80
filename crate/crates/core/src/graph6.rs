//! The graph6 interchange format for graphs with at most 62 vertices.
//!
//! One header byte `63 + n`, then the upper triangle of the adjacency matrix
//! in column order `(0,1), (0,2), (1,2), (0,3), ...`, packed big-endian into
//! 6-bit groups (zero padded), each written as `63 + group`.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const GRAPH6_MAX_VERTICES: usize = 62;

fn check_byte(byte: u8, line: usize) -> Result<u8> {
    if (63..=126).contains(&byte) {
        Ok(byte - 63)
    } else {
        Err(Error::parse(
            line,
            format!("byte 0x{byte:02x} is outside the graph6 range 63..=126"),
        ))
    }
}

/// Parses one graph6 string (surrounding whitespace is ignored).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    parse_line(text.trim(), 1)
}

fn parse_line(text: &str, line: usize) -> Result<Graph> {
    let bytes = text.as_bytes();
    let (&header, body) = bytes
        .split_first()
        .ok_or_else(|| Error::parse(line, "empty graph6 string"))?;
    let n = check_byte(header, line)? as usize;
    if n > GRAPH6_MAX_VERTICES {
        return Err(Error::parse(line, "multi-byte vertex counts are not supported"));
    }
    let bit_count = n * n.saturating_sub(1) / 2;
    let groups = bit_count.div_ceil(6);
    if body.len() < groups {
        return Err(Error::parse(
            line,
            format!("truncated: expected {groups} data bytes, found {}", body.len()),
        ));
    }
    if body.len() > groups {
        return Err(Error::parse(
            line,
            format!("expected {groups} data bytes, found {}", body.len()),
        ));
    }
    let data = body.iter().map(|&b| check_byte(b, line)).collect::<Result<Vec<u8>>>()?;
    let bit_at = |k: usize| data[k / 6] >> (5 - k % 6) & 1 == 1;
    if (bit_count..groups * 6).any(bit_at) {
        return Err(Error::parse(line, "non-zero padding bits"));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit_at(k) {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_VERTICES {
        return Err(Error::SizeLimit {
            what: "graph6",
            limit: GRAPH6_MAX_VERTICES,
            n,
        });
    }
    let mut out = vec![63 + n as u8];
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (group << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Reads a `.g6` file: one graph per line, blank lines skipped. Errors name
/// the offending line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_line(l.trim(), i + 1))
        .collect()
}
