//! graph6 codec.
//!
//! One graph per ASCII line, bytes 63..=126 only. The size field is the
//! single byte `63 + n` (so `n <= 62`); the upper adjacency triangle follows
//! in column-major order, `x(0,1) x(0,2) x(1,2) x(0,3) ...`, packed
//! big-endian into 6-bit groups with each group offset by 63. Trailing
//! padding bits must be zero.

use thiserror::Error;

use crate::graph::Graph;

/// Largest order encodable with a single-byte size field.
pub const GRAPH6_MAX_ORDER: usize = 62;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("byte {byte:#04x} at position {pos} outside the graph6 range 63..=126")]
    InvalidByte { byte: u8, pos: usize },
    #[error("order {0} exceeds the single-byte graph6 range (max {GRAPH6_MAX_ORDER})")]
    OrderTooLarge(usize),
    #[error("multi-byte size field (order > 62) is not supported")]
    LongFormUnsupported,
    #[error("truncated bit section: need {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing bytes after the bit section")]
    TrailingData,
    #[error("nonzero padding bits")]
    NonzeroPadding,
}

/// Encodes a graph as one graph6 line (no trailing newline).
pub fn encode(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Graph6Error::OrderTooLarge(n));
    }
    let mut out = Vec::with_capacity(2 + n * n.saturating_sub(1) / 12);
    out.push(63 + n as u8);
    let mut acc = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            acc <<= 1;
            if g.has_edge(i, j) {
                acc |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Decodes one graph6 line.
pub fn decode(line: &str) -> Result<Graph, Graph6Error> {
    let data = line.as_bytes();
    if data.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (pos, &byte) in data.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { byte, pos });
        }
    }
    if data[0] == 126 {
        return Err(Graph6Error::LongFormUnsupported);
    }
    let n = (data[0] - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    let body = &data[1..];
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingData);
    }
    let mut g = Graph::empty(n).expect("n <= 62");
    let mut idx = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = body[idx / 6] - 63;
            if byte >> (5 - idx % 6) & 1 == 1 {
                g.add_edge_mut(i, j);
            }
            idx += 1;
            if idx == nbits {
                break 'outer;
            }
        }
    }
    // remaining bits of the last group must be zero padding
    while idx < expected * 6 {
        let byte = body[idx / 6] - 63;
        if byte >> (5 - idx % 6) & 1 == 1 {
            return Err(Graph6Error::NonzeroPadding);
        }
        idx += 1;
    }
    Ok(g)
}
