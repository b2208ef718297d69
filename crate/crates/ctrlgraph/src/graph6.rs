//! graph6 encoding, short form only (`n <= 62`).
//!
//! One byte `n + 63` gives the order, followed by the upper triangle in
//! column-major order `x(0,1), x(0,2), x(1,2), x(0,3), ...`, six bits per
//! byte, most significant first, zero padded, each byte offset by 63.

use ctrlgraph_core::Graph;

pub const MAX_ORDER: usize = 62;
const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at position {position} is outside 63..=126")]
    BadCharacter { position: usize, byte: u8 },
    #[error("order {0} needs the long form, which is not supported")]
    TooLarge(usize),
    #[error("expected {expected} bytes for this order, found {found}")]
    BadLength { expected: usize, found: usize },
    #[error("padding bits are not zero")]
    NonzeroPadding,
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Parses one graph6 string. Surrounding whitespace and an optional
/// `>>graph6<<` header are ignored.
pub fn parse(text: &str) -> Result<Graph, Graph6Error> {
    let s = text.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (position, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::BadCharacter { position, byte });
        }
    }
    let n = (bytes[0] - 63) as usize;
    if n > MAX_ORDER {
        return Err(Graph6Error::TooLarge(n));
    }
    let body = &bytes[1..];
    if body.len() != body_len(n) {
        return Err(Graph6Error::BadLength { expected: body_len(n) + 1, found: bytes.len() });
    }
    let bits = body.iter().flat_map(|b| (0..6).rev().map(move |k| (b - 63) >> k & 1 == 1));
    let pairs = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
    let mut g = Graph::empty(n);
    let mut bits = bits.fuse();
    for (i, j) in pairs {
        if bits.next() == Some(true) {
            g.add_edge(i, j).expect("distinct in-range vertices");
        }
    }
    if bits.any(|b| b) {
        return Err(Graph6Error::NonzeroPadding);
    }
    Ok(g)
}

pub fn encode(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("ASCII"))
}
