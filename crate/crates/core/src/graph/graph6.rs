//! graph6 encoding of simple undirected graphs.
//!
//! The order is written as one byte `n + 63` for `n <= 62`, otherwise as
//! `~` followed by three 6-bit bytes. The upper triangle follows column by
//! column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed six bits per byte,
//! most significant bit first, zero padded, each byte offset by 63.

use super::{Graph, VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

pub const HEADER: &str = ">>graph6<<";

pub fn write(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Parses one graph6 line. An optional `>>graph6<<` header and a single
/// trailing newline are accepted; anything else after the edge bytes is an
/// error.
pub fn read(text: &str) -> Result<Graph> {
    let body = text.strip_prefix(HEADER).unwrap_or(text);
    let body = body
        .strip_suffix('\n')
        .map(|b| b.strip_suffix('\r').unwrap_or(b))
        .unwrap_or(body);
    let bytes = body.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("invalid byte 0x{b:02x}")));
    }
    let (n, rest) = match bytes.first() {
        None => return Err(Error::Graph6("empty input".into())),
        Some(b'~') => {
            if bytes.get(1) == Some(&b'~') {
                return Err(Error::Graph6(format!("order exceeds {MAX_VERTICES}")));
            }
            if bytes.len() < 4 {
                return Err(Error::Graph6("truncated order header".into()));
            }
            let n = bytes[1..4]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            if n <= 62 {
                return Err(Error::Graph6("non-canonical long order header".into()));
            }
            (n, &bytes[4..])
        }
        Some(&b) => ((b - 63) as usize, &bytes[1..]),
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::Graph6(format!("order {n} out of range 1..={MAX_VERTICES}")));
    }
    let nbits = n * (n - 1) / 2;
    let need = nbits.div_ceil(6);
    if rest.len() < need {
        return Err(Error::Graph6(format!(
            "expected {need} edge bytes, found {}",
            rest.len()
        )));
    }
    if rest.len() > need {
        return Err(Error::Graph6("trailing garbage".into()));
    }
    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let pad = 6 - nbits % 6;
        if (rest[need - 1] - 63) & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Graph::from_adjacency(adj)
}
