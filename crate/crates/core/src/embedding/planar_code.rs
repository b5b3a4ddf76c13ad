//! plantri-compatible `planar_code` for orders below 128.
//!
//! Stream: optional header `>>planar_code<<`, then for each graph one byte
//! with the order `n`, followed for each vertex `1..=n` by its neighbors
//! (1-based) in clockwise order and a terminating zero byte.

use std::io::{self, Read, Write};

use super::PlaneTriangulation;
use crate::error::{Error, Result};

pub const HEADER: &[u8] = b">>planar_code<<";

/// Largest order representable with single-byte entries in this codec.
pub const MAX_ORDER: usize = 127;

pub fn encode_one(t: &PlaneTriangulation, out: &mut Vec<u8>) -> Result<()> {
    let n = t.order();
    if n > MAX_ORDER {
        return Err(Error::PlanarCode(format!("order {n} needs the multi-byte format")));
    }
    out.reserve(1 + 2 * t.edge_count() + n);
    out.push(n as u8);
    for v in 0..n {
        out.extend(t.rotation(v).iter().map(|&u| (u + 1) as u8));
        out.push(0);
    }
    Ok(())
}

/// Header followed by every triangulation.
pub fn write(ts: &[PlaneTriangulation]) -> Result<Vec<u8>> {
    let mut out = HEADER.to_vec();
    for t in ts {
        encode_one(t, &mut out)?;
    }
    Ok(out)
}

pub fn read(bytes: &[u8]) -> Result<Vec<PlaneTriangulation>> {
    let mut reader = Reader::new(bytes);
    let mut out = Vec::new();
    while let Some(t) = reader.next_graph()? {
        out.push(t);
    }
    Ok(out)
}

/// Incremental decoder over an in-memory buffer.
pub struct Reader<'a> {
    bytes: &'a [u8],
    at: usize,
}

impl<'a> Reader<'a> {
    pub fn new(bytes: &'a [u8]) -> Self {
        let at = if bytes.starts_with(HEADER) { HEADER.len() } else { 0 };
        Reader { bytes, at }
    }

    pub fn next_graph(&mut self) -> Result<Option<PlaneTriangulation>> {
        let Some(&n) = self.bytes.get(self.at) else {
            return Ok(None);
        };
        let start = self.at;
        self.at += 1;
        let n = n as usize;
        if n == 0 || n > MAX_ORDER {
            return Err(Error::PlanarCode(format!(
                "graph at byte {start}: order {n} unsupported (must be 1..={MAX_ORDER})"
            )));
        }
        let mut rotation = Vec::with_capacity(n);
        for v in 0..n {
            let mut nbrs = Vec::new();
            loop {
                let Some(&b) = self.bytes.get(self.at) else {
                    return Err(Error::PlanarCode(format!(
                        "truncated stream in graph at byte {start}, vertex {}",
                        v + 1
                    )));
                };
                self.at += 1;
                if b == 0 {
                    break;
                }
                let u = b as usize;
                if u > n {
                    return Err(Error::PlanarCode(format!(
                        "neighbor {u} out of range for order {n}"
                    )));
                }
                nbrs.push(u - 1);
            }
            rotation.push(nbrs);
        }
        PlaneTriangulation::new(rotation).map(Some)
    }
}

impl Iterator for Reader<'_> {
    type Item = Result<PlaneTriangulation>;

    fn next(&mut self) -> Option<Self::Item> {
        self.next_graph().transpose()
    }
}

pub fn read_from<R: Read>(mut r: R) -> Result<Vec<PlaneTriangulation>> {
    let mut buf = Vec::new();
    r.read_to_end(&mut buf)?;
    read(&buf)
}

/// Streams triangulations to `w`, writing the header first.
pub struct StreamWriter<W: Write> {
    inner: W,
    buf: Vec<u8>,
}

impl<W: Write> StreamWriter<W> {
    pub fn new(mut inner: W) -> io::Result<Self> {
        inner.write_all(HEADER)?;
        Ok(StreamWriter { inner, buf: Vec::new() })
    }

    pub fn write(&mut self, t: &PlaneTriangulation) -> Result<()> {
        self.buf.clear();
        encode_one(t, &mut self.buf)?;
        self.inner.write_all(&self.buf)?;
        Ok(())
    }

    pub fn finish(mut self) -> io::Result<W> {
        self.inner.flush()?;
        Ok(self.inner)
    }
}
