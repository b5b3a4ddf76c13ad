//! Canonical codes for embedded triangulations.
//!
//! For a root dart `(v, w)` and an orientation, vertices are numbered in
//! breadth-first order starting with `v = 1`. Each vertex is then listed in
//! numbering order as the numbers of its neighbors, read around its rotation
//! starting from the edge it was discovered through (`w` for the root),
//! followed by a `0`. The canonical code is the lexicographic minimum over
//! every root dart and both orientations, so it is invariant under
//! relabeling and reflection.
//!
//! Every code starts with `2, 3, ..., deg(v) + 1, 0`, so only roots at a
//! vertex of minimum degree can attain the minimum; the others are skipped.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{position_table, PlaneTriangulation};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn from_bytes(bytes: Vec<u8>) -> Self {
        CanonicalCode(bytes)
    }

    /// Order of the encoded triangulation (number of zero terminators).
    pub fn order(&self) -> usize {
        self.0.iter().filter(|&&b| b == 0).count()
    }

    /// Rebuilds the canonically labeled triangulation: vertex `i` of the
    /// result is the vertex numbered `i + 1` by the code.
    pub fn decode(&self) -> Result<PlaneTriangulation> {
        let mut rotation = Vec::new();
        let mut cur = Vec::new();
        for &b in &self.0 {
            if b == 0 {
                rotation.push(std::mem::take(&mut cur));
            } else {
                cur.push(b as usize - 1);
            }
        }
        if !cur.is_empty() {
            return Err(Error::Format("canonical code missing final terminator".into()));
        }
        PlaneTriangulation::new(rotation)
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode(")?;
        for (i, b) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct CanonicalForm {
    pub code: CanonicalCode,
    /// `relabel[v]` is the canonical index of original vertex `v`.
    pub relabel: Vec<usize>,
    /// Whether the minimizing orientation was the reversed one.
    pub reflected: bool,
    /// Number of (root dart, orientation) pairs attaining the minimum, which
    /// equals the size of the automorphism group including reflections.
    pub automorphisms: usize,
}

impl CanonicalForm {
    pub fn triangulation(&self) -> PlaneTriangulation {
        self.code.decode().expect("canonical code decodes")
    }
}

struct Search<'a> {
    t: &'a PlaneTriangulation,
    pos: Vec<u8>,
    best: Vec<u8>,
    buf: Vec<u8>,
    number: Vec<u8>,
    first: Vec<u8>,
    queue: Vec<usize>,
    best_root: Option<(usize, usize, bool)>,
    ties: usize,
}

impl<'a> Search<'a> {
    fn new(t: &'a PlaneTriangulation) -> Self {
        let n = t.order();
        let len = 2 * t.edge_count() + n;
        Search {
            t,
            pos: position_table(t.rotations()),
            best: Vec::with_capacity(len),
            buf: vec![0; len],
            number: vec![0; n],
            first: vec![0; n],
            queue: Vec::with_capacity(n),
            best_root: None,
            ties: 0,
        }
    }

    fn run(&mut self) {
        let n = self.t.order();
        let min_degree = (0..n).map(|v| self.t.degree(v)).min().unwrap_or(0);
        for v in 0..n {
            if self.t.degree(v) != min_degree {
                continue;
            }
            for i in 0..self.t.degree(v) {
                for reversed in [false, true] {
                    self.try_root(v, i, reversed);
                }
            }
        }
    }

    /// Encodes from root dart `(v, rotation[v][start])`, aborting as soon as
    /// the code exceeds the best one found so far.
    fn try_root(&mut self, v: usize, start: usize, reversed: bool) {
        let n = self.t.order();
        let rot = self.t.rotations();
        self.number.iter_mut().for_each(|x| *x = 0);
        self.queue.clear();
        self.number[v] = 1;
        self.first[v] = start as u8;
        self.queue.push(v);
        let mut next_number = 2u8;
        let mut state = if self.best.is_empty() {
            Ordering::Less
        } else {
            Ordering::Equal
        };
        let mut k = 0;
        let mut head = 0;
        while head < self.queue.len() {
            let x = self.queue[head];
            head += 1;
            let nbrs = &rot[x];
            let d = nbrs.len();
            let f = self.first[x] as usize;
            for step in 0..=d {
                let c = if step == d {
                    0
                } else {
                    let idx = if reversed { (f + d - step) % d } else { (f + step) % d };
                    let y = nbrs[idx];
                    if self.number[y] == 0 {
                        self.number[y] = next_number;
                        next_number += 1;
                        self.first[y] = self.pos[y * n + x];
                        self.queue.push(y);
                    }
                    self.number[y]
                };
                if state == Ordering::Equal {
                    match c.cmp(&self.best[k]) {
                        Ordering::Greater => return,
                        Ordering::Less => state = Ordering::Less,
                        Ordering::Equal => {}
                    }
                }
                self.buf[k] = c;
                k += 1;
            }
        }
        match state {
            Ordering::Less => {
                self.best.clear();
                self.best.extend_from_slice(&self.buf[..k]);
                self.best_root = Some((v, start, reversed));
                self.ties = 1;
            }
            Ordering::Equal => self.ties += 1,
            Ordering::Greater => unreachable!(),
        }
    }

    fn relabel_for(&mut self, root: (usize, usize, bool)) -> Vec<usize> {
        let (v, start, reversed) = root;
        let n = self.t.order();
        let rot = self.t.rotations();
        let mut number = vec![0usize; n];
        let mut first = vec![0usize; n];
        let mut queue = vec![v];
        number[v] = 1;
        first[v] = start;
        let mut next = 2;
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            let d = rot[x].len();
            for step in 0..d {
                let idx = if reversed { (first[x] + d - step) % d } else { (first[x] + step) % d };
                let y = rot[x][idx];
                if number[y] == 0 {
                    number[y] = next;
                    next += 1;
                    first[y] = self.pos[y * n + x] as usize;
                    queue.push(y);
                }
            }
        }
        number.into_iter().map(|k| k - 1).collect()
    }
}

pub(super) fn canonical_code(t: &PlaneTriangulation) -> CanonicalCode {
    let mut search = Search::new(t);
    search.run();
    CanonicalCode(search.best)
}

pub(super) fn canonical_form(t: &PlaneTriangulation) -> CanonicalForm {
    let mut search = Search::new(t);
    search.run();
    let root = search.best_root.expect("at least one root");
    let relabel = search.relabel_for(root);
    CanonicalForm {
        code: CanonicalCode(std::mem::take(&mut search.best)),
        relabel,
        reflected: root.2,
        automorphisms: search.ties,
    }
}
