//! Isomorph-free generation of plane triangulations.
//!
//! Every triangulation on `n + 1 >= 5` vertices arises from one on `n`
//! vertices by inserting a vertex of degree 3 (into a face), 4 (across an
//! edge) or 5 (into a fan of three consecutive faces). Levels are built
//! breadth-first from the tetrahedron, deduplicated by canonical code.

use std::fmt;

use rayon::prelude::*;

use crate::embedding::{CanonicalCode, Face, PlaneTriangulation};
use crate::error::{Error, Result};

pub const MIN_ORDER: usize = 4;
pub const MAX_ORDER: usize = 14;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExpansionMove {
    /// New vertex inside the face.
    Deg3(Face),
    /// Edge `{a, b}` replaced by a vertex joined to `a`, `b` and both
    /// opposite vertices.
    Deg4 { a: usize, b: usize },
    /// `x1..x4` are four consecutive clockwise neighbors of `apex`, starting
    /// at `first`; the edges `apex-x2` and `apex-x3` are replaced by a vertex
    /// joined to the pentagon `apex, x1, x2, x3, x4`.
    Deg5 { apex: usize, first: usize },
}

impl fmt::Display for ExpansionMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExpansionMove::Deg3(face) => write!(f, "deg3 in face {:?}", face.0),
            ExpansionMove::Deg4 { a, b } => write!(f, "deg4 across {a}-{b}"),
            ExpansionMove::Deg5 { apex, first } => write!(f, "deg5 at {apex} from {first}"),
        }
    }
}

fn index_of(rot: &[usize], x: usize) -> usize {
    rot.iter().position(|&y| y == x).expect("neighbor present")
}

fn insert_after(rot: &mut Vec<usize>, anchor: usize, new: usize) {
    let i = index_of(rot, anchor);
    rot.insert(i + 1, new);
}

fn replace(rot: &mut [usize], old: usize, new: usize) {
    let i = index_of(rot, old);
    rot[i] = new;
}

fn remove(rot: &mut Vec<usize>, x: usize) {
    let i = index_of(rot, x);
    rot.remove(i);
}

pub fn expand_deg3(t: &PlaneTriangulation, f: Face) -> Result<PlaneTriangulation> {
    if !t.is_face(f) {
        let [a, b, c] = f.0;
        return Err(Error::NotAFace(a, b, c));
    }
    let [x, y, z] = f.0;
    let p = t.order();
    let mut rot = t.clone().into_rotations();
    insert_after(&mut rot[y], x, p);
    insert_after(&mut rot[z], y, p);
    insert_after(&mut rot[x], z, p);
    rot.push(vec![x, z, y]);
    Ok(PlaneTriangulation::from_rotation_unchecked(rot))
}

pub fn expand_deg4(t: &PlaneTriangulation, a: usize, b: usize) -> Result<PlaneTriangulation> {
    if !t.has_edge(a, b) {
        return Err(Error::NotAnEdge((a, b)));
    }
    let c = t.successor(b, a).expect("edge");
    let d = t.successor(a, b).expect("edge");
    if c == d {
        return Err(Error::InvalidMove(format!(
            "faces on both sides of {a}-{b} share the apex {c}"
        )));
    }
    let p = t.order();
    let mut rot = t.clone().into_rotations();
    replace(&mut rot[a], b, p);
    replace(&mut rot[b], a, p);
    insert_after(&mut rot[c], b, p);
    insert_after(&mut rot[d], a, p);
    rot.push(vec![a, c, b, d]);
    Ok(PlaneTriangulation::from_rotation_unchecked(rot))
}

fn fan(t: &PlaneTriangulation, apex: usize, first: usize) -> Result<[usize; 4]> {
    if apex >= t.order() || !t.has_edge(apex, first) {
        return Err(Error::NotAnEdge((apex, first)));
    }
    let deg = t.degree(apex);
    if deg < 5 {
        return Err(Error::InvalidMove(format!(
            "apex {apex} has degree {deg}, need at least 5"
        )));
    }
    let rot = t.rotation(apex);
    let i = index_of(rot, first);
    Ok([rot[i], rot[(i + 1) % deg], rot[(i + 2) % deg], rot[(i + 3) % deg]])
}

pub fn expand_deg5(t: &PlaneTriangulation, apex: usize, first: usize) -> Result<PlaneTriangulation> {
    let [x1, x2, x3, x4] = fan(t, apex, first)?;
    let a = apex;
    let p = t.order();
    let mut rot = t.clone().into_rotations();
    remove(&mut rot[a], x3);
    replace(&mut rot[a], x2, p);
    replace(&mut rot[x2], a, p);
    replace(&mut rot[x3], a, p);
    insert_after(&mut rot[x1], x2, p);
    insert_after(&mut rot[x4], a, p);
    rot.push(vec![a, x1, x2, x3, x4]);
    Ok(PlaneTriangulation::from_rotation_unchecked(rot))
}

/// Inverse of [`expand_deg5`]: deletes the degree-5 vertex `v` and fills its
/// pentagonal hole with the two chords from `apex`. Vertices above `v` are
/// renumbered down by one.
pub fn remove_deg5(t: &PlaneTriangulation, v: usize, apex: usize) -> Result<PlaneTriangulation> {
    if v >= t.order() || t.degree(v) != 5 {
        return Err(Error::InvalidMove(format!("vertex {v} does not have degree 5")));
    }
    if !t.has_edge(v, apex) {
        return Err(Error::NotAnEdge((v, apex)));
    }
    let r = t.rotation(v);
    let i = index_of(r, apex);
    let [x1, x2, x3, x4] = [1, 2, 3, 4].map(|k| r[(i + k) % 5]);
    let a = apex;
    if t.has_edge(a, x2) || t.has_edge(a, x3) {
        return Err(Error::InvalidMove(format!("chord from {a} already present")));
    }
    let mut rot = t.clone().into_rotations();
    let at = index_of(&rot[a], v);
    rot[a].splice(at..=at, [x2, x3]);
    remove(&mut rot[x1], v);
    replace(&mut rot[x2], v, a);
    replace(&mut rot[x3], v, a);
    remove(&mut rot[x4], v);
    rot.remove(v);
    for nbrs in &mut rot {
        for u in nbrs.iter_mut() {
            if *u > v {
                *u -= 1;
            }
        }
    }
    PlaneTriangulation::new(rot)
}

/// Every expansion that applies to `t`, in a fixed order: faces, then edges,
/// then fans by apex and starting neighbor.
pub fn moves(t: &PlaneTriangulation) -> Vec<ExpansionMove> {
    let mut out: Vec<ExpansionMove> = t.faces().into_iter().map(ExpansionMove::Deg3).collect();
    for (a, b) in t.edges() {
        if t.successor(b, a) != t.successor(a, b) {
            out.push(ExpansionMove::Deg4 { a, b });
        }
    }
    for apex in 0..t.order() {
        if t.degree(apex) >= 5 {
            for &first in t.rotation(apex) {
                out.push(ExpansionMove::Deg5 { apex, first });
            }
        }
    }
    out
}

pub fn apply(t: &PlaneTriangulation, m: ExpansionMove) -> Result<PlaneTriangulation> {
    match m {
        ExpansionMove::Deg3(f) => expand_deg3(t, f),
        ExpansionMove::Deg4 { a, b } => expand_deg4(t, a, b),
        ExpansionMove::Deg5 { apex, first } => expand_deg5(t, apex, first),
    }
}

/// Canonical codes of all children of `t`, sorted and deduplicated.
pub fn child_codes(t: &PlaneTriangulation) -> Vec<CanonicalCode> {
    let mut codes: Vec<CanonicalCode> = moves(t)
        .into_iter()
        .filter_map(|m| apply(t, m).ok())
        .map(|c| c.canonical_code())
        .collect();
    codes.sort_unstable();
    codes.dedup();
    codes
}

/// One level of the enumeration: all triangulations of a given order,
/// canonically labeled and sorted by canonical code.
#[derive(Debug, Clone)]
pub struct Level {
    pub order: usize,
    pub codes: Vec<CanonicalCode>,
}

impl Level {
    pub fn base() -> Level {
        Level {
            order: MIN_ORDER,
            codes: vec![PlaneTriangulation::tetrahedron().canonical_code()],
        }
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn triangulations(&self) -> Vec<PlaneTriangulation> {
        self.codes
            .par_iter()
            .map(|c| c.decode().expect("generated code decodes"))
            .collect()
    }

    /// The next level, expanding parents in parallel on the current rayon pool.
    pub fn expand(&self) -> Level {
        let mut codes: Vec<CanonicalCode> = self
            .codes
            .par_iter()
            .flat_map_iter(|c| child_codes(&c.decode().expect("generated code decodes")))
            .collect();
        codes.par_sort_unstable();
        codes.dedup();
        Level {
            order: self.order + 1,
            codes,
        }
    }

    /// Level built from externally supplied triangulations (for example a
    /// plantri `planar_code` file), deduplicated the same way.
    pub fn from_triangulations(order: usize, ts: &[PlaneTriangulation]) -> Result<Level> {
        if let Some(t) = ts.iter().find(|t| t.order() != order) {
            return Err(Error::InvalidTriangulation(format!(
                "expected order {order}, found {}",
                t.order()
            )));
        }
        let mut codes: Vec<CanonicalCode> = ts.par_iter().map(|t| t.canonical_code()).collect();
        codes.par_sort_unstable();
        codes.dedup();
        Ok(Level { order, codes })
    }
}

fn check_order(n: usize) -> Result<()> {
    if (MIN_ORDER..=MAX_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(Error::OrderOutOfRange(n))
    }
}

/// Calls `visit` on every level from order 4 up to `n`.
pub fn for_each_level<F>(n: usize, mut visit: F) -> Result<()>
where
    F: FnMut(&Level),
{
    check_order(n)?;
    let mut level = Level::base();
    visit(&level);
    while level.order < n {
        level = level.expand();
        visit(&level);
    }
    Ok(())
}

/// All plane triangulations of order `n`, up to isomorphism and reflection.
pub fn enumerate_level(n: usize) -> Result<Level> {
    let mut last = None;
    for_each_level(n, |l| {
        if l.order == n {
            last = Some(l.clone());
        }
    })?;
    Ok(last.expect("level n visited"))
}

pub fn enumerate(n: usize) -> Result<Vec<PlaneTriangulation>> {
    Ok(enumerate_level(n)?.triangulations())
}
