//! Plane triangulations as rotation systems.
//!
//! `rotation(v)` lists the neighbors of `v` in clockwise order. Faces are
//! traced dart by dart: from the directed edge `(u, v)` the next one is
//! `(v, w)` where `w` immediately follows `u` in the rotation at `v`.

mod canonical;
pub mod planar_code;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use canonical::{CanonicalCode, CanonicalForm};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexSet, MAX_VERTICES};

/// A triangular face, vertices in tracing order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Face(pub [usize; 3]);

impl Face {
    pub fn vertices(self) -> VertexSet {
        self.0.iter().collect()
    }

    /// Same face, rotated so the smallest vertex comes first.
    pub fn normalized(self) -> Face {
        let [a, b, c] = self.0;
        if a <= b && a <= c {
            Face([a, b, c])
        } else if b <= a && b <= c {
            Face([b, c, a])
        } else {
            Face([c, a, b])
        }
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Face{:?}", self.0)
    }
}

/// First structural condition a rotation system fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    OrderOutOfRange(usize),
    NeighborOutOfRange { vertex: usize, neighbor: usize },
    SelfLoop(usize),
    RepeatedNeighbor { vertex: usize, neighbor: usize },
    Asymmetric { vertex: usize, neighbor: usize },
    Disconnected,
    EdgeCount { expected: usize, found: usize },
    NonTriangularFace { start: (usize, usize), length: usize },
    FaceCount { expected: usize, found: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::OrderOutOfRange(n) => write!(f, "order {n} outside 4..={MAX_VERTICES}"),
            Violation::NeighborOutOfRange { vertex, neighbor } => {
                write!(f, "vertex {vertex} lists out-of-range neighbor {neighbor}")
            }
            Violation::SelfLoop(v) => write!(f, "vertex {v} lists itself"),
            Violation::RepeatedNeighbor { vertex, neighbor } => {
                write!(f, "vertex {vertex} lists neighbor {neighbor} twice")
            }
            Violation::Asymmetric { vertex, neighbor } => {
                write!(f, "{vertex} lists {neighbor} but not conversely")
            }
            Violation::Disconnected => write!(f, "graph is disconnected"),
            Violation::EdgeCount { expected, found } => {
                write!(f, "expected {expected} edges, found {found}")
            }
            Violation::NonTriangularFace { start, length } => {
                write!(f, "face through {start:?} has length {length}")
            }
            Violation::FaceCount { expected, found } => {
                write!(f, "expected {expected} faces, found {found}")
            }
        }
    }
}

/// Checks that `rotation` is a plane triangulation: simple, connected,
/// `3n - 6` edges, every traced face a triangle and `2n - 4` faces.
pub fn verify_rotation(rotation: &[Vec<usize>]) -> Result<(), Violation> {
    let n = rotation.len();
    if !(4..=MAX_VERTICES).contains(&n) {
        return Err(Violation::OrderOutOfRange(n));
    }
    let mut adj = vec![VertexSet::EMPTY; n];
    for (v, nbrs) in rotation.iter().enumerate() {
        for &u in nbrs {
            if u >= n {
                return Err(Violation::NeighborOutOfRange { vertex: v, neighbor: u });
            }
            if u == v {
                return Err(Violation::SelfLoop(v));
            }
            if adj[v].contains(u) {
                return Err(Violation::RepeatedNeighbor { vertex: v, neighbor: u });
            }
            adj[v].insert(u);
        }
    }
    for v in 0..n {
        for u in adj[v] {
            if !adj[u].contains(v) {
                return Err(Violation::Asymmetric { vertex: v, neighbor: u });
            }
        }
    }
    let g = Graph::from_adjacency(adj).expect("checked above");
    if !g.is_connected() {
        return Err(Violation::Disconnected);
    }
    let edges = g.edge_count();
    if edges != 3 * n - 6 {
        return Err(Violation::EdgeCount { expected: 3 * n - 6, found: edges });
    }
    let pos = position_table(rotation);
    let mut seen = vec![Vec::new(); n];
    for (v, nbrs) in rotation.iter().enumerate() {
        seen[v] = vec![false; nbrs.len()];
    }
    let mut faces = 0;
    for v in 0..n {
        for i in 0..rotation[v].len() {
            if seen[v][i] {
                continue;
            }
            let start = (v, rotation[v][i]);
            let (mut a, mut b) = start;
            let mut length = 0;
            loop {
                seen[a][pos[a * n + b] as usize] = true;
                length += 1;
                let at_b = &rotation[b];
                let c = at_b[(pos[b * n + a] as usize + 1) % at_b.len()];
                a = b;
                b = c;
                if (a, b) == start {
                    break;
                }
                if length > 3 {
                    break;
                }
            }
            if length != 3 {
                return Err(Violation::NonTriangularFace { start, length });
            }
            faces += 1;
        }
    }
    if faces != 2 * n - 4 {
        return Err(Violation::FaceCount { expected: 2 * n - 4, found: faces });
    }
    Ok(())
}

/// `pos[v * n + u]` is the index of `u` in `rotation[v]`.
fn position_table(rotation: &[Vec<usize>]) -> Vec<u8> {
    let n = rotation.len();
    let mut pos = vec![u8::MAX; n * n];
    for (v, nbrs) in rotation.iter().enumerate() {
        for (i, &u) in nbrs.iter().enumerate() {
            pos[v * n + u] = i as u8;
        }
    }
    pos
}

/// A plane triangulation given by its clockwise rotation system.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PlaneTriangulation {
    rotation: Vec<Vec<usize>>,
}

impl PlaneTriangulation {
    pub fn new(rotation: Vec<Vec<usize>>) -> Result<Self> {
        verify_rotation(&rotation).map_err(|v| Error::InvalidTriangulation(v.to_string()))?;
        Ok(PlaneTriangulation { rotation })
    }

    /// Skips validation. Callers must uphold the rotation-system invariants.
    pub(crate) fn from_rotation_unchecked(rotation: Vec<Vec<usize>>) -> Self {
        debug_assert_eq!(verify_rotation(&rotation), Ok(()));
        PlaneTriangulation { rotation }
    }

    /// Builds the rotation system from consistently oriented triangles.
    ///
    /// A face `(x, y, z)` means `z` follows `x` in the rotation at `y`; each
    /// directed edge must occur in exactly one face.
    pub fn from_faces(order: usize, faces: &[Face]) -> Result<Self> {
        if !(4..=MAX_VERTICES).contains(&order) {
            return Err(Error::OrderOutOfRange(order));
        }
        let mut succ = vec![usize::MAX; order * order];
        for &Face([x, y, z]) in faces {
            for (a, b, c) in [(x, y, z), (y, z, x), (z, x, y)] {
                if a >= order || b >= order || c >= order || a == b || b == c || a == c {
                    return Err(Error::InvalidTriangulation(format!("bad face {:?}", [x, y, z])));
                }
                let slot = &mut succ[b * order + a];
                if *slot != usize::MAX {
                    return Err(Error::InvalidTriangulation(format!(
                        "directed edge ({a}, {b}) in two faces"
                    )));
                }
                *slot = c;
            }
        }
        let mut rotation = Vec::with_capacity(order);
        for v in 0..order {
            let row = &succ[v * order..(v + 1) * order];
            let Some(first) = row.iter().position(|&s| s != usize::MAX) else {
                return Err(Error::InvalidTriangulation(format!("vertex {v} in no face")));
            };
            let degree = row.iter().filter(|&&s| s != usize::MAX).count();
            let mut cyc = vec![first];
            let mut cur = row[first];
            while cur != first {
                if cur == usize::MAX || cyc.len() > degree {
                    return Err(Error::InvalidTriangulation(format!(
                        "link of vertex {v} is not a single cycle"
                    )));
                }
                cyc.push(cur);
                cur = row[cur];
            }
            if cyc.len() != degree {
                return Err(Error::InvalidTriangulation(format!(
                    "link of vertex {v} is not a single cycle"
                )));
            }
            rotation.push(cyc);
        }
        PlaneTriangulation::new(rotation)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        3 * self.order() - 6
    }

    #[inline]
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub(crate) fn into_rotations(self) -> Vec<Vec<usize>> {
        self.rotation
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.rotation[u].contains(&v)
    }

    /// The neighbor following `u` in the clockwise rotation at `v`.
    pub fn successor(&self, v: usize, u: usize) -> Option<usize> {
        let rot = &self.rotation[v];
        let i = rot.iter().position(|&x| x == u)?;
        Some(rot[(i + 1) % rot.len()])
    }

    pub fn predecessor(&self, v: usize, u: usize) -> Option<usize> {
        let rot = &self.rotation[v];
        let i = rot.iter().position(|&x| x == u)?;
        Some(rot[(i + rot.len() - 1) % rot.len()])
    }

    /// All `2n - 4` faces. The face containing dart `(u, v)` is reported once,
    /// starting from the first dart met when scanning vertices ascending and
    /// rotations in order.
    pub fn faces(&self) -> Vec<Face> {
        let n = self.order();
        let pos = position_table(&self.rotation);
        let mut seen: Vec<Vec<bool>> = self.rotation.iter().map(|r| vec![false; r.len()]).collect();
        let mut out = Vec::with_capacity(2 * n - 4);
        for v in 0..n {
            for i in 0..self.rotation[v].len() {
                if seen[v][i] {
                    continue;
                }
                let mut tri = [v, self.rotation[v][i], 0];
                let (mut a, mut b) = (tri[0], tri[1]);
                for slot in 0..3 {
                    seen[a][pos[a * n + b] as usize] = true;
                    let at_b = &self.rotation[b];
                    let c = at_b[(pos[b * n + a] as usize + 1) % at_b.len()];
                    if slot == 1 {
                        tri[2] = b;
                    }
                    a = b;
                    b = c;
                }
                debug_assert_eq!((a, b), (tri[0], tri[1]));
                out.push(Face([tri[0], tri[1], tri[2]]));
            }
        }
        out
    }

    /// True if `(a, b, c)` is a face in tracing order (any cyclic shift).
    pub fn is_face(&self, f: Face) -> bool {
        let [a, b, c] = f.0;
        a < self.order()
            && b < self.order()
            && c < self.order()
            && self.successor(b, a) == Some(c)
            && self.successor(c, b) == Some(a)
    }

    /// The face through the directed edge `(u, v)`.
    pub fn face_of_dart(&self, u: usize, v: usize) -> Option<Face> {
        let w = self.successor(v, u)?;
        Some(Face([u, v, w]))
    }

    pub fn underlying_graph(&self) -> Graph {
        let adj = self.rotation.iter().map(|r| r.iter().collect()).collect();
        Graph::from_adjacency(adj).expect("rotation system is symmetric")
    }

    pub fn edges(&self) -> Vec<Edge> {
        self.underlying_graph().edges()
    }

    /// The reflected embedding (all rotations reversed).
    pub fn mirror(&self) -> PlaneTriangulation {
        let rotation = self
            .rotation
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        PlaneTriangulation { rotation }
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<PlaneTriangulation> {
        let n = self.order();
        if perm.len() != n || perm.iter().collect::<VertexSet>() != VertexSet::full(n) {
            return Err(Error::InvalidGraph("relabeling is not a permutation".into()));
        }
        let mut rotation = vec![Vec::new(); n];
        for v in 0..n {
            rotation[perm[v]] = self.rotation[v].iter().map(|&u| perm[u]).collect();
        }
        Ok(PlaneTriangulation { rotation })
    }

    pub fn canonical_code(&self) -> CanonicalCode {
        canonical::canonical_code(self)
    }

    /// Canonical code plus the canonically relabeled triangulation and the
    /// size of its automorphism group (reflections included).
    pub fn canonical_form(&self) -> CanonicalForm {
        canonical::canonical_form(self)
    }

    /// Tetrahedron with the rotation system `0:[1,2,3] 1:[0,3,2] 2:[0,1,3] 3:[0,2,1]`.
    pub fn tetrahedron() -> PlaneTriangulation {
        PlaneTriangulation::from_rotation_unchecked(vec![
            vec![1, 2, 3],
            vec![0, 3, 2],
            vec![0, 1, 3],
            vec![0, 2, 1],
        ])
    }

    /// Octahedron; antipodal pairs are `{0,5}`, `{1,3}`, `{2,4}`.
    pub fn octahedron() -> PlaneTriangulation {
        PlaneTriangulation::from_rotation_unchecked(vec![
            vec![1, 2, 3, 4],
            vec![0, 4, 5, 2],
            vec![0, 1, 5, 3],
            vec![0, 2, 5, 4],
            vec![0, 3, 5, 1],
            vec![1, 4, 3, 2],
        ])
    }

    /// Triangulation with a universal vertex: hub 0 joined to the cycle
    /// `1, 2, ..., n-1`, whose other side is closed by chords from vertex 1.
    pub fn wheel(n: usize) -> Result<PlaneTriangulation> {
        if !(4..=MAX_VERTICES).contains(&n) {
            return Err(Error::OrderOutOfRange(n));
        }
        let mut faces = Vec::with_capacity(2 * n - 4);
        for i in 1..n {
            let j = if i + 1 == n { 1 } else { i + 1 };
            faces.push(Face([0, i, j]));
        }
        for j in 2..n - 1 {
            faces.push(Face([1, j + 1, j]));
        }
        PlaneTriangulation::from_faces(n, &faces)
    }
}

impl fmt::Debug for PlaneTriangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PlaneTriangulation{:?}", self.rotation)
    }
}

/// Accept-or-report check used by the CLI and tests.
pub fn verify_triangulation(t: &PlaneTriangulation) -> Result<(), Violation> {
    verify_rotation(&t.rotation)
}
