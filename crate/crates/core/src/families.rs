//! Extremal constructions: the octahedral clique sum over a face, the two
//! `γ_c = n/3` families grown from 9-vertex bases, the icosahedron and the
//! chain of icosahedra that separates `γ` from `γ_c`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::embedding::{Face, PlaneTriangulation};
use crate::error::{Error, Result};
use crate::generator;
use crate::solvers::{all_minimum_cds, exact_gamma_c};

/// Largest order at which [`family`] checks `γ_c` by default.
pub const DEFAULT_VERIFY_CAP: usize = 24;

/// A triangulation together with a distinguished face: the outer face of an
/// icosahedron copy, or the site of the next clique sum in a family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacedTriangulation {
    pub triangulation: PlaneTriangulation,
    pub face: Face,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => write!(f, "A"),
            Family::B => write!(f, "B"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            other => Err(Error::Format(format!("unknown family {other:?}"))),
        }
    }
}

/// Which construction and its size parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilySpec {
    /// Order `3k`, `k >= 3`.
    Sum(Family, usize),
    /// `k >= 2` glued icosahedra.
    Chain(usize),
}

impl FamilySpec {
    pub fn validate(self) -> Result<Self> {
        match self {
            FamilySpec::Sum(_, k) if k < 3 => Err(Error::OrderOutOfRange(3 * k)),
            FamilySpec::Chain(k) if k < 2 => Err(Error::OrderOutOfRange(10 * k + 2)),
            ok => Ok(ok),
        }
    }

    pub fn order(self) -> usize {
        match self {
            FamilySpec::Sum(_, k) => 3 * k,
            FamilySpec::Chain(k) => 10 * k + 2,
        }
    }

    pub fn build(self, verify_cap: usize) -> Result<PlaneTriangulation> {
        match self.validate()? {
            FamilySpec::Sum(which, k) => Ok(family(which, k, verify_cap)?.triangulation),
            FamilySpec::Chain(k) => icosa_chain(k),
        }
    }
}

/// Glues an octahedron onto the face `(a, b, c)`: a new triangle `e, f, g`
/// inside it joined by `ae, af, bf, bg, ce, cg`. The new triangle is the
/// returned face, ready for the next application.
pub fn octahedron_sum(t: &PlaneTriangulation, face: Face) -> Result<FacedTriangulation> {
    if !t.is_face(face) {
        let [a, b, c] = face.0;
        return Err(Error::NotAFace(a, b, c));
    }
    let [a, b, c] = face.0;
    let n = t.order();
    let (e, f, g) = (n, n + 1, n + 2);
    let target = face.normalized();
    let mut faces: Vec<Face> = t.faces().into_iter().filter(|x| x.normalized() != target).collect();
    faces.extend([
        Face([a, b, f]),
        Face([b, c, g]),
        Face([c, a, e]),
        Face([a, f, e]),
        Face([b, g, f]),
        Face([c, e, g]),
        Face([e, f, g]),
    ]);
    Ok(FacedTriangulation {
        triangulation: PlaneTriangulation::from_faces(n + 3, &faces)?,
        face: Face([e, f, g]),
    })
}

/// Outcome of one clique sum, measured with the exact solver.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumReport {
    pub base_gamma_c: usize,
    pub result_gamma_c: usize,
    /// Largest `|S ∩ {a, b, c}|` over minimum connected dominating sets `S`
    /// of the base.
    pub max_face_hits: usize,
}

impl SumReport {
    pub fn increment(&self) -> isize {
        self.result_gamma_c as isize - self.base_gamma_c as isize
    }

    /// `+2` when no minimum set touches the face, `+1` when each touches it
    /// at most once; no prediction otherwise.
    pub fn predicted_increment(&self) -> Option<isize> {
        match self.max_face_hits {
            0 => Some(2),
            1 => Some(1),
            _ => None,
        }
    }

    pub fn matches_prediction(&self) -> Option<bool> {
        self.predicted_increment().map(|p| p == self.increment())
    }
}

pub fn max_face_hits(t: &PlaneTriangulation, face: Face) -> Result<usize> {
    let verts = face.vertices();
    Ok(all_minimum_cds(&t.underlying_graph())?
        .into_iter()
        .map(|s| (s & verts).len())
        .max()
        .unwrap_or(0))
}

pub fn sum_report(t: &PlaneTriangulation, face: Face) -> Result<SumReport> {
    let sum = octahedron_sum(t, face)?;
    Ok(SumReport {
        base_gamma_c: exact_gamma_c(&t.underlying_graph())?.value,
        result_gamma_c: exact_gamma_c(&sum.triangulation.underlying_graph())?.value,
        max_face_hits: max_face_hits(t, face)?,
    })
}

/// The icosahedron, outer face `(0, 1, 2)` read as `(u, v, w)`.
///
/// Vertex 0 is a pole, `1..=5` and `6..=10` the two pentagonal rings and
/// 11 the other pole; the result is relabeled so the outer face comes first.
pub fn icosahedron() -> FacedTriangulation {
    let up = |i: usize| 1 + i % 5;
    let lo = |i: usize| 6 + i % 5;
    let mut faces = Vec::with_capacity(20);
    for i in 0..5 {
        faces.push(Face([0, up(i), up(i + 1)]));
        faces.push(Face([up(i), lo(i), up(i + 1)]));
        faces.push(Face([up(i + 1), lo(i), lo(i + 1)]));
        faces.push(Face([11, lo(i + 1), lo(i)]));
    }
    let t = PlaneTriangulation::from_faces(12, &faces).expect("icosahedron faces are consistent");
    FacedTriangulation {
        triangulation: t,
        face: Face([0, 1, 2]),
    }
}

/// Closes the single hole left by `faces` with a fan from `apex`, which must
/// lie on the hole's boundary.
fn fill_hole_with_fan(faces: &mut Vec<Face>, apex: usize) -> Result<()> {
    let mut darts = HashMap::new();
    for &Face([x, y, z]) in faces.iter() {
        for (a, b) in [(x, y), (y, z), (z, x)] {
            darts.insert((a, b), ());
        }
    }
    let mut next = HashMap::new();
    for &(a, b) in darts.keys() {
        if !darts.contains_key(&(b, a)) && next.insert(b, a).is_some() {
            return Err(Error::InvalidTriangulation(format!(
                "boundary is not a simple cycle at {b}"
            )));
        }
    }
    let mut cycle = vec![apex];
    let mut cur = *next
        .get(&apex)
        .ok_or_else(|| Error::InvalidTriangulation(format!("{apex} not on the boundary")))?;
    while cur != apex {
        if cycle.len() > next.len() {
            return Err(Error::InvalidTriangulation("boundary does not close".into()));
        }
        cycle.push(cur);
        cur = next[&cur];
    }
    if cycle.len() != next.len() {
        return Err(Error::InvalidTriangulation("boundary has several components".into()));
    }
    for i in 1..cycle.len() - 1 {
        faces.push(Face([apex, cycle[i], cycle[i + 1]]));
    }
    Ok(())
}

/// `k` icosahedra sharing the vertex `u`: copy 2 is glued to copy 1 along
/// `u v`, and copy `i + 1` to copy `i` along `u w_i`, so `v_2 = v_1` and
/// `v_{i+1} = w_i`. The outer cycle `u, w_1, v_1, w_2, ..., w_k` is closed by
/// chords from `w_1`. Order `10k + 2`.
pub fn icosa_chain(k: usize) -> Result<PlaneTriangulation> {
    if k < 2 {
        return Err(Error::OrderOutOfRange(10 * k + 2));
    }
    let base = icosahedron();
    let outer = base.face.normalized();
    let inner: Vec<Face> = base
        .triangulation
        .faces()
        .into_iter()
        .filter(|f| f.normalized() != outer)
        .collect();
    let [u0, v0, w0] = base.face.0;
    let mut faces = Vec::with_capacity(20 * k);
    let mut next_id = 0;
    let mut w_prev = 0;
    let mut w_first = 0;
    let mut v_first = 0;
    let u = 0;
    for copy in 0..k {
        let mut map = [usize::MAX; 12];
        map[u0] = u;
        if copy == 0 {
            next_id = 1;
        } else {
            map[v0] = if copy == 1 { v_first } else { w_prev };
        }
        for slot in map.iter_mut() {
            if *slot == usize::MAX {
                *slot = next_id;
                next_id += 1;
            }
        }
        if copy == 0 {
            v_first = map[v0];
            w_first = map[w0];
        }
        w_prev = map[w0];
        // Copies after the first are reflected so that shared edges are
        // traversed in opposite directions by the two sides.
        for &Face([x, y, z]) in &inner {
            let f = if copy == 0 {
                Face([map[x], map[y], map[z]])
            } else {
                Face([map[z], map[y], map[x]])
            };
            faces.push(f);
        }
    }
    fill_hole_with_fan(&mut faces, w_first)?;
    PlaneTriangulation::from_faces(next_id, &faces)
}

/// `γ_c` the constructions are expected to reach at parameter `k`.
pub fn expected_gamma_c(which: Family, k: usize) -> usize {
    match (which, k) {
        (Family::A, 3) => 2,
        (Family::A, 4) => 4,
        (Family::B, 3) | (Family::B, 4) => 3,
        (_, k) => k,
    }
}

/// The 9-vertex starting graph of a family and the face the first clique
/// sum is applied to.
///
/// `B`: the only 9-vertex triangulation with `γ_c = 3`, with the first face
/// whose clique sum keeps `γ_c = 3`. `A`: the first `γ_c = 2` triangulation
/// (by canonical code) having a face that misses every minimum connected
/// dominating set, with the first such face.
pub fn family_base(which: Family) -> Result<FacedTriangulation> {
    let nine = generator::enumerate(9)?;
    match which {
        Family::B => {
            let mut hard = nine
                .into_iter()
                .filter(|t| exact_gamma_c(&t.underlying_graph()).map(|c| c.value) == Ok(3));
            let t = hard
                .next()
                .ok_or_else(|| Error::NoQualifyingBase("no 9-vertex triangulation with γ_c = 3".into()))?;
            if hard.next().is_some() {
                return Err(Error::NoQualifyingBase(
                    "more than one 9-vertex triangulation with γ_c = 3".into(),
                ));
            }
            for face in sorted_faces(&t) {
                let sum = octahedron_sum(&t, face)?;
                if exact_gamma_c(&sum.triangulation.underlying_graph())?.value == 3 {
                    return Ok(FacedTriangulation { triangulation: t, face });
                }
            }
            Err(Error::NoQualifyingBase("no face of the γ_c = 3 base keeps γ_c at 3".into()))
        }
        Family::A => {
            for t in nine {
                let g = t.underlying_graph();
                if exact_gamma_c(&g)?.value != 2 {
                    continue;
                }
                let touched = all_minimum_cds(&g)?
                    .into_iter()
                    .fold(crate::graph::VertexSet::EMPTY, |acc, s| acc | s);
                if let Some(face) = sorted_faces(&t)
                    .into_iter()
                    .find(|f| f.vertices().is_disjoint(touched))
                {
                    return Ok(FacedTriangulation { triangulation: t, face });
                }
            }
            Err(Error::NoQualifyingBase("no γ_c = 2 base with an untouched face".into()))
        }
    }
}

/// Faces in ascending order of their normalized vertex triples.
fn sorted_faces(t: &PlaneTriangulation) -> Vec<Face> {
    let mut faces: Vec<Face> = t.faces().into_iter().map(Face::normalized).collect();
    faces.sort();
    faces
}

/// `family_base(which)` followed by `k - 3` clique sums, each on the
/// triangle added last. Stages of order at most `verify_cap` are checked
/// against [`expected_gamma_c`] with the exact solver.
pub fn family(which: Family, k: usize, verify_cap: usize) -> Result<FacedTriangulation> {
    family_from(family_base(which)?, which, k, verify_cap)
}

/// Same as [`family`] with a precomputed base.
pub fn family_from(
    base: FacedTriangulation,
    which: Family,
    k: usize,
    verify_cap: usize,
) -> Result<FacedTriangulation> {
    if k < 3 {
        return Err(Error::OrderOutOfRange(3 * k));
    }
    let mut cur = base;
    for stage in 3..=k {
        if stage > 3 {
            cur = octahedron_sum(&cur.triangulation, cur.face)?;
        }
        let n = cur.triangulation.order();
        if stage == k && n <= verify_cap {
            let got = exact_gamma_c(&cur.triangulation.underlying_graph())?.value;
            let want = expected_gamma_c(which, stage);
            if got != want {
                return Err(Error::FamilyCheck(format!(
                    "family {which} at k = {stage}: γ_c = {got}, expected {want}"
                )));
            }
        }
    }
    Ok(cur)
}
