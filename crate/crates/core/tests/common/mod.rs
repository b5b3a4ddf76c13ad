//! Brute-force oracles shared by the integration tests. None of them uses
//! the generator or the solvers under test.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use tridom::embedding::Face;
use tridom::{CanonicalCode, Graph, PlaneTriangulation, VertexSet};

/// Exchanges the diagonal of the quadrilateral around edge `u v`, if the
/// opposite vertices are not already adjacent.
pub fn flip(t: &PlaneTriangulation, u: usize, v: usize) -> Option<PlaneTriangulation> {
    let Face([_, _, x]) = t.face_of_dart(u, v)?;
    let Face([_, _, y]) = t.face_of_dart(v, u)?;
    if x == y || t.has_edge(x, y) {
        return None;
    }
    let (f1, f2) = (Face([u, v, x]).normalized(), Face([v, u, y]).normalized());
    let mut faces: Vec<Face> = t
        .faces()
        .into_iter()
        .filter(|f| {
            let f = f.normalized();
            f != f1 && f != f2
        })
        .collect();
    faces.push(Face([x, u, y]));
    faces.push(Face([y, v, x]));
    PlaneTriangulation::from_faces(t.order(), &faces).ok()
}

/// Every triangulation of order `n`, reached from the wheel by diagonal
/// flips (the flip graph of a fixed order is connected).
pub fn flip_closure(n: usize) -> BTreeSet<CanonicalCode> {
    let start = PlaneTriangulation::wheel(n).unwrap().canonical_code();
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(code) = queue.pop_front() {
        let t = code.decode().unwrap();
        for (u, v) in t.edges() {
            if let Some(s) = flip(&t, u, v) {
                let c = s.canonical_code();
                if seen.insert(c.clone()) {
                    queue.push_back(c);
                }
            }
        }
    }
    seen
}

/// Whether `g` (with `3n - 6` edges) triangulates the sphere: some set of
/// its triangles covers every edge exactly twice with every vertex link a
/// single cycle. Euler's formula then forces the sphere.
pub fn is_maximal_planar(g: &Graph) -> bool {
    let n = g.order();
    if n < 4 || g.edge_count() != 3 * n - 6 || !g.is_connected() {
        return n == 3 && g.edge_count() == 3;
    }
    let edges = g.edges();
    let index = |a: usize, b: usize| edges.binary_search(&(a.min(b), a.max(b))).unwrap();
    let mut tris: Vec<[usize; 3]> = Vec::new();
    let mut tris_of_edge: Vec<Vec<usize>> = vec![Vec::new(); edges.len()];
    for (ei, &(a, b)) in edges.iter().enumerate() {
        for c in (g.neighbors(a) & g.neighbors(b)).iter().filter(|&c| c > b) {
            let t = tris.len();
            let es = [ei, index(a, c), index(b, c)];
            tris.push([a, b, c]);
            for e in es {
                tris_of_edge[e].push(t);
            }
        }
    }
    let tri_edges: Vec<[usize; 3]> = tris
        .iter()
        .map(|&[a, b, c]| [index(a, b), index(a, c), index(b, c)])
        .collect();
    let mut cover = vec![0u8; edges.len()];
    let mut chosen = vec![false; tris.len()];
    fn links_are_cycles(n: usize, tris: &[[usize; 3]], chosen: &[bool]) -> bool {
        (0..n).all(|v| {
            let mut link: Vec<(usize, usize)> = Vec::new();
            for (t, &[a, b, c]) in tris.iter().enumerate() {
                if chosen[t] && (a == v || b == v || c == v) {
                    let others: Vec<usize> = [a, b, c].into_iter().filter(|&x| x != v).collect();
                    link.push((others[0], others[1]));
                }
            }
            // Each link vertex has degree two; check the cycle is single.
            let Some(&(start, mut cur)) = link.first() else {
                return false;
            };
            let mut prev = start;
            let mut steps = 1;
            while cur != start {
                let next = link
                    .iter()
                    .find_map(|&(p, q)| {
                        if p == cur && q != prev {
                            Some(q)
                        } else if q == cur && p != prev {
                            Some(p)
                        } else {
                            None
                        }
                    })
                    .unwrap();
                prev = cur;
                cur = next;
                steps += 1;
                if steps > link.len() {
                    return false;
                }
            }
            steps == link.len()
        })
    }
    fn search(
        n: usize,
        tris: &[[usize; 3]],
        tri_edges: &[[usize; 3]],
        tris_of_edge: &[Vec<usize>],
        cover: &mut [u8],
        chosen: &mut [bool],
    ) -> bool {
        let open = |t: usize, cover: &[u8], chosen: &[bool]| !chosen[t] && tri_edges[t].iter().all(|&e| cover[e] < 2);
        let mut pick = None;
        for e in 0..cover.len() {
            if cover[e] < 2 {
                let options = tris_of_edge[e].iter().filter(|&&t| open(t, cover, chosen)).count();
                if options + (cover[e] as usize) < 2 {
                    return false;
                }
                if pick.is_none_or(|(_, o)| options < o) {
                    pick = Some((e, options));
                }
            }
        }
        let Some((e, _)) = pick else {
            return links_are_cycles(n, tris, chosen);
        };
        for &t in &tris_of_edge[e] {
            if !open(t, cover, chosen) {
                continue;
            }
            chosen[t] = true;
            for &x in &tri_edges[t] {
                cover[x] += 1;
            }
            if search(n, tris, tri_edges, tris_of_edge, cover, chosen) {
                return true;
            }
            for &x in &tri_edges[t] {
                cover[x] -= 1;
            }
            chosen[t] = false;
        }
        false
    }
    search(n, &tris, &tri_edges, &tris_of_edge, &mut cover, &mut chosen)
}

/// Number of maximal planar graphs on the labeled vertex set `0..n`, by
/// testing every edge set of size `3n - 6`.
pub fn labeled_triangulations(n: usize) -> u64 {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let m = pairs.len();
    let k = 3 * n - 6;
    let incident: Vec<u64> = (0..n)
        .map(|v| {
            pairs
                .iter()
                .enumerate()
                .filter(|(_, &(a, b))| a == v || b == v)
                .fold(0u64, |acc, (i, _)| acc | 1 << i)
        })
        .collect();
    let mut count = 0;
    // Gosper's hack over all k-subsets of the m vertex pairs.
    let mut s: u64 = (1 << k) - 1;
    while s < 1 << m {
        if incident.iter().all(|&inc| (s & inc).count_ones() >= 3) {
            let g = Graph::from_edges(n, (0..m).filter(|i| s >> i & 1 == 1).map(|i| pairs[i])).unwrap();
            if is_maximal_planar(&g) {
                count += 1;
            }
        }
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    count
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn binomial(n: u64, k: u64) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Rooted simple triangulations with `n` vertices:
/// `2 (4m+1)! / ((m+1)! (3m+2)!)` with `m = n - 3`.
pub fn rooted_triangulations(n: usize) -> u128 {
    let m = (n - 3) as u64;
    let num = 2 * binomial(4 * m + 1, m + 1);
    let den = ((3 * m + 1) * (3 * m + 2)) as u128;
    assert_eq!(num % den, 0);
    num / den
}

/// Same embedding, ignoring where each rotation list starts.
pub fn same_embedding(a: &PlaneTriangulation, b: &PlaneTriangulation) -> bool {
    let norm = |t: &PlaneTriangulation| -> Vec<Vec<usize>> {
        t.rotations()
            .iter()
            .map(|r| {
                let i = (0..r.len()).min_by_key(|&i| r[i]).unwrap_or(0);
                r[i..].iter().chain(&r[..i]).copied().collect()
            })
            .collect()
    };
    norm(a) == norm(b)
}

/// Triangulations of a convex `p`-gon up to rotation and reflection.
pub fn polygon_triangulations_up_to_symmetry(p: usize) -> usize {
    fn all(verts: &[usize]) -> Vec<Vec<(usize, usize)>> {
        if verts.len() < 3 {
            return vec![Vec::new()];
        }
        let (a, b) = (verts[0], verts[verts.len() - 1]);
        let mut out = Vec::new();
        for i in 1..verts.len() - 1 {
            let c = verts[i];
            for left in all(&verts[..=i]) {
                for right in all(&verts[i..]) {
                    let mut d = left.clone();
                    d.extend(right.iter().copied());
                    if i > 1 {
                        d.push((a, c));
                    }
                    if i < verts.len() - 2 {
                        d.push((c, b));
                    }
                    out.push(d);
                }
            }
        }
        out
    }
    let verts: Vec<usize> = (0..p).collect();
    let mut classes = BTreeSet::new();
    for d in all(&verts) {
        let image = |f: &dyn Fn(usize) -> usize| -> Vec<(usize, usize)> {
            let mut e: Vec<(usize, usize)> = d
                .iter()
                .map(|&(x, y)| (f(x).min(f(y)), f(x).max(f(y))))
                .collect();
            e.sort();
            e
        };
        let canon = (0..p)
            .flat_map(|r| {
                [
                    image(&|x| (x + r) % p),
                    image(&|x| (p - x + r) % p),
                ]
            })
            .min()
            .unwrap();
        classes.insert(canon);
    }
    classes.len()
}

pub fn random_connected_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    loop {
        let mut g = Graph::new(n).unwrap();
        // A random spanning tree keeps it connected.
        for v in 1..n {
            g.add_edge(v, rng.gen_range(0..v)).unwrap();
        }
        for a in 0..n {
            for b in a + 1..n {
                if !g.has_edge(a, b) && rng.gen_bool(p) {
                    g.add_edge(a, b).unwrap();
                }
            }
        }
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let g = g.relabel(&perm).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n).unwrap();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(a, b).unwrap();
            }
        }
    }
    g
}

pub fn seeded(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (1u128..1 << n).map(VertexSet::from_bits)
}

/// `γ_c` by testing every vertex subset.
pub fn brute_gamma_c(g: &Graph) -> usize {
    subsets(g.order())
        .filter(|&s| g.is_dominating(s) && g.induces_connected(s).unwrap())
        .map(|s| s.len())
        .min()
        .unwrap()
}

pub fn brute_gamma(g: &Graph) -> usize {
    subsets(g.order()).filter(|&s| g.is_dominating(s)).map(|s| s.len()).min().unwrap()
}

pub fn brute_minimum_cds(g: &Graph) -> Vec<VertexSet> {
    let best = brute_gamma_c(g);
    let mut v: Vec<VertexSet> = subsets(g.order())
        .filter(|&s| s.len() == best && g.is_dominating(s) && g.induces_connected(s).unwrap())
        .collect();
    v.sort();
    v
}

pub fn random_permutation(rng: &mut StdRng, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    perm
}
