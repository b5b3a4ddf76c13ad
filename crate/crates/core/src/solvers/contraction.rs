//! Connected domination through edge contraction.
//!
//! Contracting a connected set of `k` edges that forms a tree merges its
//! `k + 1` endpoints into one vertex of the minor. That vertex is universal
//! (degree `n - k - 1` among `n - k` vertices) exactly when the endpoints
//! dominate the original graph, so the least `k` for which some contraction
//! produces a universal vertex is `γ_c - 1`. Only connected edge sets are
//! tried: any successful edge set can be replaced by a connected one of the
//! same size.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::{require_connected, DominationCertificate, Method};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexSet};

/// Identifies the endpoints of `e`. The merged vertex keeps the smaller
/// index and every larger index shifts down by one; parallel edges collapse.
pub fn contract_edge(g: &Graph, e: Edge) -> Result<Graph> {
    let (u, v) = e;
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge(e));
    }
    let (keep, gone) = if u < v { (u, v) } else { (v, u) };
    let n = g.order();
    let shift = |x: usize| if x > gone { x - 1 } else { x };
    let squeeze = |s: VertexSet| -> VertexSet {
        let low = s.bits() & ((1u128 << gone) - 1);
        let high = s.bits().checked_shr(gone as u32 + 1).unwrap_or(0) << gone;
        VertexSet::from_bits(low | high)
    };
    let mut adj = Vec::with_capacity(n - 1);
    for x in 0..n {
        if x == gone {
            continue;
        }
        let mut nbrs = g.neighbors(x);
        if x == keep {
            nbrs = (nbrs | g.neighbors(gone)).without(keep).without(gone);
        } else if nbrs.contains(gone) {
            nbrs = nbrs.without(gone).with(keep);
        }
        adj.push(squeeze(nbrs));
        debug_assert_eq!(adj.len() - 1, shift(x));
    }
    Graph::from_adjacency(adj)
}

/// A tree of `edges.len()` edges whose contraction makes the merged vertex
/// universal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractionWitness {
    pub edges: Vec<Edge>,
    /// Degree of the merged vertex in the minor, `n - edges.len() - 1`.
    pub merged_degree: usize,
    /// Original vertices merged into it (a single vertex when no edge is
    /// contracted).
    pub merged: VertexSet,
}

/// Lexicographically least spanning tree of the subgraph induced by `s`
/// (greedy over sorted edges).
fn least_spanning_tree(g: &Graph, s: VertexSet) -> Vec<Edge> {
    let members = s.to_vec();
    let mut comp: Vec<usize> = (0..g.order()).collect();
    fn find(comp: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while comp[r] != r {
            r = comp[r];
        }
        let mut y = x;
        while comp[y] != r {
            let nxt = comp[y];
            comp[y] = r;
            y = nxt;
        }
        r
    }
    let mut tree = Vec::with_capacity(members.len().saturating_sub(1));
    for &a in &members {
        for b in (g.neighbors(a) & s).difference(VertexSet::below(a + 1)) {
            let (ra, rb) = (find(&mut comp, a), find(&mut comp, b));
            if ra != rb {
                comp[ra] = rb;
                tree.push((a, b));
            }
        }
    }
    tree
}

struct Minor {
    graph: Graph,
    /// Original vertex for each minor vertex other than the merged one.
    label: Vec<usize>,
    merged: usize,
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    max_degree: usize,
    best: Option<(Vec<Edge>, VertexSet)>,
}

impl Search<'_> {
    fn visit(&mut self, minor: &Minor, members: VertexSet, mut excluded: VertexSet) {
        let steps = members.len() - 1;
        let m = minor.merged;
        let deg = minor.graph.degree(m);
        let order = minor.graph.order();
        if steps == self.k {
            if deg + 1 == order {
                let tree = least_spanning_tree(self.g, members);
                let better = match &self.best {
                    None => true,
                    Some((t, _)) => tree.cmp(t) == Ordering::Less,
                };
                if better {
                    self.best = Some((tree, members));
                }
            }
            return;
        }
        let left = self.k - steps;
        // Each further contraction raises the merged degree by at most Δ - 2
        // and shrinks the minor by one.
        if deg + left * self.max_degree.saturating_sub(1) < order - 1 {
            return;
        }
        let mut candidates: Vec<(usize, usize)> = minor
            .graph
            .neighbors(m)
            .iter()
            .map(|i| (minor.label[i], i))
            .filter(|&(x, _)| !excluded.contains(x))
            .collect();
        candidates.sort_unstable();
        for (x, i) in candidates {
            let graph = contract_edge(&minor.graph, (m, i)).expect("merged vertex adjacent");
            let gone = m.max(i);
            let mut label = minor.label.clone();
            label.remove(gone);
            let next = Minor {
                graph,
                label,
                merged: m.min(i),
            };
            self.visit(&next, members.with(x), excluded);
            excluded.insert(x);
        }
    }
}

/// Looks for a connected tree of exactly `k` edges whose contraction yields
/// a universal merged vertex. Among all such trees the lexicographically
/// least sorted edge list is returned.
pub fn contraction_search(g: &Graph, k: usize) -> Option<ContractionWitness> {
    let n = g.order();
    if k == 0 {
        return (0..n).find(|&v| g.degree(v) + 1 == n).map(|v| ContractionWitness {
            edges: Vec::new(),
            merged_degree: n - 1,
            merged: VertexSet::singleton(v),
        });
    }
    if k + 1 > n {
        return None;
    }
    let mut search = Search {
        g,
        k,
        max_degree: g.degree_stats().max_degree,
        best: None,
    };
    for root in 0..n {
        let minor = Minor {
            graph: g.clone(),
            label: (0..n).collect(),
            merged: root,
        };
        search.visit(&minor, VertexSet::singleton(root), VertexSet::below(root + 1));
    }
    search.best.map(|(edges, merged)| ContractionWitness {
        merged_degree: n - k - 1,
        edges,
        merged,
    })
}

/// `γ_c` as one more than the fewest contractions producing a universal
/// vertex. Witness: the vertices spanned by the contracted edges.
pub fn gamma_c_by_contraction(g: &Graph) -> Result<DominationCertificate> {
    require_connected(g)?;
    for k in 0..g.order() {
        if let Some(w) = contraction_search(g, k) {
            return Ok(DominationCertificate {
                value: k + 1,
                witness: w.merged,
                method: Method::Contraction,
            });
        }
    }
    unreachable!("contracting a spanning tree leaves a single vertex")
}
