//! Simple undirected graphs over at most 128 vertices.
//!
//! Adjacency is stored as one [`VertexSet`] per vertex, so neighborhood unions
//! and domination tests are a handful of word operations each.

mod connected;
pub mod graph6;
mod vertex_set;

use std::collections::VecDeque;

pub use connected::enumerate_connected_sets;
pub use vertex_set::{Iter as VertexSetIter, VertexSet, MAX_VERTICES};

use crate::error::{Error, Result};

pub type Edge = (usize, usize);

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    adj: Vec<VertexSet>,
}

/// Minimum degree, maximum degree and the least vertex attaining the maximum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeStats {
    pub min_degree: usize,
    pub max_degree: usize,
    pub argmax: usize,
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn new(order: usize) -> Result<Self> {
        if order == 0 || order > MAX_VERTICES {
            return Err(Error::OrderOutOfRange(order));
        }
        Ok(Graph {
            order,
            adj: vec![VertexSet::EMPTY; order],
        })
    }

    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut g = Graph::new(order)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency sets, checking symmetry and
    /// irreflexivity.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let order = adj.len();
        if order == 0 || order > MAX_VERTICES {
            return Err(Error::OrderOutOfRange(order));
        }
        for (v, &nbrs) in adj.iter().enumerate() {
            if !nbrs.fits_order(order) {
                return Err(Error::InvalidGraph(format!("vertex {v} has out-of-range neighbor")));
            }
            if nbrs.contains(v) {
                return Err(Error::InvalidGraph(format!("loop at vertex {v}")));
            }
            for u in nbrs {
                if !adj[u].contains(v) {
                    return Err(Error::InvalidGraph(format!("asymmetric edge {v}-{u}")));
                }
            }
        }
        Ok(Graph { order, adj })
    }

    /// Adds the edge `{u, v}`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge((u, v)));
        }
        self.adj[u].remove(v);
        self.adj[v].remove(u);
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.order {
            for v in self.adj[u].difference(VertexSet::full(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        }
    }

    fn check_set(&self, s: VertexSet) -> Result<()> {
        match s.max() {
            Some(v) if v >= self.order => Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            }),
            _ => Ok(()),
        }
    }

    /// `N[v]`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.closed(v))
    }

    #[inline]
    pub(crate) fn closed(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    /// `N[S]`, the set of vertices dominated by `s`.
    #[inline]
    pub fn dominated_by(&self, s: VertexSet) -> VertexSet {
        let mut out = s;
        for v in s {
            out |= self.adj[v];
        }
        out
    }

    /// True iff every vertex is in `s` or adjacent to a vertex in `s`.
    ///
    /// Panics in debug builds if `s` has members outside the graph.
    #[inline]
    pub fn is_dominating(&self, s: VertexSet) -> bool {
        debug_assert!(s.fits_order(self.order));
        self.dominated_by(s) == self.vertices()
    }

    /// True iff the subgraph induced by `s` is connected.
    pub fn induces_connected(&self, s: VertexSet) -> Result<bool> {
        self.check_set(s)?;
        let Some(start) = s.min() else {
            return Err(Error::EmptySet);
        };
        Ok(self.reach_within(start, s) == s)
    }

    /// Vertices of `within` reachable from `start` inside `within`.
    pub(crate) fn reach_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.adj[v];
            }
            next = next.intersection(within).difference(seen);
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.reach_within(0, self.vertices()) == self.vertices()
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let mut stats = DegreeStats {
            min_degree: usize::MAX,
            max_degree: 0,
            argmax: 0,
        };
        for v in 0..self.order {
            let d = self.degree(v);
            stats.min_degree = stats.min_degree.min(d);
            if d > stats.max_degree {
                stats.max_degree = d;
                stats.argmax = v;
            }
        }
        stats
    }

    /// Breadth-first order from `root`, visiting neighbors in ascending index
    /// order. Returns the visit order and each vertex's parent.
    pub fn bfs(&self, root: usize) -> (Vec<usize>, Vec<Option<usize>>) {
        let mut parent = vec![None; self.order];
        let mut seen = VertexSet::singleton(root);
        let mut order = Vec::with_capacity(self.order);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for u in self.adj[v].difference(seen) {
                seen.insert(u);
                parent[u] = Some(v);
                queue.push_back(u);
            }
        }
        (order, parent)
    }

    /// Applies the relabeling `v -> perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.order
            || perm.iter().collect::<VertexSet>() != self.vertices()
        {
            return Err(Error::InvalidGraph("relabeling is not a permutation".into()));
        }
        let mut adj = vec![VertexSet::EMPTY; self.order];
        for v in 0..self.order {
            adj[perm[v]] = self.adj[v].iter().map(|u| perm[u]).collect();
        }
        Ok(Graph { order: self.order, adj })
    }

    /// Induced subgraph on `s`, with vertices renumbered in ascending order.
    pub fn induced(&self, s: VertexSet) -> Result<Graph> {
        self.check_set(s)?;
        let members = s.to_vec();
        let mut index = vec![usize::MAX; self.order];
        for (i, &v) in members.iter().enumerate() {
            index[v] = i;
        }
        let adj = members
            .iter()
            .map(|&v| self.adj[v].intersection(s).iter().map(|u| index[u]).collect())
            .collect();
        Graph::from_adjacency(adj)
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges)
    }

    pub fn path(n: usize) -> Result<Graph> {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    /// `K_{1,leaves}` with hub 0.
    pub fn star(leaves: usize) -> Result<Graph> {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v)))
    }

    /// Wheel on `n` vertices: hub 0 joined to the rim cycle `1..n`.
    pub fn wheel(n: usize) -> Result<Graph> {
        if n < 4 {
            return Err(Error::OrderOutOfRange(n));
        }
        let rim = n - 1;
        let spokes = (1..n).map(|v| (0, v));
        let rim_edges = (0..rim).map(|i| (1 + i, 1 + (i + 1) % rim));
        Graph::from_edges(n, spokes.chain(rim_edges))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_neighborhood_examples() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.closed_neighborhood(0).unwrap().to_vec(), vec![0, 1, 2, 3]);
        let p3 = Graph::path(3).unwrap();
        assert_eq!(p3.closed_neighborhood(0).unwrap().to_vec(), vec![0, 1]);
        assert!(matches!(
            p3.closed_neighborhood(3),
            Err(Error::VertexOutOfRange { vertex: 3, order: 3 })
        ));
    }

    #[test]
    fn domination_on_small_graphs() {
        let k4 = Graph::complete(4).unwrap();
        assert!(k4.is_dominating(VertexSet::singleton(0)));
        let p5 = Graph::path(5).unwrap();
        assert!(!p5.is_dominating(VertexSet::singleton(2)));
        assert!(p5.is_dominating([1, 3].iter().collect()));
    }

    #[test]
    fn connectivity_examples() {
        let p3 = Graph::path(3).unwrap();
        assert!(p3.induces_connected(VertexSet::singleton(1)).unwrap());
        assert!(!p3.induces_connected([0, 2].iter().collect()).unwrap());
        let c5 = Graph::cycle(5).unwrap();
        assert!(c5.induces_connected([0, 1, 2].iter().collect()).unwrap());
        assert_eq!(c5.induces_connected(VertexSet::EMPTY), Err(Error::EmptySet));
    }

    #[test]
    fn degree_stats_examples() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(
            k4.degree_stats(),
            DegreeStats { min_degree: 3, max_degree: 3, argmax: 0 }
        );
        let w7 = Graph::wheel(7).unwrap();
        assert_eq!(
            w7.degree_stats(),
            DegreeStats { min_degree: 3, max_degree: 6, argmax: 0 }
        );
    }

    #[test]
    fn constructors_reject_bad_input() {
        assert_eq!(Graph::new(0), Err(Error::OrderOutOfRange(0)));
        assert_eq!(Graph::new(129), Err(Error::OrderOutOfRange(129)));
        let mut g = Graph::new(3).unwrap();
        assert!(g.add_edge(1, 1).is_err());
        assert!(g.add_edge(0, 3).is_err());
        let asym = vec![VertexSet::singleton(1), VertexSet::EMPTY];
        assert!(Graph::from_adjacency(asym).is_err());
    }

    #[test]
    fn induced_and_relabel_preserve_structure() {
        let c5 = Graph::cycle(5).unwrap();
        let p = c5.induced([0, 1, 2].iter().collect()).unwrap();
        assert_eq!(p.edges(), vec![(0, 1), (1, 2)]);
        let r = c5.relabel(&[4, 3, 2, 1, 0]).unwrap();
        assert_eq!(r.edge_count(), 5);
        assert!(r.has_edge(4, 3) && r.has_edge(0, 4));
    }
}
