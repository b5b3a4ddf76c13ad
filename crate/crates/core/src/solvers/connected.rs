//! Exact connected domination by growth of connected vertex sets.
//!
//! Connected sets are grown from their minimum vertex exactly as in
//! [`crate::graph::enumerate_connected_sets`], with three admissible cuts on
//! a partial set `S` that may still gain `r` vertices:
//!
//! * count: every added vertex is adjacent to the set, so it dominates at
//!   most `Δ - 1` new vertices, and at most the best single vertex's
//!   coverage of what is left;
//! * dead vertex: an undominated vertex all of whose closed neighbors are
//!   forbidden can never be dominated;
//! * reach: the additions form a connected extension, so they lie within
//!   `r` steps of `S` through non-forbidden vertices, and everything left
//!   must be adjacent to that region.

use rayon::prelude::*;

use super::{require_connected, DominationCertificate, Method};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};

pub(super) struct CdsSearch<'a> {
    g: &'a Graph,
    all: VertexSet,
    closed: Vec<VertexSet>,
    max_degree: usize,
    target: usize,
}

impl<'a> CdsSearch<'a> {
    pub(super) fn new(g: &'a Graph, target: usize) -> Self {
        let n = g.order();
        CdsSearch {
            g,
            all: g.vertices(),
            closed: (0..n).map(|v| g.closed(v)).collect(),
            max_degree: g.degree_stats().max_degree,
            target,
        }
    }

    fn hopeless(&self, set: VertexSet, dominated: VertexSet, forbidden: VertexSet) -> bool {
        let left = self.target - set.len();
        let undominated = self.all - dominated;
        let missing = undominated.len();
        if missing > left * self.max_degree.saturating_sub(1) {
            return true;
        }
        let allowed = self.all - forbidden - set;
        let mut best_gain = 0;
        for u in undominated {
            if self.closed[u].is_disjoint(allowed) {
                return true;
            }
        }
        for x in allowed {
            let gain = (self.closed[x] & undominated).len();
            best_gain = best_gain.max(gain);
        }
        if missing > left * best_gain {
            return true;
        }
        if left >= 2 {
            let mut region = set;
            let mut frontier = set;
            for _ in 0..left {
                let mut next = VertexSet::EMPTY;
                for v in frontier {
                    next |= self.g.neighbors(v);
                }
                next = (next & allowed) - region;
                if next.is_empty() {
                    break;
                }
                region |= next;
                frontier = next;
            }
            if !undominated.is_subset(self.g.dominated_by(region)) {
                return true;
            }
        }
        false
    }

    /// Depth-first growth; `found` returns `true` to stop the search.
    fn grow<F>(
        &self,
        set: VertexSet,
        mut ext: VertexSet,
        mut forbidden: VertexSet,
        dominated: VertexSet,
        found: &mut F,
    ) -> bool
    where
        F: FnMut(VertexSet) -> bool,
    {
        if dominated == self.all {
            return set.len() == self.target && found(set);
        }
        if set.len() == self.target || self.hopeless(set, dominated, forbidden) {
            return false;
        }
        while let Some(v) = ext.pop_min() {
            let next = set.with(v);
            let next_ext = (ext | self.g.neighbors(v)) - next - forbidden;
            if self.grow(next, next_ext, forbidden, dominated | self.closed[v], found) {
                return true;
            }
            forbidden.insert(v);
        }
        false
    }

    fn grow_from<F>(&self, root: usize, found: &mut F) -> bool
    where
        F: FnMut(VertexSet) -> bool,
    {
        let forbidden = VertexSet::below(root + 1);
        let set = VertexSet::singleton(root);
        let ext = self.g.neighbors(root) - forbidden;
        self.grow(set, ext, forbidden, self.closed[root], found)
    }

    /// First connected dominating set of size `target` in search order.
    pub(super) fn first(&self) -> Option<VertexSet> {
        (0..self.g.order()).into_par_iter().find_map_first(|root| {
            let mut hit = None;
            self.grow_from(root, &mut |s| {
                hit = Some(s);
                true
            });
            hit
        })
    }

    /// All connected dominating sets of size `target`, lexicographically
    /// sorted.
    pub(super) fn all(&self) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = (0..self.g.order())
            .into_par_iter()
            .flat_map_iter(|root| {
                let mut hits = Vec::new();
                self.grow_from(root, &mut |s| {
                    hits.push(s);
                    false
                });
                hits
            })
            .collect();
        out.sort_unstable();
        out
    }
}

/// `γ_c(g)` with the first minimum connected dominating set in growth order
/// (roots ascending, then smallest extension first).
pub fn exact_gamma_c(g: &Graph) -> Result<DominationCertificate> {
    require_connected(g)?;
    let n = g.order();
    for k in 1..=n {
        if let Some(witness) = CdsSearch::new(g, k).first() {
            return Ok(DominationCertificate {
                value: k,
                witness,
                method: Method::SubsetSearch,
            });
        }
    }
    unreachable!("a connected graph dominates itself")
}

/// Every connected dominating set of size `γ_c(g)`, sorted.
pub fn all_minimum_cds(g: &Graph) -> Result<Vec<VertexSet>> {
    let value = exact_gamma_c(g)?.value;
    Ok(CdsSearch::new(g, value).all())
}
