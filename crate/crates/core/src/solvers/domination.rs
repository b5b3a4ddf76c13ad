//! Exact domination number by iterative deepening branch and bound.

use super::{require_connected, DominationCertificate, Method};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};

struct Bnb<'a> {
    g: &'a Graph,
    closed: Vec<VertexSet>,
}

impl Bnb<'_> {
    /// Number of undominated vertices whose available dominator sets are
    /// pairwise disjoint, packed greedily. Each needs its own dominator.
    /// Returns `None` if some undominated vertex has no dominator left.
    fn packing_bound(&self, undominated: VertexSet, allowed: VertexSet) -> Option<usize> {
        let mut used = VertexSet::EMPTY;
        let mut bound = 0;
        for u in undominated {
            let cov = self.closed[u] & allowed;
            if cov.is_empty() {
                return None;
            }
            if cov.is_disjoint(used) {
                used |= cov;
                bound += 1;
            }
        }
        Some(bound)
    }

    fn feasible(&self, undominated: VertexSet, mut allowed: VertexSet, budget: usize) -> bool {
        if undominated.is_empty() {
            return true;
        }
        if budget == 0 {
            return false;
        }
        match self.packing_bound(undominated, allowed) {
            Some(lb) if lb <= budget => {}
            _ => return false,
        }
        // Branch on the undominated vertex with the fewest available dominators.
        let pivot = undominated
            .iter()
            .min_by_key(|&u| (self.closed[u] & allowed).len())
            .expect("nonempty");
        for c in self.closed[pivot] & allowed {
            if self.feasible(undominated - self.closed[c], allowed, budget - 1) {
                return true;
            }
            allowed.remove(c);
        }
        false
    }

    /// Lexicographically first dominating set of exactly `k` vertices, by
    /// enumerating `k`-combinations in lexicographic order.
    fn lex_first(&self, k: usize) -> Option<VertexSet> {
        let n = self.g.order();
        let mut chosen = Vec::with_capacity(k);
        self.lex_rec(0, n, k, VertexSet::full(n), &mut chosen)
    }

    fn lex_rec(
        &self,
        from: usize,
        n: usize,
        k: usize,
        undominated: VertexSet,
        chosen: &mut Vec<usize>,
    ) -> Option<VertexSet> {
        if chosen.len() == k {
            return undominated.is_empty().then(|| chosen.iter().collect());
        }
        let left = k - chosen.len();
        let later = VertexSet::full(n) - VertexSet::below(from);
        if !self.packing_bound(undominated, later).is_some_and(|lb| lb <= left) {
            return None;
        }
        for v in from..=n - left {
            chosen.push(v);
            let found = self.lex_rec(v + 1, n, k, undominated - self.closed[v], chosen);
            chosen.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

/// `γ(g)` with the lexicographically least minimum dominating set.
pub fn exact_gamma(g: &Graph) -> Result<DominationCertificate> {
    require_connected(g)?;
    let n = g.order();
    let bnb = Bnb {
        g,
        closed: (0..n).map(|v| g.closed(v)).collect(),
    };
    let all = VertexSet::full(n);
    let start = bnb.packing_bound(all, all).expect("every vertex dominates itself").max(1);
    let value = (start..=n)
        .find(|&k| bnb.feasible(all, all, k))
        .expect("the whole vertex set dominates");
    let witness = bnb.lex_first(value).expect("a set of size γ exists");
    Ok(DominationCertificate {
        value,
        witness,
        method: Method::SubsetSearch,
    })
}
