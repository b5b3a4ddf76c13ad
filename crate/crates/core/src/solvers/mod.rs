//! Exact domination and connected domination numbers.
//!
//! Two independent routes compute `γ_c`: a pruned search over connected
//! vertex subsets ([`exact_gamma_c`]) and repeated edge contraction looking
//! for a universal vertex in the minor ([`gamma_c_by_contraction`]). The
//! census uses [`classify`], which takes the max-degree shortcuts first.

mod bfs;
mod connected;
mod contraction;
mod domination;

use serde::{Deserialize, Serialize};

pub use bfs::bfs_tree_cds;
pub use connected::{all_minimum_cds, exact_gamma_c};
pub use contraction::{contract_edge, contraction_search, gamma_c_by_contraction, ContractionWitness};
pub use domination::exact_gamma;

use crate::embedding::PlaneTriangulation;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    SubsetSearch,
    Contraction,
    BfsTreeBound,
    DeltaShortcut,
}

/// A domination value with the set that attains it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominationCertificate {
    pub value: usize,
    pub witness: VertexSet,
    pub method: Method,
}

impl DominationCertificate {
    /// Witness is dominating and has `value` elements.
    pub fn verifies_domination(&self, g: &Graph) -> bool {
        self.witness.len() == self.value
            && self.witness.fits_order(g.order())
            && g.is_dominating(self.witness)
    }

    /// Additionally the witness induces a connected subgraph.
    pub fn verifies_connected_domination(&self, g: &Graph) -> bool {
        self.verifies_domination(g) && g.induces_connected(self.witness).unwrap_or(false)
    }
}

pub(crate) fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

/// `γ_c` of a triangulation: `1` when some vertex has degree `n - 1`, `2`
/// when the maximum degree is `n - 2`, otherwise the contraction procedure.
pub fn classify(t: &PlaneTriangulation) -> DominationCertificate {
    let g = t.underlying_graph();
    classify_graph(&g).expect("triangulations are connected")
}

pub fn classify_graph(g: &Graph) -> Result<DominationCertificate> {
    require_connected(g)?;
    let n = g.order();
    let stats = g.degree_stats();
    if stats.max_degree + 1 == n {
        return Ok(DominationCertificate {
            value: 1,
            witness: VertexSet::singleton(stats.argmax),
            method: Method::DeltaShortcut,
        });
    }
    if n >= 3 && stats.max_degree + 2 == n {
        // The hub misses exactly one vertex; any common neighbor finishes a
        // connected pair.
        let hub = stats.argmax;
        let missed = g.vertices().difference(g.closed(hub));
        let far = missed.min().expect("one vertex missed");
        if let Some(x) = g.neighbors(far).intersection(g.neighbors(hub)).min() {
            return Ok(DominationCertificate {
                value: 2,
                witness: [hub, x].iter().collect(),
                method: Method::DeltaShortcut,
            });
        }
    }
    gamma_c_by_contraction(g)
}
