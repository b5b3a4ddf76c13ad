use super::{require_connected, DominationCertificate, Method};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};

/// Internal vertices of a breadth-first spanning tree rooted at the least
/// vertex of maximum degree. The root's neighbors are all its children, so
/// the tree has at least `Δ` leaves and the witness has at most `n - Δ`
/// vertices. An upper bound on `γ_c` only.
pub fn bfs_tree_cds(g: &Graph) -> Result<DominationCertificate> {
    require_connected(g)?;
    let root = g.degree_stats().argmax;
    let (_, parent) = g.bfs(root);
    let mut internal: VertexSet = parent.iter().flatten().copied().collect();
    if internal.is_empty() {
        // Single vertex.
        internal.insert(root);
    }
    Ok(DominationCertificate {
        value: internal.len(),
        witness: internal,
        method: Method::BfsTreeBound,
    })
}
