use std::ops::ControlFlow;

use super::{Graph, VertexSet};

/// Visits every vertex set of size `1..=max_size` that induces a connected
/// subgraph, each exactly once.
///
/// Sets are grown from their minimum vertex. At each step the candidate
/// extension is the open neighborhood of the current set minus the
/// forbidden vertices; after a candidate's subtree is explored it becomes
/// forbidden for its later siblings. Visitation order depends only on the
/// graph. The visitor may stop the walk early by returning
/// `ControlFlow::Break`. Returns the number of sets visited.
pub fn enumerate_connected_sets<F>(g: &Graph, max_size: usize, mut visitor: F) -> usize
where
    F: FnMut(VertexSet) -> ControlFlow<()>,
{
    let mut count = 0;
    if max_size == 0 {
        return 0;
    }
    for root in 0..g.order() {
        let forbidden = VertexSet::below(root + 1);
        let set = VertexSet::singleton(root);
        let ext = g.neighbors(root).difference(forbidden);
        if grow(g, max_size, set, ext, forbidden, &mut count, &mut visitor).is_break() {
            break;
        }
    }
    count
}

fn grow<F>(
    g: &Graph,
    max_size: usize,
    set: VertexSet,
    mut ext: VertexSet,
    mut forbidden: VertexSet,
    count: &mut usize,
    visitor: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(VertexSet) -> ControlFlow<()>,
{
    *count += 1;
    visitor(set)?;
    if set.len() == max_size {
        return ControlFlow::Continue(());
    }
    while let Some(v) = ext.pop_min() {
        let next = set.with(v);
        let next_ext = (ext | g.neighbors(v)).difference(next).difference(forbidden);
        grow(g, max_size, next, next_ext, forbidden, count, visitor)?;
        forbidden.insert(v);
    }
    ControlFlow::Continue(())
}
