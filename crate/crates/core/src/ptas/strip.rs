use serde::Serialize;

use crate::forest::{Forest, RootedForest};

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StripResult {
    /// Removed vertices, sorted.
    pub removed: Vec<usize>,
    pub residual: Forest,
    /// Vertex `i` of `residual` is `kept[i]` of the input.
    pub kept: Vec<usize>,
}

/// Roots every component at its smallest vertex and repeatedly deletes a
/// deepest vertex having at least `delta` descendants. Every removed vertex
/// owns at least `delta` surviving descendants, so at most `n / delta`
/// vertices go, and every remaining component has order at most `delta`.
pub fn strip_to_bounded(forest: &Forest, delta: usize) -> StripResult {
    assert!(delta >= 1, "component bound must be at least 1");
    let rooted = RootedForest::at_min_vertices(forest);
    let mut by_depth: Vec<usize> = (0..forest.order()).collect();
    by_depth.sort_by_key(|&v| (std::cmp::Reverse(rooted.depth[v]), v));
    // Removing a vertex only changes counts of its ancestors, so one pass
    // from the deepest level up performs the iterative rule.
    let mut size = vec![1usize; forest.order()];
    let mut removed = vec![false; forest.order()];
    for &u in &by_depth {
        size[u] = 1 + rooted
            .children(u)
            .filter(|&c| !removed[c])
            .map(|c| size[c])
            .sum::<usize>();
        if size[u] > delta {
            removed[u] = true;
        }
    }
    let kept: Vec<usize> = (0..forest.order()).filter(|&v| !removed[v]).collect();
    StripResult {
        removed: (0..forest.order()).filter(|&v| removed[v]).collect(),
        residual: forest.induced(&kept),
        kept,
    }
}
