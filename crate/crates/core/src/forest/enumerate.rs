//! Exhaustive generation of trees and forests up to isomorphism.
//!
//! Every tree of order `n + 1` containing a fixed induced subtree `T` is
//! obtained from a tree of order `n` containing `T` by attaching one leaf,
//! so growing level by level from `T` (or from `K1`) and deduplicating by
//! canonical code enumerates each class exactly once.

use std::collections::BTreeMap;

use itertools::Itertools;

use super::{forest_canonical, tree_canonical, CanonicalCode, Forest};

/// Adds one leaf in every possible position and keeps one representative
/// per isomorphism class, sorted by canonical code.
pub fn extend_trees(level: &[Forest]) -> Vec<Forest> {
    let mut next: BTreeMap<CanonicalCode, Forest> = BTreeMap::new();
    for t in level {
        for v in 0..t.order() {
            let grown = t.with_leaf(v);
            let code = tree_canonical(&grown).expect("growing a tree keeps it a tree");
            next.entry(code).or_insert(grown);
        }
    }
    next.into_values().collect()
}

/// Adds one vertex joined to any set of vertices lying in distinct
/// components (possibly none), deduplicating by forest code.
pub fn extend_forests(level: &[Forest]) -> Vec<Forest> {
    let mut next: BTreeMap<CanonicalCode, Forest> = BTreeMap::new();
    for f in level {
        let comps = f.component_vertices();
        // each component contributes either nothing or one attachment vertex
        let choices = comps
            .iter()
            .map(|c| std::iter::once(None).chain(c.iter().copied().map(Some)))
            .multi_cartesian_product();
        let mut any = false;
        for pick in choices {
            any = true;
            let attach: Vec<usize> = pick.into_iter().flatten().collect();
            let grown = f.with_new_vertex(&attach).expect("distinct components");
            next.entry(forest_canonical(&grown)).or_insert(grown);
        }
        if !any {
            // the empty forest has no components to choose from
            let grown = Forest::empty(f.order() + 1);
            next.entry(forest_canonical(&grown)).or_insert(grown);
        }
    }
    next.into_values().collect()
}

/// All trees of order `1..=max_order` up to isomorphism, grouped by order.
pub fn trees_by_order(max_order: usize) -> Vec<Vec<Forest>> {
    let mut out: Vec<Vec<Forest>> = Vec::new();
    if max_order == 0 {
        return out;
    }
    out.push(vec![Forest::empty(1)]);
    while out.len() < max_order {
        let next = extend_trees(out.last().unwrap());
        out.push(next);
    }
    out
}
