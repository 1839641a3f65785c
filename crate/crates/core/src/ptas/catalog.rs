use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::forest::{enumerate::trees_by_order, side_canonical, tree_canonical, CanonicalCode, Forest, Side};

/// Largest component bound the catalog is built for by default.
pub const DEFAULT_DELTA_CAP: usize = 6;

/// A rooted tree `(S, s)` of order at most `delta`.
#[derive(Clone, Debug)]
pub struct RootedClass {
    /// Index of the unrooted class of `S`.
    pub tree: usize,
    pub order: usize,
    pub code: CanonicalCode,
    /// Rooted classes of the components of `S - s`, each rooted at the
    /// neighbour of `s`, sorted.
    pub children: Vec<usize>,
}

/// All trees of order at most `delta` and all their rooted versions.
#[derive(Clone, Debug)]
pub struct TreeCatalog {
    pub delta: usize,
    /// Representatives `T_1..T_q`, by increasing order.
    pub trees: Vec<Forest>,
    pub codes: Vec<CanonicalCode>,
    pub rooted: Vec<RootedClass>,
    index: HashMap<CanonicalCode, usize>,
    rooted_index: HashMap<CanonicalCode, usize>,
}

impl TreeCatalog {
    pub fn q(&self) -> usize {
        self.trees.len()
    }

    pub fn tree_order(&self, i: usize) -> usize {
        self.trees[i].order()
    }

    pub fn class_of(&self, tree: &Forest) -> Option<usize> {
        if tree.order() > self.delta {
            return None;
        }
        self.index.get(&tree_canonical(tree).ok()?).copied()
    }

    pub fn rooted_class_of(&self, code: &CanonicalCode) -> Option<usize> {
        self.rooted_index.get(code).copied()
    }

    /// Component census `t(F)`, or `None` if some component is larger than
    /// `delta`.
    pub fn census(&self, forest: &Forest) -> Option<Vec<u32>> {
        let mut t = vec![0u32; self.q()];
        for c in forest.components() {
            t[self.class_of(&c)?] += 1;
        }
        Some(t)
    }
}

pub fn build_catalog(delta: usize) -> Result<TreeCatalog> {
    build_catalog_with_cap(delta, DEFAULT_DELTA_CAP)
}

pub fn build_catalog_with_cap(delta: usize, cap: usize) -> Result<TreeCatalog> {
    if delta == 0 {
        return Err(Error::InvalidInstance("component bound must be at least 1".into()));
    }
    if delta > cap {
        return Err(Error::CapExceeded {
            requested: delta,
            cap,
            guarantee: guarantee(cap),
        });
    }
    let mut catalog = TreeCatalog {
        delta,
        trees: Vec::new(),
        codes: Vec::new(),
        rooted: Vec::new(),
        index: HashMap::new(),
        rooted_index: HashMap::new(),
    };
    // Orders ascend, so every child class of a rooted tree is already known.
    for level in trees_by_order(delta) {
        for tree in level {
            let code = tree_canonical(&tree)?;
            let id = catalog.trees.len();
            catalog.index.insert(code.clone(), id);
            catalog.codes.push(code);
            for v in 0..tree.order() {
                let rcode = side_canonical(&tree, Side::root(v));
                if catalog.rooted_index.contains_key(&rcode) {
                    continue;
                }
                let mut children: Vec<usize> = tree
                    .neighbors(v)
                    .iter()
                    .map(|&c| catalog.rooted_index[&side_canonical(&tree, Side::below(c, v))])
                    .collect();
                children.sort_unstable();
                catalog.rooted_index.insert(rcode.clone(), catalog.rooted.len());
                catalog.rooted.push(RootedClass {
                    tree: id,
                    order: tree.order(),
                    code: rcode,
                    children,
                });
            }
            catalog.trees.push(tree);
        }
    }
    Ok(catalog)
}

/// Approximation factor `1 - 2/delta` guaranteed with components of order
/// at most `delta`.
pub fn guarantee(delta: usize) -> f64 {
    1.0 - 2.0 / delta as f64
}
