//! Fixed instances shared by the criterion benches.

use indforest::forest::random::{random_forest, ComponentProfile};
use indforest::generators::{gen_tightness, TightnessParams};
use indforest::Forest;

/// `count` random trees of the given order, seeded `seed, seed + 1, ...`.
pub fn random_trees(seed: u64, order: usize, count: usize) -> Vec<Forest> {
    (0..count as u64)
        .map(|i| random_forest(seed + i, order, &ComponentProfile::Tree))
        .collect()
}

/// Random forest with `components` trees.
pub fn random_forest_parts(seed: u64, order: usize, components: usize) -> Forest {
    random_forest(seed, order, &ComponentProfile::Components(components))
}

/// The three tightness caterpillars for `(a, 2, 1)`.
pub fn tightness_inputs(a: usize) -> Vec<Forest> {
    gen_tightness(TightnessParams { a, b: 2, c: 1 })
        .expect("valid tightness parameters")
        .inputs()
}
