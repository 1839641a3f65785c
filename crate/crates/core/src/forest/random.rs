//! Seeded random instance sources.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Forest;

/// How the vertices of a random forest are split into components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComponentProfile {
    /// One tree on all vertices.
    Tree,
    /// This many nonempty components of random sizes.
    Components(usize),
    /// Exactly these component orders.
    Sizes(Vec<usize>),
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform random labeled tree, decoded from a random Prüfer sequence.
pub fn random_tree<R: Rng + ?Sized>(rng: &mut R, order: usize) -> Forest {
    if order <= 2 {
        return Forest::path(order);
    }
    let seq: Vec<usize> = (0..order - 2).map(|_| rng.gen_range(0..order)).collect();
    let mut degree = vec![1usize; order];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(order - 1);
    let mut leaves: std::collections::BTreeSet<usize> =
        (0..order).filter(|&v| degree[v] == 1).collect();
    for &s in &seq {
        let leaf = *leaves.iter().next().unwrap();
        leaves.remove(&leaf);
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.insert(s);
        }
    }
    let rest: Vec<usize> = leaves.into_iter().collect();
    edges.push((rest[0], rest[1]));
    Forest::new(order, &edges).expect("Prüfer decoding yields a tree")
}

/// Random tree whose maximum degree is at most `max_degree` (≥ 2 unless the
/// order is at most 2): each new vertex picks a uniformly random parent
/// among vertices with spare degree, then labels are shuffled.
pub fn random_tree_max_degree<R: Rng + ?Sized>(
    rng: &mut R,
    order: usize,
    max_degree: usize,
) -> Forest {
    assert!(max_degree >= 2 || order <= 2, "degree cap too small");
    let mut degree = vec![0usize; order];
    let mut edges = Vec::new();
    for v in 1..order {
        let open: Vec<usize> = (0..v).filter(|&u| degree[u] < max_degree).collect();
        let p = *open.choose(rng).expect("a path always has spare degree");
        degree[p] += 1;
        degree[v] += 1;
        edges.push((p, v));
    }
    let mut perm: Vec<usize> = (0..order).collect();
    perm.shuffle(rng);
    Forest::new(order, &edges).expect("tree").relabel(&perm)
}

/// Random forest with the given component profile, deterministic in
/// `seed`.
pub fn random_forest(seed: u64, order: usize, profile: &ComponentProfile) -> Forest {
    let mut rng = rng_from_seed(seed);
    random_forest_with(&mut rng, order, profile)
}

pub fn random_forest_with<R: Rng + ?Sized>(
    rng: &mut R,
    order: usize,
    profile: &ComponentProfile,
) -> Forest {
    let sizes = match profile {
        ComponentProfile::Tree => {
            if order == 0 {
                vec![]
            } else {
                vec![order]
            }
        }
        ComponentProfile::Components(k) => {
            let k = (*k).clamp(usize::from(order > 0), order);
            // k-1 distinct cut points in 1..order
            let mut cuts: Vec<usize> = (1..order).collect();
            cuts.shuffle(rng);
            let mut cuts: Vec<usize> = cuts.into_iter().take(k.saturating_sub(1)).collect();
            cuts.sort_unstable();
            let mut sizes = Vec::with_capacity(k);
            let mut prev = 0;
            for c in cuts {
                sizes.push(c - prev);
                prev = c;
            }
            if order > 0 {
                sizes.push(order - prev);
            }
            sizes
        }
        ComponentProfile::Sizes(s) => s.clone(),
    };
    let forest = sizes.iter().fold(Forest::empty(0), |acc, &n| {
        acc.disjoint_union(&random_tree(rng, n))
    });
    let mut perm: Vec<usize> = (0..forest.order()).collect();
    perm.shuffle(rng);
    forest.relabel(&perm)
}

/// A uniformly random relabeling of `forest`.
pub fn shuffle_labels<R: Rng + ?Sized>(rng: &mut R, forest: &Forest) -> Forest {
    let mut perm: Vec<usize> = (0..forest.order()).collect();
    perm.shuffle(rng);
    forest.relabel(&perm)
}
