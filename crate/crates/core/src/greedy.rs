//! Greedy supertree: fold the two-tree supertree over every cyclic rotation
//! of the input and keep the smallest result.

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::forest::{Embedding, Forest};
use crate::pairwise::supertree2;

/// A supertree of a whole input set with one embedding per input.
#[derive(Clone, Debug, Serialize)]
pub struct MultiSupertree {
    pub tree: Forest,
    pub embeddings: Vec<Embedding>,
}

impl MultiSupertree {
    pub fn order(&self) -> usize {
        self.tree.order()
    }

    pub fn verify(&self, inputs: &[Forest]) -> bool {
        inputs.len() == self.embeddings.len()
            && inputs
                .iter()
                .zip(&self.embeddings)
                .all(|(t, e)| e.verify(t, &self.tree))
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GreedyTrace {
    pub per_rotation_orders: Vec<usize>,
    pub chosen_index: usize,
    #[serde(serialize_with = "ser_ratio")]
    pub bound: Ratio<u64>,
}

fn ser_ratio<S: serde::Serializer>(
    r: &Ratio<u64>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format!("{}/{}", r.numer(), r.denom()))
}

/// Approximation factor `k/2 - 1/2 + 1/k` as an exact fraction.
pub fn greedy_bound(k: usize) -> Ratio<u64> {
    assert!(k >= 1, "bound needs at least one tree");
    let k = k as u64;
    Ratio::new(k * k - k + 2, 2 * k)
}

/// Folds `s(...s(s(T_i, T_{i+1}), T_{i+2})..., T_{i+k-1})` starting at
/// `start`, composing input embeddings through every step.
pub fn fold_rotation(trees: &[Forest], start: usize) -> Result<MultiSupertree> {
    let k = trees.len();
    let mut tree = trees[start].clone();
    let mut embeddings: Vec<Option<Embedding>> = vec![None; k];
    embeddings[start] = Some(Embedding::identity(tree.order()));
    for step in 1..k {
        let j = (start + step) % k;
        let merged = supertree2(&tree, &trees[j])?;
        for e in embeddings.iter_mut().flatten() {
            *e = e.then(&merged.embed1);
        }
        embeddings[j] = Some(merged.embed2);
        tree = merged.tree;
    }
    Ok(MultiSupertree {
        tree,
        embeddings: embeddings.into_iter().map(Option::unwrap).collect(),
    })
}

/// Runs every rotation and returns the smallest supertree (ties go to the
/// smallest start index).
pub fn greedy_supertree(trees: &[Forest]) -> Result<(MultiSupertree, GreedyTrace)> {
    if trees.is_empty() {
        return Err(Error::EmptyInput);
    }
    for t in trees {
        t.require_tree()?;
    }
    let mut best: Option<(usize, MultiSupertree)> = None;
    let mut orders = Vec::with_capacity(trees.len());
    for start in 0..trees.len() {
        let s = fold_rotation(trees, start)?;
        orders.push(s.order());
        if best.as_ref().is_none_or(|(_, b)| s.order() < b.order()) {
            best = Some((start, s));
        }
    }
    let (chosen_index, result) = best.unwrap();
    Ok((
        result,
        GreedyTrace {
            per_rotation_orders: orders,
            chosen_index,
            bound: greedy_bound(trees.len()),
        },
    ))
}
