//! Approximate maximum common induced subforest.
//!
//! Restricting the answer to forests whose components have order at most
//! `delta` loses at most a `2/delta` fraction of the optimum. Within that
//! class a forest is described up to isomorphism by its component census,
//! so the best common subforest maximizes `Σ t_i n(T_i)` over the
//! intersection of the inputs' census sets.

mod catalog;
mod strip;
mod vectors;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::forest::{forest_isomorphism, Embedding, Forest};

pub use catalog::{
    build_catalog, build_catalog_with_cap, guarantee, RootedClass, TreeCatalog, DEFAULT_DELTA_CAP,
};
pub use strip::{strip_to_bounded, StripResult};
pub use vectors::{
    that_set, that_set_with, vector_sum, verify_realizer, CountVector, VectorSet, Witness,
    DEFAULT_STATE_BUDGET,
};

#[derive(Clone, Debug)]
pub struct PtasOptions {
    /// Overrides the component bound derived from epsilon.
    pub delta: Option<usize>,
    pub delta_cap: usize,
    /// Use `delta_cap` instead of failing when the requested bound is larger.
    pub clamp: bool,
    pub state_budget: usize,
}

impl Default for PtasOptions {
    fn default() -> Self {
        PtasOptions {
            delta: None,
            delta_cap: DEFAULT_DELTA_CAP,
            clamp: false,
            state_budget: DEFAULT_STATE_BUDGET,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PtasResult {
    pub delta_used: usize,
    pub requested_delta: usize,
    /// `1 - 2/delta_used`.
    pub guarantee: f64,
    pub best_vector: CountVector,
    pub order: usize,
    pub forest: Forest,
    pub embeddings: Vec<Embedding>,
}

/// `ceil(2 / epsilon)`, at least 1.
pub fn delta_for_epsilon(epsilon: f64) -> Result<usize> {
    if !(epsilon.is_finite() && epsilon > 0.0) {
        return Err(Error::InvalidInstance(format!(
            "epsilon must be positive, got {epsilon}"
        )));
    }
    let ratio = 2.0 / epsilon;
    let nearest = ratio.round();
    let d = if (ratio - nearest).abs() < 1e-9 {
        nearest
    } else {
        ratio.ceil()
    };
    Ok((d as usize).max(1))
}

pub fn ptas_subforest(
    forests: &[Forest],
    epsilon: f64,
    options: &PtasOptions,
) -> Result<PtasResult> {
    if forests.is_empty() {
        return Err(Error::EmptyInput);
    }
    let requested = match options.delta {
        Some(d) => d,
        None => delta_for_epsilon(epsilon)?,
    };
    let delta = if requested > options.delta_cap && options.clamp {
        options.delta_cap
    } else {
        requested
    };
    let catalog = build_catalog_with_cap(delta, options.delta_cap)?;
    let sets = forests
        .iter()
        .map(|f| that_set_with(f, &catalog, options.state_budget))
        .collect::<Result<Vec<_>>>()?;

    let smallest = (0..sets.len()).min_by_key(|&i| sets[i].len()).unwrap();
    let mut best: Option<(&CountVector, usize)> = None;
    for v in sets[smallest].vectors() {
        if sets.iter().all(|s| s.contains(v)) {
            let value = v.value(&catalog);
            if best.is_none_or(|(_, b)| value > b) {
                best = Some((v, value));
            }
        }
    }
    let (vector, order) = best.expect("the zero vector is always common");
    let vector = vector.clone();

    let chosen: Vec<Vec<usize>> = sets
        .iter()
        .map(|s| s.realizer(&vector).expect("vector is in every set"))
        .collect();
    let forest = forests[0].induced(&chosen[0]);
    let embeddings = forests
        .iter()
        .zip(&chosen)
        .map(|(f, vs)| {
            let copy = f.induced(vs);
            let iso = forest_isomorphism(&forest, &copy)
                .expect("equal censuses give isomorphic forests");
            Embedding::new(iso.into_iter().map(|x| vs[x]).collect())
        })
        .collect();
    Ok(PtasResult {
        delta_used: delta,
        requested_delta: requested,
        guarantee: guarantee(delta),
        best_vector: vector,
        order,
        forest,
        embeddings,
    })
}
