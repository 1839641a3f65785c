//! Exhaustive reference solvers for small instances.
//!
//! Containment is always decided by backtracking so the oracles share no
//! code path with the subtree-based solvers they are checked against.

use std::collections::HashSet;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::forest::{
    enumerate::{extend_forests, extend_trees},
    find_induced_backtracking, forest_canonical, Embedding, Forest, SearchBudget,
    DEFAULT_NODE_BUDGET,
};

#[derive(Clone, Copy, Debug)]
pub struct OracleBudget {
    /// Largest superforest order explored.
    pub max_host_order: usize,
    /// Largest input whose vertex subsets are enumerated.
    pub max_subset_order: usize,
    /// Node budget of each containment search.
    pub node_budget: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_host_order: 16,
            max_subset_order: 20,
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleResult {
    pub order: usize,
    pub forest: Forest,
    pub embeddings: Vec<Embedding>,
}

/// Which candidate hosts the superforest search enumerates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HostClass {
    /// Trees when every input is a tree, forests otherwise.
    Auto,
    Forests,
}

fn search(pattern: &Forest, host: &Forest, budget: &OracleBudget) -> Result<Option<Embedding>> {
    find_induced_backtracking(
        pattern,
        host,
        SearchBudget {
            nodes: budget.node_budget,
        },
    )
}

fn embed_all(
    inputs: &[Forest],
    host: &Forest,
    budget: &OracleBudget,
) -> Result<Option<Vec<Embedding>>> {
    let mut out = Vec::with_capacity(inputs.len());
    for f in inputs {
        match search(f, host, budget)? {
            Some(e) => out.push(e),
            None => return Ok(None),
        }
    }
    Ok(Some(out))
}

fn smallest(forests: &[Forest]) -> usize {
    (0..forests.len())
        .min_by_key(|&i| forests[i].order())
        .unwrap()
}

/// Tries the induced subforests of a smallest input from the largest down
/// and returns the first one contained in every input.
pub fn oracle_max_subforest(forests: &[Forest], budget: &OracleBudget) -> Result<OracleResult> {
    max_common(forests, budget, false)
}

/// Largest tree contained in every input, which must all be trees.
pub fn oracle_max_common_subtree(
    forests: &[Forest],
    budget: &OracleBudget,
) -> Result<OracleResult> {
    for f in forests {
        f.require_tree()?;
    }
    max_common(forests, budget, true)
}

fn max_common(forests: &[Forest], budget: &OracleBudget, connected: bool) -> Result<OracleResult> {
    if forests.is_empty() {
        return Err(Error::EmptyInput);
    }
    let base_index = smallest(forests);
    let base = &forests[base_index];
    if base.order() > budget.max_subset_order {
        return Err(Error::OrderLimit {
            what: "subset enumeration",
            order: base.order(),
            limit: budget.max_subset_order,
        });
    }
    for size in (0..=base.order()).rev() {
        let mut seen = HashSet::new();
        for subset in (0..base.order()).combinations(size) {
            let candidate = base.induced(&subset);
            if connected && !candidate.is_tree() {
                continue;
            }
            if !seen.insert(forest_canonical(&candidate)) {
                continue;
            }
            let mut embeddings = Vec::with_capacity(forests.len());
            let mut ok = true;
            for (i, f) in forests.iter().enumerate() {
                if i == base_index {
                    embeddings.push(Embedding::new(subset.clone()));
                    continue;
                }
                match search(&candidate, f, budget)? {
                    Some(e) => embeddings.push(e),
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                return Ok(OracleResult {
                    order: size,
                    forest: candidate,
                    embeddings,
                });
            }
        }
    }
    unreachable!("the empty forest is common to all inputs")
}

/// Level-by-level growth from a largest input. Every host of order `N`
/// containing that input arises from a host of order `N - 1` containing it
/// by adding one vertex (one leaf, for trees).
struct Levels<'a> {
    inputs: &'a [Forest],
    trees: bool,
    level: Vec<Forest>,
    budget: OracleBudget,
}

impl<'a> Levels<'a> {
    fn new(inputs: &'a [Forest], class: HostClass, budget: &OracleBudget) -> Result<Self> {
        if inputs.is_empty() {
            return Err(Error::EmptyInput);
        }
        let largest = (0..inputs.len())
            .max_by_key(|&i| (inputs[i].order(), std::cmp::Reverse(i)))
            .unwrap();
        let trees = class == HostClass::Auto && inputs.iter().all(Forest::is_tree);
        Ok(Levels {
            inputs,
            trees,
            level: vec![inputs[largest].clone()],
            budget: *budget,
        })
    }

    fn order(&self) -> usize {
        self.level[0].order()
    }

    fn advance(&mut self) -> Result<()> {
        let next = self.order() + 1;
        if next > self.budget.max_host_order {
            return Err(Error::OrderLimit {
                what: "superforest",
                order: next,
                limit: self.budget.max_host_order,
            });
        }
        self.level = if self.trees {
            extend_trees(&self.level)
        } else {
            extend_forests(&self.level)
        };
        Ok(())
    }

    fn hosts_of_current_order(&self) -> Result<Vec<(Forest, Vec<Embedding>)>> {
        let mut found = Vec::new();
        for host in &self.level {
            if let Some(e) = embed_all(self.inputs, host, &self.budget)? {
                found.push((host.clone(), e));
            }
        }
        Ok(found)
    }
}

/// Smallest forest containing every input. When all inputs are trees only
/// trees are searched.
pub fn oracle_min_superforest(forests: &[Forest], budget: &OracleBudget) -> Result<OracleResult> {
    oracle_min_superforest_in(forests, budget, HostClass::Auto)
}

pub fn oracle_min_superforest_in(
    forests: &[Forest],
    budget: &OracleBudget,
    class: HostClass,
) -> Result<OracleResult> {
    let mut levels = Levels::new(forests, class, budget)?;
    loop {
        for host in &levels.level {
            if let Some(embeddings) = embed_all(forests, host, budget)? {
                return Ok(OracleResult {
                    order: host.order(),
                    forest: host.clone(),
                    embeddings,
                });
            }
        }
        levels.advance()?;
    }
}

/// Every minimum superforest up to isomorphism, with the minimum order.
pub fn oracle_all_min_superforests(
    forests: &[Forest],
    budget: &OracleBudget,
    class: HostClass,
) -> Result<(usize, Vec<Forest>)> {
    let mut levels = Levels::new(forests, class, budget)?;
    loop {
        let found = levels.hosts_of_current_order()?;
        if !found.is_empty() {
            return Ok((levels.order(), found.into_iter().map(|(h, _)| h).collect()));
        }
        levels.advance()?;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> OracleBudget {
        OracleBudget::default()
    }

    #[test]
    fn max_subforest_examples() {
        let r = oracle_max_subforest(&[Forest::path(4), Forest::star(3)], &b()).unwrap();
        assert_eq!(r.order, 3);
        let f = Forest::new(5, &[(0, 1), (3, 4)]).unwrap();
        assert_eq!(oracle_max_subforest(&[f.clone(), f], &b()).unwrap().order, 5);
        // two isolated vertices fit in both P4 and the star
        let r = oracle_max_subforest(&[Forest::path(3), Forest::empty(2)], &b()).unwrap();
        assert_eq!(r.order, 2);
    }

    #[test]
    fn max_common_subtree_is_connected() {
        let p4 = Forest::path(4);
        let two_edges = Forest::new(4, &[(0, 1), (2, 3)]).unwrap();
        let f = Forest::new(5, &[(0, 1), (1, 2), (3, 4), (0, 3)]).unwrap();
        assert_eq!(oracle_max_common_subtree(&[p4.clone(), f], &b()).unwrap().order, 4);
        assert!(oracle_max_common_subtree(&[p4, two_edges], &b()).is_err());
    }

    #[test]
    fn min_superforest_examples() {
        let r = oracle_min_superforest(&[Forest::path(3), Forest::star(3)], &b()).unwrap();
        assert_eq!(r.order, 4);
        let r = oracle_min_superforest(&[Forest::path(5), Forest::star(3)], &b()).unwrap();
        assert_eq!(r.order, 6);
        for (f, e) in [Forest::path(5), Forest::star(3)].iter().zip(&r.embeddings) {
            assert!(e.verify(f, &r.forest));
        }
        let t = Forest::star(4);
        assert_eq!(oracle_min_superforest(&[t], &b()).unwrap().order, 5);
    }

    #[test]
    fn forest_hosts_agree_and_are_trees() {
        let inputs = [Forest::path(4), Forest::star(3)];
        let (n, all) = oracle_all_min_superforests(&inputs, &b(), HostClass::Forests).unwrap();
        assert_eq!(n, 5);
        assert!(all.iter().all(Forest::is_tree));
    }

    #[test]
    fn forest_inputs() {
        let two = Forest::empty(2);
        let r = oracle_min_superforest(&[two, Forest::path(2)], &b()).unwrap();
        assert_eq!(r.order, 3);
    }

    #[test]
    fn limits() {
        let small = OracleBudget {
            max_host_order: 5,
            ..b()
        };
        let r = oracle_min_superforest(&[Forest::path(5), Forest::star(3)], &small);
        assert!(matches!(r, Err(Error::OrderLimit { .. })));
    }
}
