//! Component-census vector sets `t̂(F)` with realizers.
//!
//! Root every component. For a vertex `u` with children `v_1..v_d` the DP
//! keeps
//!
//! - `none(u)`: censuses of induced subforests of `F_u` avoiding `u`,
//!   the sum of `all(v_j)`;
//! - `class(u, R)` for every rooted class `R = (S, s)`: censuses of induced
//!   subforests of `F_u` in which the component of `u` is `S` with `u` at
//!   `s`, counting every component except that one;
//! - `all(u)`: `none(u)` together with `class(u, R) + e(S)` for every `R`.
//!
//! `class(u, R)` assigns the child classes of `R` injectively to children
//! of `u`. Children are swept in order while tracking which sub-multiset of
//! the child classes is already placed; an unassigned child contributes
//! `none(v)`.

use std::collections::HashMap;
use std::sync::Arc;

use indexmap::IndexMap;
use serde::Serialize;

use super::catalog::TreeCatalog;
use crate::error::{Error, Result};
use crate::forest::{Forest, RootedForest};

/// Default cap on the number of vectors held by a single set.
pub const DEFAULT_STATE_BUDGET: usize = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct CountVector {
    pub t: Vec<u32>,
}

impl CountVector {
    pub fn zero(q: usize) -> Self {
        CountVector { t: vec![0; q] }
    }

    pub fn unit(q: usize, i: usize) -> Self {
        let mut v = Self::zero(q);
        v.t[i] = 1;
        v
    }

    pub fn plus(&self, other: &CountVector) -> CountVector {
        CountVector {
            t: self.t.iter().zip(&other.t).map(|(a, b)| a + b).collect(),
        }
    }

    /// Number of vertices `Σ t_i n(T_i)` of any forest with this census.
    pub fn value(&self, catalog: &TreeCatalog) -> usize {
        self.t
            .iter()
            .enumerate()
            .map(|(i, &c)| c as usize * catalog.tree_order(i))
            .sum()
    }
}

/// Vertex set of a realizing subforest, shared structurally between sets.
#[derive(Debug)]
pub enum Witness {
    Empty,
    Vertex(usize),
    Join(Arc<Witness>, Arc<Witness>),
}

impl Witness {
    pub fn vertices(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(w) = stack.pop() {
            match w {
                Witness::Empty => {}
                Witness::Vertex(v) => out.push(*v),
                Witness::Join(a, b) => {
                    stack.push(a);
                    stack.push(b);
                }
            }
        }
        out.sort_unstable();
        out
    }
}

fn join(a: &Arc<Witness>, b: &Arc<Witness>) -> Arc<Witness> {
    match (&**a, &**b) {
        (Witness::Empty, _) => b.clone(),
        (_, Witness::Empty) => a.clone(),
        _ => Arc::new(Witness::Join(a.clone(), b.clone())),
    }
}

/// A set of census vectors, each with one realizer. Iteration follows
/// insertion order.
#[derive(Clone, Debug)]
pub struct VectorSet {
    q: usize,
    entries: IndexMap<CountVector, Arc<Witness>>,
}

impl VectorSet {
    pub fn empty(q: usize) -> Self {
        VectorSet {
            q,
            entries: IndexMap::new(),
        }
    }

    /// `{0}` realized by the empty subforest.
    pub fn zero(q: usize) -> Self {
        let mut s = Self::empty(q);
        s.entries
            .insert(CountVector::zero(q), Arc::new(Witness::Empty));
        s
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, v: &CountVector) -> bool {
        self.entries.contains_key(v)
    }

    pub fn vectors(&self) -> impl Iterator<Item = &CountVector> {
        self.entries.keys()
    }

    /// Sorted vertex set of an induced subforest with census `v`.
    pub fn realizer(&self, v: &CountVector) -> Option<Vec<usize>> {
        self.entries.get(v).map(|w| w.vertices())
    }

    /// Keeps the existing realizer when `v` is already present.
    pub fn insert(&mut self, v: CountVector, w: Arc<Witness>) {
        self.entries.entry(v).or_insert(w);
    }

    fn absorb(&mut self, other: VectorSet, budget: usize) -> Result<()> {
        for (v, w) in other.entries {
            self.insert(v, w);
        }
        self.check(budget)
    }

    fn check(&self, budget: usize) -> Result<()> {
        if self.len() > budget {
            return Err(Error::StateExplosion {
                size: self.len(),
                budget,
            });
        }
        Ok(())
    }

    fn shifted(&self, by: &CountVector) -> VectorSet {
        VectorSet {
            q: self.q,
            entries: self
                .entries
                .iter()
                .map(|(v, w)| (v.plus(by), w.clone()))
                .collect(),
        }
    }

    fn sum_bounded(&self, other: &VectorSet, budget: usize) -> Result<VectorSet> {
        let mut out = VectorSet::empty(self.q);
        for (a, wa) in &self.entries {
            for (b, wb) in &other.entries {
                let v = a.plus(b);
                if !out.entries.contains_key(&v) {
                    out.entries.insert(v, join(wa, wb));
                    out.check(budget)?;
                }
            }
        }
        Ok(out)
    }
}

/// Minkowski sum `{a + b}`; realizers are unions of the summands'
/// realizers.
pub fn vector_sum(a: &VectorSet, b: &VectorSet) -> VectorSet {
    assert_eq!(a.q, b.q, "vector sets over different catalogs");
    a.sum_bounded(b, usize::MAX).expect("unbounded")
}

struct VertexState {
    none: VectorSet,
    all: VectorSet,
    class: Vec<Option<VectorSet>>,
}

/// `t̂(F)`: censuses of all induced subforests of `forest` whose components
/// have order at most `catalog.delta`.
pub fn that_set(forest: &Forest, catalog: &TreeCatalog) -> Result<VectorSet> {
    that_set_with(forest, catalog, DEFAULT_STATE_BUDGET)
}

pub fn that_set_with(forest: &Forest, catalog: &TreeCatalog, budget: usize) -> Result<VectorSet> {
    let q = catalog.q();
    let rooted = RootedForest::at_min_vertices(forest);
    let mut states: Vec<Option<VertexState>> = (0..forest.order()).map(|_| None).collect();
    for &u in rooted.order.iter().rev() {
        let kids: Vec<VertexState> = rooted
            .children(u)
            .collect::<Vec<_>>()
            .into_iter()
            .map(|v| states[v].take().expect("children come first"))
            .collect();
        states[u] = Some(vertex_state(u, &kids, catalog, budget)?);
    }
    let mut total = VectorSet::zero(q);
    for &r in &rooted.roots {
        let s = states[r].take().expect("root state");
        total = total.sum_bounded(&s.all, budget)?;
    }
    Ok(total)
}

fn vertex_state(
    u: usize,
    kids: &[VertexState],
    catalog: &TreeCatalog,
    budget: usize,
) -> Result<VertexState> {
    let q = catalog.q();
    let mut none = VectorSet::zero(q);
    for k in kids {
        none = none.sum_bounded(&k.all, budget)?;
    }
    let mut all = none.clone();
    let mut class = Vec::with_capacity(catalog.rooted.len());
    for r in &catalog.rooted {
        let set = if r.children.len() > kids.len() {
            None
        } else {
            place_children(u, kids, &r.children, q, budget)?
        };
        if let Some(s) = &set {
            all.absorb(s.shifted(&CountVector::unit(q, r.tree)), budget)?;
        }
        class.push(set);
    }
    Ok(VertexState { none, all, class })
}

/// Sweeps the children of `u`, assigning each either to nothing or to one
/// still unplaced child class of the rooted class being built.
fn place_children(
    u: usize,
    kids: &[VertexState],
    wanted: &[usize],
    q: usize,
    budget: usize,
) -> Result<Option<VectorSet>> {
    let mut types: Vec<usize> = wanted.to_vec();
    types.dedup();
    let need: Vec<u8> = types
        .iter()
        .map(|t| wanted.iter().filter(|w| *w == t).count() as u8)
        .collect();
    let total_need = wanted.len();

    let mut start = VectorSet::empty(q);
    start.insert(CountVector::zero(q), Arc::new(Witness::Vertex(u)));
    let mut layer: HashMap<Vec<u8>, VectorSet> = HashMap::new();
    layer.insert(vec![0; types.len()], start);
    for (pos, kid) in kids.iter().enumerate() {
        let left_after = kids.len() - pos - 1;
        let mut next: HashMap<Vec<u8>, VectorSet> = HashMap::new();
        // deterministic processing order
        let mut keys: Vec<Vec<u8>> = layer.keys().cloned().collect();
        keys.sort_unstable();
        for used in keys {
            let set = &layer[&used];
            let placed: usize = used.iter().map(|&c| c as usize).sum();
            if total_need - placed <= left_after {
                let s = set.sum_bounded(&kid.none, budget)?;
                merge(&mut next, used.clone(), s, budget)?;
            }
            for (ti, &t) in types.iter().enumerate() {
                if used[ti] == need[ti] {
                    continue;
                }
                let Some(child_set) = &kid.class[t] else {
                    continue;
                };
                let s = set.sum_bounded(child_set, budget)?;
                let mut after = used.clone();
                after[ti] += 1;
                merge(&mut next, after, s, budget)?;
            }
        }
        layer = next;
    }
    Ok(layer.remove(&need))
}

fn merge(
    layer: &mut HashMap<Vec<u8>, VectorSet>,
    key: Vec<u8>,
    set: VectorSet,
    budget: usize,
) -> Result<()> {
    match layer.get_mut(&key) {
        Some(existing) => existing.absorb(set, budget),
        None => {
            layer.insert(key, set);
            Ok(())
        }
    }
}

/// Whether `vertices` induce a subforest of `forest` with census `v`.
pub fn verify_realizer(
    forest: &Forest,
    catalog: &TreeCatalog,
    v: &CountVector,
    vertices: &[usize],
) -> bool {
    let mut sorted = vertices.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len() == vertices.len()
        && sorted.iter().all(|&x| x < forest.order())
        && catalog.census(&forest.induced(&sorted)).as_ref() == Some(&v.t)
}

#[cfg(test)]
mod tests {
    use super::super::catalog::build_catalog;
    use super::*;
    use std::collections::BTreeSet;

    fn set_of(s: &VectorSet) -> BTreeSet<Vec<u32>> {
        s.vectors().map(|v| v.t.clone()).collect()
    }

    fn brute(forest: &Forest, catalog: &TreeCatalog) -> BTreeSet<Vec<u32>> {
        let n = forest.order();
        (0u32..1 << n)
            .filter_map(|mask| {
                let vs: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
                catalog.census(&forest.induced(&vs))
            })
            .collect()
    }

    fn set(vs: &[&[u32]]) -> BTreeSet<Vec<u32>> {
        vs.iter().map(|v| v.to_vec()).collect()
    }

    #[test]
    fn sums() {
        let mut a = VectorSet::empty(2);
        a.insert(CountVector { t: vec![1, 0] }, Arc::new(Witness::Vertex(0)));
        let mut b = VectorSet::empty(2);
        b.insert(CountVector { t: vec![0, 1] }, Arc::new(Witness::Vertex(1)));
        assert_eq!(set_of(&vector_sum(&a, &b)), set(&[&[1, 1]]));
        assert_eq!(set_of(&vector_sum(&VectorSet::zero(2), &b)), set_of(&b));
        let mut c = VectorSet::zero(2);
        c.insert(CountVector { t: vec![1, 0] }, Arc::new(Witness::Vertex(0)));
        assert_eq!(set_of(&vector_sum(&c, &c)), set(&[&[0, 0], &[1, 0], &[2, 0]]));
    }

    #[test]
    fn small_examples() {
        let c2 = build_catalog(2).unwrap();
        let k1 = that_set(&Forest::empty(1), &c2).unwrap();
        assert_eq!(set_of(&k1), set(&[&[0, 0], &[1, 0]]));
        let p4 = that_set(&Forest::path(4), &c2).unwrap();
        assert_eq!(
            set_of(&p4),
            set(&[&[0, 0], &[1, 0], &[2, 0], &[0, 1], &[1, 1]])
        );
        let star = that_set(&Forest::star(3), &c2).unwrap();
        assert_eq!(
            set_of(&star),
            set(&[&[0, 0], &[1, 0], &[2, 0], &[3, 0], &[0, 1]])
        );
    }

    #[test]
    fn matches_brute_force_and_realizers_verify() {
        let mut rng = crate::forest::random::rng_from_seed(11);
        for delta in 1..=4 {
            let c = build_catalog(delta).unwrap();
            for n in 0..=8 {
                let f = crate::forest::random::random_forest_with(
                    &mut rng,
                    n,
                    &crate::forest::random::ComponentProfile::Components(1 + n / 4),
                );
                let got = that_set(&f, &c).unwrap();
                assert_eq!(set_of(&got), brute(&f, &c), "delta {delta} forest {f:?}");
                for v in got.vectors() {
                    let w = got.realizer(v).unwrap();
                    assert!(verify_realizer(&f, &c, v, &w));
                }
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let c = build_catalog(3).unwrap();
        let r = that_set_with(&Forest::path(12), &c, 5);
        assert!(matches!(r, Err(Error::StateExplosion { budget: 5, .. })));
    }
}
