//! Induced embeddings and containment search.

use serde::Serialize;

use super::{forest_canonical, CanonicalCode, Forest};
use crate::error::{Error, Result};
use crate::pairwise::mcs_trees;

pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

/// Injective vertex map from a pattern forest into a host forest.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(transparent)]
pub struct Embedding {
    map: Vec<usize>,
}

impl Embedding {
    pub fn new(map: Vec<usize>) -> Self {
        Embedding { map }
    }

    pub fn identity(order: usize) -> Self {
        Embedding {
            map: (0..order).collect(),
        }
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn image(&self, v: usize) -> usize {
        self.map[v]
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// `self: P -> H` followed by `outer: H -> G`.
    pub fn then(&self, outer: &Embedding) -> Embedding {
        Embedding {
            map: self.map.iter().map(|&h| outer.map[h]).collect(),
        }
    }

    /// Checks edge by edge that this is an induced embedding of `pattern`
    /// into `host`: injective, and `uv` is an edge of the pattern exactly
    /// when the images are adjacent in the host.
    pub fn verify(&self, pattern: &Forest, host: &Forest) -> bool {
        if self.map.len() != pattern.order() {
            return false;
        }
        let mut hit = vec![false; host.order()];
        for &h in &self.map {
            if h >= host.order() || hit[h] {
                return false;
            }
            hit[h] = true;
        }
        // Edges among the image must all come from the pattern: count them
        // from the host side and compare.
        let mut host_edges = 0;
        for &h in &self.map {
            host_edges += host.neighbors(h).iter().filter(|&&w| hit[w]).count();
        }
        host_edges /= 2;
        if host_edges != pattern.edge_count() {
            return false;
        }
        pattern
            .edges()
            .iter()
            .all(|&(u, v)| host.has_edge(self.map[u], self.map[v]))
    }
}

/// Node-expansion limit for exponential searches.
#[derive(Clone, Copy, Debug)]
pub struct SearchBudget {
    pub nodes: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            nodes: DEFAULT_NODE_BUDGET,
        }
    }
}

/// Finds an induced copy of `pattern` in `host` with the default budget.
pub fn contains_induced(pattern: &Forest, host: &Forest) -> Result<Option<Embedding>> {
    contains_induced_with(pattern, host, SearchBudget::default())
}

/// Finds an induced copy of `pattern` in `host`.
///
/// A connected pattern in a tree host is decided in polynomial time through
/// the maximum common subtree; every other case falls back to
/// [`find_induced_backtracking`].
pub fn contains_induced_with(
    pattern: &Forest,
    host: &Forest,
    budget: SearchBudget,
) -> Result<Option<Embedding>> {
    if pattern.is_tree() && host.is_tree() {
        if pattern.order() > host.order() {
            return Ok(None);
        }
        let mcs = mcs_trees(pattern, host)?;
        if mcs.size < pattern.order() {
            return Ok(None);
        }
        // embed1 is a bijection common -> pattern; invert it.
        let mut map = vec![0; pattern.order()];
        for (s, &p) in mcs.embed1.map().iter().enumerate() {
            map[p] = mcs.embed2.image(s);
        }
        return Ok(Some(Embedding::new(map)));
    }
    find_induced_backtracking(pattern, host, budget)
}

struct PatternComponent {
    /// Pattern vertices in BFS order from the chosen root.
    order: Vec<usize>,
    parent: Vec<Option<usize>>,
    code: CanonicalCode,
}

struct Search<'a> {
    pattern: &'a Forest,
    host: &'a Forest,
    comps: Vec<PatternComponent>,
    map: Vec<usize>,
    used: Vec<bool>,
    used_count: usize,
    remaining: usize,
    /// Smallest host vertex used by each placed component.
    min_image: Vec<usize>,
    nodes: u64,
    budget: u64,
}

/// Backtracking search for an induced copy of `pattern` in `host`.
///
/// Pattern components are placed one at a time, largest first, with
/// isomorphic components forced into increasing order of their smallest
/// host vertex so that permutations of equal components are explored once.
pub fn find_induced_backtracking(
    pattern: &Forest,
    host: &Forest,
    budget: SearchBudget,
) -> Result<Option<Embedding>> {
    if pattern.order() > host.order() {
        return Ok(None);
    }
    let mut comps: Vec<PatternComponent> = pattern
        .component_vertices()
        .into_iter()
        .map(|vs| {
            let root = *vs
                .iter()
                .max_by_key(|&&v| (pattern.degree(v), std::cmp::Reverse(v)))
                .unwrap();
            let mut order = vec![root];
            let mut parent = vec![None];
            let mut i = 0;
            while i < order.len() {
                let u = order[i];
                for &w in pattern.neighbors(u) {
                    if parent[i] != Some(w) {
                        order.push(w);
                        parent.push(Some(u));
                    }
                }
                i += 1;
            }
            let code = forest_canonical(&pattern.induced(&vs));
            PatternComponent {
                order,
                parent,
                code,
            }
        })
        .collect();
    comps.sort_by(|a, b| {
        b.order
            .len()
            .cmp(&a.order.len())
            .then_with(|| a.code.cmp(&b.code))
    });
    let mut search = Search {
        pattern,
        host,
        map: vec![usize::MAX; pattern.order()],
        used: vec![false; host.order()],
        used_count: 0,
        remaining: pattern.order(),
        min_image: vec![usize::MAX; comps.len()],
        comps,
        nodes: 0,
        budget: budget.nodes,
    };
    if search.place(0, 0)? {
        Ok(Some(Embedding::new(search.map)))
    } else {
        Ok(None)
    }
}

impl Search<'_> {
    fn place(&mut self, ci: usize, pos: usize) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        if ci == self.comps.len() {
            return Ok(true);
        }
        let comp = &self.comps[ci];
        if pos == comp.order.len() {
            let min = comp.order.iter().map(|&v| self.map[v]).min().unwrap();
            if ci > 0 && self.comps[ci - 1].code == comp.code && min < self.min_image[ci - 1] {
                return Ok(false);
            }
            self.min_image[ci] = min;
            return self.place(ci + 1, 0);
        }
        if self.remaining > self.host.order() - self.used_count {
            return Ok(false);
        }
        let v = comp.order[pos];
        let need = self.pattern.degree(v);
        let candidates: Vec<usize> = match comp.parent[pos] {
            None => (0..self.host.order()).collect(),
            Some(p) => self.host.neighbors(self.map[p]).to_vec(),
        };
        let anchor = comp.parent[pos].map(|p| self.map[p]);
        for h in candidates {
            if self.used[h] || self.host.degree(h) < need {
                continue;
            }
            let clear = self
                .host
                .neighbors(h)
                .iter()
                .all(|&w| Some(w) == anchor || !self.used[w]);
            if !clear {
                continue;
            }
            self.map[v] = h;
            self.used[h] = true;
            self.used_count += 1;
            self.remaining -= 1;
            if self.place(ci, pos + 1)? {
                return Ok(true);
            }
            self.used[h] = false;
            self.used_count -= 1;
            self.remaining += 1;
            self.map[v] = usize::MAX;
        }
        Ok(false)
    }
}
