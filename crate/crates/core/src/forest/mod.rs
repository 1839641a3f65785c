//! Forest representation and the machinery every solver builds on.
//!
//! A [`Forest`] is a simple acyclic undirected graph on the dense vertex
//! range `0..order`. Everything else in the crate (canonical codes, induced
//! embeddings, rooted views) is expressed in terms of these ids.

mod canon;
mod embed;
pub mod enumerate;
mod io;
pub mod random;
mod rooted;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};

pub use canon::{
    forest_canonical, forest_isomorphism, rooted_canonical, side_canonical, tree_canonical,
    tree_centers, tree_isomorphism, CanonicalCode,
};
pub use embed::{
    contains_induced, contains_induced_with, find_induced_backtracking, Embedding, SearchBudget,
    DEFAULT_NODE_BUDGET,
};
pub use io::{parse_forest, parse_forests, to_dot, to_edge_list};
pub use rooted::{root_at, RootedForest, Side, NO_PARENT};

/// An undirected simple forest over vertices `0..order`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Forest {
    adj: Vec<Vec<usize>>,
}

impl Forest {
    /// Builds a forest from an edge list, rejecting loops, parallel edges,
    /// out-of-range ids and cycles.
    pub fn new(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); order];
        let mut uf = UnionFind::new(order);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(Error::BadVertex { vertex: w, order });
                }
            }
            if u == v {
                return Err(Error::BadEdge(u, v, "self-loop"));
            }
            if adj[u].contains(&v) {
                return Err(Error::BadEdge(u, v, "parallel edge"));
            }
            if !uf.union(u, v) {
                return Err(Error::NotAForest(u, v));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Forest { adj })
    }

    /// The forest with `order` isolated vertices.
    pub fn empty(order: usize) -> Self {
        Forest {
            adj: vec![Vec::new(); order],
        }
    }

    /// Path on `order` vertices, `0 - 1 - ... - order-1`.
    pub fn path(order: usize) -> Self {
        let edges: Vec<_> = (1..order).map(|v| (v - 1, v)).collect();
        Forest::new(order, &edges).expect("path is a forest")
    }

    /// Star with center `0` and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Forest::new(leaves + 1, &edges).expect("star is a forest")
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.order() - self.edge_count()
    }

    /// A tree here is a connected forest with at least one vertex.
    pub fn is_tree(&self) -> bool {
        !self.is_empty() && self.component_count() == 1
    }

    pub(crate) fn require_tree(&self) -> Result<()> {
        if self.is_tree() {
            Ok(())
        } else {
            Err(Error::NotConnected)
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::BadVertex {
                vertex: v,
                order: self.order(),
            })
        }
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    pub fn component_vertices(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for s in 0..self.order() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Connected components as standalone forests with ids relabeled from 0.
    pub fn components(&self) -> Vec<Forest> {
        self.component_vertices()
            .iter()
            .map(|c| self.induced(c))
            .collect()
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Forest {
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut adj = vec![Vec::new(); vertices.len()];
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX {
                    adj[i].push(j);
                }
            }
            adj[i].sort_unstable();
        }
        Forest { adj }
    }

    /// Vertex-disjoint union; `other`'s ids are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Forest) -> Forest {
        let shift = self.order();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|list| list.iter().map(|&w| w + shift).collect()),
        );
        Forest { adj }
    }

    /// Returns a copy with one new vertex joined to every vertex of
    /// `attach`. The new vertex gets id `order()`. Fails if two attachment
    /// points share a component.
    pub fn with_new_vertex(&self, attach: &[usize]) -> Result<Forest> {
        let n = self.order();
        let mut edges = self.edges();
        edges.extend(attach.iter().map(|&u| (u, n)));
        Forest::new(n + 1, &edges)
    }

    /// Appends a leaf at `v` without re-validating (a leaf never closes a
    /// cycle).
    pub fn with_leaf(&self, v: usize) -> Forest {
        let n = self.order();
        let mut adj = self.adj.clone();
        adj[v].push(n);
        adj.push(vec![v]);
        Forest { adj }
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Forest {
        assert_eq!(perm.len(), self.order());
        let mut adj = vec![Vec::new(); self.order()];
        for (v, list) in self.adj.iter().enumerate() {
            let mut mapped: Vec<usize> = list.iter().map(|&w| perm[w]).collect();
            mapped.sort_unstable();
            adj[perm[v]] = mapped;
        }
        Forest { adj }
    }

    /// Checks the structural invariants. Always true for values built
    /// through the public constructors.
    pub fn is_valid(&self) -> bool {
        let n = self.order();
        for (u, list) in self.adj.iter().enumerate() {
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
            for &v in list {
                if v >= n || v == u || self.adj[v].binary_search(&u).is_err() {
                    return false;
                }
            }
        }
        let comps = self.component_vertices().len();
        self.edge_count() + comps == n
    }
}

impl Serialize for Forest {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Forest", 2)?;
        s.serialize_field("order", &self.order())?;
        s.serialize_field("edges", &self.edges())?;
        s.end()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}
