use super::Forest;
use crate::error::{Error, Result};

/// Sentinel parent id for a root.
pub const NO_PARENT: u32 = u32::MAX;

/// A vertex viewed from one of its neighbours (or from nowhere, for a root).
///
/// A side names the down-subtree "hanging" at `vertex` once the edge to
/// `parent` is removed, independently of any global rooting. Both the
/// pairwise and the three-tree dynamic programs key their memo tables on
/// sides so that values are shared across re-rootings.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Side {
    pub vertex: u32,
    pub parent: u32,
}

impl Side {
    pub fn root(v: usize) -> Self {
        Side {
            vertex: v as u32,
            parent: NO_PARENT,
        }
    }

    pub fn below(v: usize, parent: usize) -> Self {
        Side {
            vertex: v as u32,
            parent: parent as u32,
        }
    }

    pub fn vertex(self) -> usize {
        self.vertex as usize
    }

    pub fn parent(self) -> Option<usize> {
        (self.parent != NO_PARENT).then_some(self.parent as usize)
    }

    pub fn children(self, forest: &Forest) -> impl Iterator<Item = Side> + '_ {
        let v = self.vertex();
        let p = self.parent;
        forest
            .neighbors(v)
            .iter()
            .filter(move |&&w| w as u32 != p)
            .map(move |&w| Side::below(w, v))
    }

    pub fn child_count(self, forest: &Forest) -> usize {
        forest.degree(self.vertex()) - usize::from(self.parent().is_some())
    }

    /// Vertices of the down-subtree in preorder, starting with `vertex`.
    pub fn subtree_vertices(self, forest: &Forest) -> Vec<usize> {
        let mut out = vec![self.vertex()];
        let mut stack = vec![self];
        while let Some(s) = stack.pop() {
            for c in s.children(forest) {
                out.push(c.vertex());
                stack.push(c);
            }
        }
        out
    }
}

/// A forest with one root chosen per component.
#[derive(Clone, Debug)]
pub struct RootedForest {
    pub base: Forest,
    pub parent: Vec<Option<usize>>,
    pub roots: Vec<usize>,
    pub depth: Vec<usize>,
    pub subtree_size: Vec<usize>,
    /// Vertices in BFS order from the roots; parents precede children.
    pub order: Vec<usize>,
}

/// Roots every component of `forest` at the given vertices (one per
/// component).
pub fn root_at(forest: &Forest, roots: &[usize]) -> Result<RootedForest> {
    let n = forest.order();
    let comps = forest.component_count();
    if roots.len() != comps {
        return Err(Error::BadRoots(format!(
            "{} roots given for {comps} components",
            roots.len()
        )));
    }
    let mut parent = vec![None; n];
    let mut depth = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    for &r in roots {
        forest.check_vertex(r)?;
        if depth[r] != usize::MAX {
            return Err(Error::BadRoots(format!(
                "root {r} lies in an already rooted component"
            )));
        }
        depth[r] = 0;
        let start = order.len();
        order.push(r);
        let mut i = start;
        while i < order.len() {
            let u = order[i];
            i += 1;
            for &w in forest.neighbors(u) {
                if depth[w] == usize::MAX {
                    depth[w] = depth[u] + 1;
                    parent[w] = Some(u);
                    order.push(w);
                }
            }
        }
    }
    let mut subtree_size = vec![1; n];
    for &v in order.iter().rev() {
        if let Some(p) = parent[v] {
            subtree_size[p] += subtree_size[v];
        }
    }
    Ok(RootedForest {
        base: forest.clone(),
        parent,
        roots: roots.to_vec(),
        depth,
        subtree_size,
        order,
    })
}

impl RootedForest {
    /// Roots each component at its smallest vertex id.
    pub fn at_min_vertices(forest: &Forest) -> Self {
        let roots: Vec<usize> = forest
            .component_vertices()
            .iter()
            .map(|c| c[0])
            .collect();
        root_at(forest, &roots).expect("one root per component")
    }

    pub fn children(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let p = self.parent[v];
        self.base
            .neighbors(v)
            .iter()
            .copied()
            .filter(move |&w| Some(w) != p)
    }

    pub fn side(&self, v: usize) -> Side {
        match self.parent[v] {
            Some(p) => Side::below(v, p),
            None => Side::root(v),
        }
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.children(v).next().is_none()
    }
}
