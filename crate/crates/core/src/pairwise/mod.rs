//! Maximum common subtree and minimum supertree of two trees.
//!
//! The supertree is obtained from a maximum common subtree by inclusion and
//! exclusion: start from the first tree and add the vertices of the second
//! tree that lie outside the common part, so that
//! `n(union) = n(T1) + n(T2) - n(common)`.

mod matching;
mod mcs;

use serde::Serialize;

use crate::error::Result;
use crate::forest::{Embedding, Forest, RootedForest, Side};

pub use matching::{max_weight_matching, Matching, WeightMatrix};
pub(crate) use mcs::AnchoredMcs;

/// A common induced subtree together with its copies in both inputs.
#[derive(Clone, Debug, Serialize)]
pub struct McsResult {
    pub size: usize,
    pub common: Forest,
    pub embed1: Embedding,
    pub embed2: Embedding,
}

/// A supertree of two trees with both inputs embedded.
#[derive(Clone, Debug, Serialize)]
pub struct SupertreeResult {
    pub tree: Forest,
    pub embed1: Embedding,
    pub embed2: Embedding,
    /// Order of the common subtree the construction glued along.
    pub common_size: usize,
}

/// A down-subtree copied out of a larger forest. Vertex `i` of `forest`
/// is `vertices[i]` of the source; vertex 0 is the top.
#[derive(Clone, Debug)]
pub struct DownTree {
    pub forest: Forest,
    pub vertices: Vec<usize>,
}

impl DownTree {
    pub(crate) fn extract(source: &Forest, top: Side) -> Self {
        let vertices = top.subtree_vertices(source);
        DownTree {
            forest: source.induced(&vertices),
            vertices,
        }
    }

    fn local_index(&self, source_order: usize) -> Vec<usize> {
        let mut idx = vec![usize::MAX; source_order];
        for (i, &v) in self.vertices.iter().enumerate() {
            idx[v] = i;
        }
        idx
    }
}

/// A supertree of two down-subtrees whose root realizes both tops.
#[derive(Clone, Debug)]
pub struct RootedSupertree {
    pub order: usize,
    pub tree: Forest,
    pub root: usize,
    pub down1: DownTree,
    pub down2: DownTree,
    /// `down1.forest -> tree`, maps the top to `root`.
    pub embed1: Embedding,
    /// `down2.forest -> tree`, maps the top to `root`.
    pub embed2: Embedding,
}

fn mcs_from_pairs(left: &Forest, pairs: &[(usize, usize)]) -> McsResult {
    let xs: Vec<usize> = pairs.iter().map(|p| p.0).collect();
    let ys: Vec<usize> = pairs.iter().map(|p| p.1).collect();
    McsResult {
        size: pairs.len(),
        common: left.induced(&xs),
        embed1: Embedding::new(xs),
        embed2: Embedding::new(ys),
    }
}

/// Largest common rooted subtree of the subtree of `a` at `u` and the
/// subtree of `b` at `v`, with `u` and `v` corresponding.
pub fn mcs_rooted_anchored(
    a: &RootedForest,
    u: usize,
    b: &RootedForest,
    v: usize,
) -> Result<McsResult> {
    a.base.check_vertex(u)?;
    b.base.check_vertex(v)?;
    let mut engine = AnchoredMcs::new(&a.base, &b.base);
    let pairs = engine.pairs(a.side(u), b.side(v));
    Ok(mcs_from_pairs(&a.base, &pairs))
}

/// Maximum common induced subtree of two trees.
pub fn mcs_trees(t1: &Forest, t2: &Forest) -> Result<McsResult> {
    t1.require_tree()?;
    t2.require_tree()?;
    // Fix the rooting of t1 at 0. The topmost vertex of a common subtree's
    // copy in t1 is some x; its partner y in t2 is an arbitrary vertex, so
    // t2 is viewed from y with all neighbours as children.
    let rooted = RootedForest::at_min_vertices(t1);
    let mut engine = AnchoredMcs::new(t1, t2);
    let mut best = 0;
    let mut arg = (Side::root(0), Side::root(0));
    for &x in &rooted.order {
        let cap = rooted.subtree_size[x].min(t2.order());
        if cap <= best {
            continue;
        }
        let a = rooted.side(x);
        for y in 0..t2.order() {
            let val = engine.value(a, Side::root(y));
            if val > best {
                best = val;
                arg = (a, Side::root(y));
                if best == cap {
                    break;
                }
            }
        }
    }
    let pairs = engine.pairs(arg.0, arg.1);
    Ok(mcs_from_pairs(t1, &pairs))
}

/// Builds the union of `t1` and `t2` glued along the common subtree given
/// as `(t1 vertex, t2 vertex)` pairs. `t1` keeps its vertex ids.
pub(crate) fn glue(t1: &Forest, t2: &Forest, pairs: &[(usize, usize)]) -> SupertreeResult {
    let n1 = t1.order();
    let mut phi = vec![usize::MAX; t2.order()];
    let mut shared = vec![false; t2.order()];
    for &(x, y) in pairs {
        phi[y] = x;
        shared[y] = true;
    }
    let mut next = n1;
    for slot in phi.iter_mut() {
        if *slot == usize::MAX {
            *slot = next;
            next += 1;
        }
    }
    let mut edges = t1.edges();
    for (y1, y2) in t2.edges() {
        if !(shared[y1] && shared[y2]) {
            edges.push((phi[y1], phi[y2]));
        }
    }
    let tree = Forest::new(next, &edges).expect("gluing along a common subtree keeps a tree");
    SupertreeResult {
        tree,
        embed1: Embedding::identity(n1),
        embed2: Embedding::new(phi),
        common_size: pairs.len(),
    }
}

/// Minimum supertree of two trees.
pub fn supertree2(t1: &Forest, t2: &Forest) -> Result<SupertreeResult> {
    let mcs = mcs_trees(t1, t2)?;
    let pairs: Vec<(usize, usize)> = mcs
        .embed1
        .map()
        .iter()
        .copied()
        .zip(mcs.embed2.map().iter().copied())
        .collect();
    Ok(glue(t1, t2, &pairs))
}

/// Minimum rooted supertree of two down-subtrees given as sides, reusing
/// the caller's anchored memo.
pub(crate) fn supertree_sides(
    engine: &mut AnchoredMcs<'_>,
    left: &Forest,
    a: Side,
    right: &Forest,
    b: Side,
) -> RootedSupertree {
    let pairs = engine.pairs(a, b);
    let down1 = DownTree::extract(left, a);
    let down2 = DownTree::extract(right, b);
    let idx1 = down1.local_index(left.order());
    let idx2 = down2.local_index(right.order());
    let local: Vec<(usize, usize)> = pairs.iter().map(|&(x, y)| (idx1[x], idx2[y])).collect();
    let glued = glue(&down1.forest, &down2.forest, &local);
    RootedSupertree {
        order: glued.tree.order(),
        tree: glued.tree,
        root: 0,
        down1,
        down2,
        embed1: glued.embed1,
        embed2: glued.embed2,
    }
}

/// Minimum supertree of the subtree of `a` at `u` and the subtree of `b`
/// at `v` in which one vertex realizes both `u` and `v`.
pub fn supertree2_rooted(
    a: &RootedForest,
    u: usize,
    b: &RootedForest,
    v: usize,
) -> Result<RootedSupertree> {
    a.base.check_vertex(u)?;
    b.base.check_vertex(v)?;
    let mut engine = AnchoredMcs::new(&a.base, &b.base);
    Ok(supertree_sides(
        &mut engine,
        &a.base,
        a.side(u),
        &b.base,
        b.side(v),
    ))
}
