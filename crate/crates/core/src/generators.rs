//! Instance families: caterpillars, the subdivided-star pair built from a
//! 3-PARTITION instance, the tree triple built from a 3DM instance, and the
//! three caterpillars on which the greedy supertree is off by a factor
//! approaching 4/3.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::forest::{contains_induced, Forest};

struct Builder {
    order: usize,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            order: 0,
            edges: Vec::new(),
        }
    }

    fn vertex(&mut self) -> usize {
        self.order += 1;
        self.order - 1
    }

    fn leaf(&mut self, at: usize) -> usize {
        let v = self.vertex();
        self.edges.push((at, v));
        v
    }

    /// A path hanging from `at`; returns its vertices, nearest first.
    fn path_from(&mut self, at: usize, len: usize) -> Vec<usize> {
        let mut prev = at;
        (0..len)
            .map(|_| {
                prev = self.leaf(prev);
                prev
            })
            .collect()
    }

    fn finish(self) -> Forest {
        Forest::new(self.order, &self.edges).expect("generators build forests")
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Caterpillar {
    pub tree: Forest,
    /// Spine vertices `u_1..u_p` are `0..p`.
    pub spine: Vec<usize>,
    /// Leaves attached to each spine vertex.
    pub leaves: Vec<Vec<usize>>,
}

/// `T(n_1, ..., n_p)`: a path `u_1..u_p` with `n_i` leaves attached to `u_i`.
pub fn caterpillar(counts: &[usize]) -> Result<Caterpillar> {
    if counts.is_empty() {
        return Err(Error::InvalidInstance("caterpillar needs a spine".into()));
    }
    let mut b = Builder::new();
    let spine: Vec<usize> = counts.iter().map(|_| b.vertex()).collect();
    for w in spine.windows(2) {
        b.edges.push((w[0], w[1]));
    }
    let leaves = spine
        .iter()
        .zip(counts)
        .map(|(&u, &c)| (0..c).map(|_| b.leaf(u)).collect())
        .collect();
    Ok(Caterpillar {
        tree: b.finish(),
        spine,
        leaves,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ThreePartitionInstance {
    pub values: Vec<usize>,
}

impl ThreePartitionInstance {
    pub fn m(&self) -> usize {
        self.values.len() / 3
    }

    /// The common triple sum `A`.
    pub fn target(&self) -> usize {
        self.values.iter().sum::<usize>() / self.m().max(1)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidInstance(msg));
        let m = self.m();
        if m == 0 || self.values.len() != 3 * m {
            return bad(format!("need 3m values with m >= 1, got {}", self.values.len()));
        }
        let total: usize = self.values.iter().sum();
        if !total.is_multiple_of(m) {
            return bad(format!("sum {total} is not divisible by m = {m}"));
        }
        let a = total / m;
        if let Some(&x) = self.values.iter().find(|&&x| 4 * x <= a || 2 * x >= a) {
            return bad(format!("value {x} is not strictly between A/4 and A/2 for A = {a}"));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PartitionPair {
    pub t1: Forest,
    pub t2: Forest,
    /// `t1 - r1` and `t2 - r2`: paths of orders `a_i` and `A + 2`.
    pub f1: Forest,
    pub f2: Forest,
    pub r1: usize,
    pub r2: usize,
    /// Path vertices of each branch, nearest to the centre first.
    pub branches1: Vec<Vec<usize>>,
    pub branches2: Vec<Vec<usize>>,
}

fn subdivided_star(lengths: &[usize]) -> (Forest, usize, Vec<Vec<usize>>) {
    let mut b = Builder::new();
    let r = b.vertex();
    let branches = lengths.iter().map(|&len| b.path_from(r, len)).collect();
    (b.finish(), r, branches)
}

fn without(tree: &Forest, v: usize) -> Forest {
    let rest: Vec<usize> = (0..tree.order()).filter(|&x| x != v).collect();
    tree.induced(&rest)
}

/// Paths of orders `a_i` joined to a centre `r1`, and `m` paths of order
/// `A + 2` joined to a centre `r2`.
pub fn gen_prop1(inst: &ThreePartitionInstance) -> Result<PartitionPair> {
    inst.validate()?;
    let (t1, r1, branches1) = subdivided_star(&inst.values);
    let (t2, r2, branches2) = subdivided_star(&vec![inst.target() + 2; inst.m()]);
    Ok(PartitionPair {
        f1: without(&t1, r1),
        f2: without(&t2, r2),
        t1,
        t2,
        r1,
        r2,
        branches1,
        branches2,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ThreeDmInstance {
    pub q: usize,
    /// `(x, y, z)` with 0-based element indices.
    pub triples: Vec<(usize, usize, usize)>,
}

impl ThreeDmInstance {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidInstance(msg));
        if self.q == 0 {
            return bad("q must be positive".into());
        }
        let mut seen = std::collections::HashSet::new();
        let mut counts = [vec![0usize; self.q], vec![0; self.q], vec![0; self.q]];
        for &(x, y, z) in &self.triples {
            if x >= self.q || y >= self.q || z >= self.q {
                return bad(format!("triple ({x}, {y}, {z}) out of range"));
            }
            if !seen.insert((x, y, z)) {
                return bad(format!("duplicate triple ({x}, {y}, {z})"));
            }
            counts[0][x] += 1;
            counts[1][y] += 1;
            counts[2][z] += 1;
        }
        for (set, name) in counts.iter().zip(["x", "y", "z"]) {
            if let Some(i) = set.iter().position(|&c| c == 0 || c > 3) {
                return bad(format!("{name}{i} occurs in {} triples, need 1 to 3", set[i]));
            }
        }
        Ok(())
    }

    /// Checks that `chosen` indexes a perfect matching.
    pub fn validate_matching(&self, chosen: &[usize]) -> Result<()> {
        let mut used = [vec![false; self.q], vec![false; self.q], vec![false; self.q]];
        for &t in chosen {
            let Some(&(x, y, z)) = self.triples.get(t) else {
                return Err(Error::InvalidInstance(format!("no triple {t}")));
            };
            for (set, e) in used.iter_mut().zip([x, y, z]) {
                if std::mem::replace(&mut set[e], true) {
                    return Err(Error::InvalidInstance(format!(
                        "triple {t} reuses an element"
                    )));
                }
            }
        }
        if chosen.len() != self.q {
            return Err(Error::InvalidInstance("matching must have q triples".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MatchingTrees {
    pub tx: Forest,
    pub ty: Forest,
    pub tz: Forest,
    pub r_x: usize,
    pub r_y: usize,
    pub r_z: usize,
    /// `r(x_i)`, `r(y_j)`, `r(z_k)` in their trees.
    pub x_roots: Vec<usize>,
    pub y_roots: Vec<usize>,
    pub z_roots: Vec<usize>,
    /// Supertree of order `10q^2 + 3q + 1` built from a perfect matching.
    pub witness: Option<Forest>,
    /// Leaves added to `ty` to form the witness; `ty` keeps its ids.
    pub witness_leaves: Vec<usize>,
}

/// One branch: a path of `2q` vertices with leaves at the given distances
/// from the branch root (1-based).
fn branch(b: &mut Builder, root: usize, q: usize, leaves_at: &[usize]) -> Vec<usize> {
    let path = b.path_from(root, 2 * q);
    for &d in leaves_at {
        b.leaf(path[d - 1]);
    }
    path
}

fn full(q: usize) -> Vec<usize> {
    (1..=2 * q).collect()
}

/// Attaches `T(x_i)` below `top` for every `x_i` and returns the roots.
fn x_trees(b: &mut Builder, top: usize, inst: &ThreeDmInstance) -> Vec<usize> {
    let q = inst.q;
    (0..q)
        .map(|i| {
            let r = b.leaf(top);
            let mine: Vec<_> = inst.triples.iter().filter(|t| t.0 == i).collect();
            for l in 0..3 {
                match mine.get(l) {
                    Some(&&(_, y, z)) => branch(b, r, q, &[y + 1, q + z + 1]),
                    None => branch(b, r, q, &full(q)),
                };
            }
            r
        })
        .collect()
}

/// `T(y_j)` (or `T(z_k)` with `offset = q`) below `top`. Returns the roots
/// and the relevant branches.
fn yz_trees(b: &mut Builder, top: usize, q: usize, offset: usize) -> (Vec<usize>, Vec<Vec<usize>>) {
    (0..q)
        .map(|j| {
            let r = b.leaf(top);
            branch(b, r, q, &full(q));
            branch(b, r, q, &full(q));
            let relevant = branch(b, r, q, &[offset + j + 1]);
            (r, relevant)
        })
        .unzip()
}

/// Builds `T_x`, `T_y`, `T_z`. With a perfect matching (indices into the
/// triples) also builds the witness supertree and checks that it contains
/// all three trees.
pub fn gen_thm1(inst: &ThreeDmInstance, matching: Option<&[usize]>) -> Result<MatchingTrees> {
    inst.validate()?;
    let q = inst.q;

    let mut bx = Builder::new();
    let r_x = bx.vertex();
    let x_roots = x_trees(&mut bx, r_x, inst);
    let tx = bx.finish();

    let mut by = Builder::new();
    let r_y = by.vertex();
    let (y_roots, relevant) = yz_trees(&mut by, r_y, q, 0);
    let ty_builder_order = by.order;
    let ty_edges = by.edges.clone();

    let mut bz = Builder::new();
    let r_z = bz.vertex();
    let (z_roots, _) = yz_trees(&mut bz, r_z, q, q);
    let tz = bz.finish();

    let mut witness = None;
    let mut witness_leaves = Vec::new();
    if let Some(chosen) = matching {
        inst.validate_matching(chosen)?;
        for &t in chosen {
            let (_, y, z) = inst.triples[t];
            witness_leaves.push(by.leaf(relevant[y][q + z]));
        }
        let w = by.finish();
        let ty = Forest::new(ty_builder_order, &ty_edges).expect("tree");
        for (name, t) in [("x", &tx), ("y", &ty), ("z", &tz)] {
            if contains_induced(t, &w)?.is_none() {
                return Err(Error::InvalidInstance(format!(
                    "witness does not contain T{name}"
                )));
            }
        }
        witness = Some(w);
    }
    let ty = Forest::new(ty_builder_order, &ty_edges).expect("tree");
    Ok(MatchingTrees {
        tx,
        ty,
        tz,
        r_x,
        r_y,
        r_z,
        x_roots,
        y_roots,
        z_roots,
        witness,
        witness_leaves,
    })
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct TightnessParams {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TightnessFamily {
    pub trees: [Caterpillar; 3],
    pub known_supertree: Caterpillar,
}

impl TightnessFamily {
    pub fn inputs(&self) -> Vec<Forest> {
        self.trees.iter().map(|c| c.tree.clone()).collect()
    }
}

/// `T(0,b,a,a,c,0)`, `T(0,b,0,a,0,0,0,a,0)` and `T(0,b,0,0,0,0,0,a,0,c,a,0)`
/// with the supertree `T(0,b,0,0,b,b,a,a,c,c,a,0)` of order
/// `3a + 3b + 2c + 12`.
pub fn gen_tightness(p: TightnessParams) -> Result<TightnessFamily> {
    let TightnessParams { a, b, c } = p;
    if !(a > b && b > c && c >= 1) {
        return Err(Error::InvalidInstance(format!(
            "need a > b > c >= 1, got a={a} b={b} c={c}"
        )));
    }
    let trees = [
        caterpillar(&[0, b, a, a, c, 0])?,
        caterpillar(&[0, b, 0, a, 0, 0, 0, a, 0])?,
        caterpillar(&[0, b, 0, 0, 0, 0, 0, a, 0, c, a, 0])?,
    ];
    let known = caterpillar(&[0, b, 0, 0, b, b, a, a, c, c, a, 0])?;
    for t in &trees {
        if contains_induced(&t.tree, &known.tree)?.is_none() {
            return Err(Error::InvalidInstance(
                "known supertree misses an input".into(),
            ));
        }
    }
    Ok(TightnessFamily {
        trees,
        known_supertree: known,
    })
}
