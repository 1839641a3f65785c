//! Exact minimum supertree of three trees of bounded maximum degree.
//!
//! A minimum supertree either contains disjoint copies of two inputs
//! (type 1) or copies of all three that pairwise intersect (type 2). Type 1
//! is handled by joining the disjoint pair with a path in every possible way
//! and taking a two-tree supertree with the third input. Type 2 has a vertex
//! common to all three copies; fixing its preimages `r1, r2, r3` reduces the
//! problem to a rooted dynamic program over triples of down-subtrees:
//!
//! ```text
//! f({u1,u2,u3}) = f({u2,u3})                  if u1 is a leaf (likewise u2, u3)
//! f({u1,u2,u3}) = min over partitions P of U1 ∪ U2 ∪ U3 of 1 + Σ f(e)
//! ```
//!
//! where `U_i` are the children of `u_i` and every part `e` takes at most one
//! child from each `U_i`. Values on pairs come from the anchored two-tree
//! supertree. States are keyed by [`Side`]s, so everything below the three
//! roots is shared across all root triples.

mod partition;

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::forest::{tree_canonical, Embedding, Forest, RootedForest, Side};
use crate::greedy::MultiSupertree;
use crate::pairwise::{supertree2, supertree_sides, AnchoredMcs};

pub use partition::{enumerate_partitions, ChildPartition, DEFAULT_PARTITION_CAP};
use partition::for_each_partition;

#[derive(Clone, Debug)]
pub struct Exact3Options {
    /// Largest allowed `|U1 ∪ U2 ∪ U3|`; larger ground sets fail with
    /// [`Error::SizeLimit`].
    pub partition_cap: usize,
}

impl Default for Exact3Options {
    fn default() -> Self {
        Exact3Options {
            partition_cap: DEFAULT_PARTITION_CAP,
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Exact3Stats {
    pub dp_states: usize,
    pub pair_states: usize,
    pub partitions: u64,
    pub type1_joins: usize,
    pub max_degree: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Exact3Result {
    pub order: usize,
    /// 1 for two disjoint copies joined by a path, 2 for a shared vertex.
    #[serde(rename = "type")]
    pub kind: u8,
    pub supertree: MultiSupertree,
    pub stats: Exact3Stats,
}

#[derive(Clone, Debug)]
pub struct Type1Result {
    pub order: usize,
    /// Embeddings are in the order `(Ti, Tj, Tk)`.
    pub supertree: MultiSupertree,
    /// Join vertices `u` in `Tj` and `v` in `Tk`.
    pub anchors: (usize, usize),
    pub path_order: usize,
    pub joins_tried: usize,
}

type Key = [Option<Side>; 3];

#[derive(Clone, Debug)]
enum Choice {
    /// Tree `i` has a leaf at this state; it is realized by the root of the
    /// remaining pair.
    Drop(usize),
    Split(Vec<Key>),
}

#[derive(Clone, Debug)]
struct Entry {
    value: usize,
    choice: Choice,
}

fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    i + j - 1
}

struct Solver<'a> {
    trees: [&'a Forest; 3],
    rooted: [RootedForest; 3],
    pairs: [AnchoredMcs<'a>; 3],
    memo: HashMap<[Side; 3], Entry>,
    cap: usize,
    partitions: u64,
}

impl<'a> Solver<'a> {
    fn new(trees: [&'a Forest; 3], cap: usize) -> Self {
        Solver {
            trees,
            rooted: trees.map(RootedForest::at_min_vertices),
            pairs: [
                AnchoredMcs::new(trees[0], trees[1]),
                AnchoredMcs::new(trees[0], trees[2]),
                AnchoredMcs::new(trees[1], trees[2]),
            ],
            memo: HashMap::new(),
            cap,
            partitions: 0,
        }
    }

    fn down_size(&self, i: usize, side: Side) -> usize {
        let rooted = &self.rooted[i];
        let v = side.vertex();
        match side.parent() {
            None => rooted.base.order(),
            Some(p) if rooted.parent[v] == Some(p) => rooted.subtree_size[v],
            Some(p) => rooted.base.order() - rooted.subtree_size[p],
        }
    }

    fn f(&mut self, key: Key) -> Result<usize> {
        let present: Vec<usize> = (0..3).filter(|&i| key[i].is_some()).collect();
        match present[..] {
            [] => Ok(0),
            [i] => Ok(self.down_size(i, key[i].unwrap())),
            [i, j] => {
                let (a, b) = (key[i].unwrap(), key[j].unwrap());
                let common = self.pairs[pair_index(i, j)].value(a, b);
                Ok(self.down_size(i, a) + self.down_size(j, b) - common)
            }
            _ => self.triple([key[0].unwrap(), key[1].unwrap(), key[2].unwrap()]),
        }
    }

    fn triple(&mut self, s: [Side; 3]) -> Result<usize> {
        if let Some(e) = self.memo.get(&s) {
            return Ok(e.value);
        }
        if let Some(i) = (0..3).find(|&i| s[i].child_count(self.trees[i]) == 0) {
            let mut key = s.map(Some);
            key[i] = None;
            let value = self.f(key)?;
            self.memo.insert(
                s,
                Entry {
                    value,
                    choice: Choice::Drop(i),
                },
            );
            return Ok(value);
        }

        let kids: [Vec<Side>; 3] =
            std::array::from_fn(|i| s[i].children(self.trees[i]).collect());
        // cost of every admissible part, indexed by (1 + child index) per
        // tree with 0 meaning "absent"
        let dims = kids.each_ref().map(|k| k.len() + 1);
        let mut cost = vec![0usize; dims[0] * dims[1] * dims[2]];
        for a in 0..dims[0] {
            for b in 0..dims[1] {
                for c in 0..dims[2] {
                    let pick = [a, b, c];
                    let key: Key = std::array::from_fn(|i| {
                        (pick[i] > 0).then(|| kids[i][pick[i] - 1])
                    });
                    cost[(a * dims[1] + b) * dims[2] + c] = self.f(key)?;
                }
            }
        }
        let idx: [Vec<usize>; 3] = kids.each_ref().map(|k| (0..k.len()).collect());
        let mut best = usize::MAX;
        let mut best_parts: Vec<[Option<usize>; 3]> = Vec::new();
        let seen = for_each_partition(
            [&idx[0][..], &idx[1][..], &idx[2][..]],
            self.cap,
            |parts| {
                let total = 1 + parts
                    .iter()
                    .map(|p| {
                        let at = p.map(|o| o.map_or(0, |x| x + 1));
                        cost[(at[0] * dims[1] + at[1]) * dims[2] + at[2]]
                    })
                    .sum::<usize>();
                if total < best {
                    best = total;
                    best_parts = parts.to_vec();
                }
            },
        )?;
        self.partitions += seen as u64;
        let split = best_parts
            .iter()
            .map(|p| std::array::from_fn(|i| p[i].map(|x| kids[i][x])))
            .collect();
        self.memo.insert(
            s,
            Entry {
                value: best,
                choice: Choice::Split(split),
            },
        );
        Ok(best)
    }

    fn build(&mut self, key: Key, out: &mut WitnessBuilder) -> Result<usize> {
        let present: Vec<usize> = (0..3).filter(|&i| key[i].is_some()).collect();
        match present[..] {
            [] => unreachable!("parts are nonempty"),
            [i] => {
                let side = key[i].unwrap();
                let top = out.fresh();
                out.maps[i][side.vertex()] = top;
                let mut stack = vec![(side, top)];
                while let Some((s, id)) = stack.pop() {
                    for c in s.children(self.trees[i]) {
                        let cid = out.fresh();
                        out.maps[i][c.vertex()] = cid;
                        out.edges.push((id, cid));
                        stack.push((c, cid));
                    }
                }
                Ok(top)
            }
            [i, j] => {
                let (a, b) = (key[i].unwrap(), key[j].unwrap());
                let (ti, tj) = (self.trees[i], self.trees[j]);
                let rs = supertree_sides(&mut self.pairs[pair_index(i, j)], ti, a, tj, b);
                let offset = out.count;
                out.count += rs.order;
                out.edges
                    .extend(rs.tree.edges().into_iter().map(|(x, y)| (x + offset, y + offset)));
                for (k, &v) in rs.down1.vertices.iter().enumerate() {
                    out.maps[i][v] = offset + rs.embed1.image(k);
                }
                for (k, &v) in rs.down2.vertices.iter().enumerate() {
                    out.maps[j][v] = offset + rs.embed2.image(k);
                }
                Ok(offset + rs.root)
            }
            _ => {
                let s = [key[0].unwrap(), key[1].unwrap(), key[2].unwrap()];
                self.triple(s)?;
                let choice = self.memo[&s].choice.clone();
                match choice {
                    Choice::Drop(i) => {
                        let mut rest = key;
                        rest[i] = None;
                        let root = self.build(rest, out)?;
                        out.maps[i][s[i].vertex()] = root;
                        Ok(root)
                    }
                    Choice::Split(parts) => {
                        let root = out.fresh();
                        for (map, side) in out.maps.iter_mut().zip(&s) {
                            map[side.vertex()] = root;
                        }
                        for part in parts {
                            let child = self.build(part, out)?;
                            out.edges.push((root, child));
                        }
                        Ok(root)
                    }
                }
            }
        }
    }

    fn witness(&mut self, roots: [Side; 3]) -> Result<MultiSupertree> {
        let mut out = WitnessBuilder {
            count: 0,
            edges: Vec::new(),
            maps: self.trees.map(|t| vec![usize::MAX; t.order()]),
        };
        self.build(roots.map(Some), &mut out)?;
        let tree = Forest::new(out.count, &out.edges).expect("witness is a tree");
        Ok(MultiSupertree {
            tree,
            embeddings: out.maps.into_iter().map(Embedding::new).collect(),
        })
    }

    /// Every stored triple satisfies
    /// `max n(T_i(u_i)) <= f <= Σ n(T_i(u_i)) - 2`.
    fn memo_within_bounds(&self) -> bool {
        self.memo.iter().all(|(s, e)| {
            let sizes: Vec<usize> = (0..3).map(|i| self.down_size(i, s[i])).collect();
            let lo = *sizes.iter().max().unwrap();
            let hi = sizes.iter().sum::<usize>() - 2;
            lo <= e.value && e.value <= hi
        })
    }
}

struct WitnessBuilder {
    count: usize,
    edges: Vec<(usize, usize)>,
    maps: [Vec<usize>; 3],
}

impl WitnessBuilder {
    fn fresh(&mut self) -> usize {
        self.count += 1;
        self.count - 1
    }
}

fn require_trees(trees: [&Forest; 3]) -> Result<()> {
    trees.iter().try_for_each(|t| t.require_tree())
}

/// Minimum order of a rooted supertree in which one vertex realizes `r1`,
/// `r2` and `r3`, with a witness.
pub fn dp_type2(
    t1: &Forest,
    t2: &Forest,
    t3: &Forest,
    roots: [usize; 3],
    options: &Exact3Options,
) -> Result<(usize, MultiSupertree)> {
    let trees = [t1, t2, t3];
    require_trees(trees)?;
    for (t, &r) in trees.iter().zip(&roots) {
        t.check_vertex(r)?;
    }
    let mut solver = Solver::new(trees, options.partition_cap);
    let sides = roots.map(Side::root);
    let order = solver.triple(sides)?;
    let witness = solver.witness(sides)?;
    Ok((order, witness))
}

fn join_with_path(tj: &Forest, u: usize, tk: &Forest, v: usize, path_order: usize) -> Forest {
    let nj = tj.order();
    let union = tj.disjoint_union(tk);
    let interior = path_order - 2;
    let total = union.order() + interior;
    let mut edges = union.edges();
    let mut prev = u;
    for step in 0..interior {
        let w = nj + tk.order() + step;
        edges.push((prev, w));
        prev = w;
    }
    edges.push((prev, nj + v));
    Forest::new(total, &edges).expect("path join is a tree")
}

fn type1_search(
    ti: &Forest,
    tj: &Forest,
    tk: &Forest,
    max_path_order: usize,
    upper: usize,
) -> Result<Option<Type1Result>> {
    let (nj, nk) = (tj.order(), tk.order());
    let mut best: Option<Type1Result> = None;
    let mut bound = upper;
    let mut seen = HashSet::new();
    let mut tried = 0;
    for u in 0..nj {
        for v in 0..nk {
            for path_order in 2..=max_path_order {
                let join_order = nj + nk + path_order - 2;
                if join_order.max(ti.order()) >= bound {
                    break;
                }
                let join = join_with_path(tj, u, tk, v, path_order);
                if !seen.insert(tree_canonical(&join)?) {
                    continue;
                }
                tried += 1;
                let st = supertree2(ti, &join)?;
                if st.tree.order() < bound {
                    bound = st.tree.order();
                    let embed_j = Embedding::new((0..nj).map(|x| st.embed2.image(x)).collect());
                    let embed_k =
                        Embedding::new((0..nk).map(|y| st.embed2.image(nj + y)).collect());
                    best = Some(Type1Result {
                        order: st.tree.order(),
                        supertree: MultiSupertree {
                            tree: st.tree,
                            embeddings: vec![st.embed1, embed_j, embed_k],
                        },
                        anchors: (u, v),
                        path_order,
                        joins_tried: 0,
                    });
                }
            }
        }
    }
    Ok(best.map(|mut b| {
        b.joins_tried = tried;
        b
    }))
}

/// Smallest supertree of `{Ti, Tj, Tk}` containing disjoint copies of `Tj`
/// and `Tk`: `Tj` and `Tk` are joined by a path of `2..=max_path_order`
/// vertices (endpoints included) between every `u` in `Tj` and `v` in `Tk`.
pub fn type1_min(
    ti: &Forest,
    tj: &Forest,
    tk: &Forest,
    max_path_order: usize,
) -> Result<Type1Result> {
    require_trees([ti, tj, tk])?;
    if max_path_order < 2 {
        return Err(Error::InvalidInstance(
            "join paths have at least two vertices".into(),
        ));
    }
    type1_search(ti, tj, tk, max_path_order, usize::MAX)
        .map(|r| r.expect("an unbounded search always finds a join"))
}

/// Exact minimum supertree of three trees.
pub fn exact3_supertree(
    t1: &Forest,
    t2: &Forest,
    t3: &Forest,
    options: &Exact3Options,
) -> Result<Exact3Result> {
    let trees = [t1, t2, t3];
    require_trees(trees)?;
    let lower = trees.iter().map(|t| t.order()).max().unwrap();
    let mut stats = Exact3Stats {
        max_degree: trees.iter().map(|t| t.max_degree()).max().unwrap(),
        ..Default::default()
    };

    let mut solver = Solver::new(trees, options.partition_cap);
    let mut best_order = usize::MAX;
    let mut best_roots = [Side::root(0); 3];
    'outer: for r1 in 0..t1.order() {
        for r2 in 0..t2.order() {
            for r3 in 0..t3.order() {
                let sides = [Side::root(r1), Side::root(r2), Side::root(r3)];
                let value = solver.triple(sides)?;
                if value < best_order {
                    best_order = value;
                    best_roots = sides;
                    if value == lower {
                        break 'outer;
                    }
                }
            }
        }
    }
    debug_assert!(solver.memo_within_bounds());
    let mut best = (2u8, solver.witness(best_roots)?);
    stats.dp_states = solver.memo.len();
    stats.pair_states = solver.pairs.iter().map(AnchoredMcs::states).sum();
    stats.partitions = solver.partitions;

    // Interior vertices of a join path in a minimum supertree all belong to
    // the third copy, so paths longer than n(Ti) + 2 never help.
    let n_max = lower;
    for i in 0..3 {
        if best_order == lower {
            break;
        }
        let (j, k) = match i {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        let max_path = n_max.max(trees[i].order() + 2);
        if let Some(found) = type1_search(trees[i], trees[j], trees[k], max_path, best_order)? {
            stats.type1_joins += found.joins_tried;
            best_order = found.order;
            let mut embeddings = vec![Embedding::identity(0); 3];
            let mut it = found.supertree.embeddings.into_iter();
            embeddings[i] = it.next().unwrap();
            embeddings[j] = it.next().unwrap();
            embeddings[k] = it.next().unwrap();
            best = (
                1,
                MultiSupertree {
                    tree: found.supertree.tree,
                    embeddings,
                },
            );
        }
    }
    Ok(Exact3Result {
        order: best.1.order(),
        kind: best.0,
        supertree: best.1,
        stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spider(legs: &[usize]) -> Forest {
        let mut edges = Vec::new();
        let mut next = 1;
        for &len in legs {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        Forest::new(next, &edges).unwrap()
    }

    #[test]
    fn single_vertices() {
        let k1 = Forest::empty(1);
        let (order, w) = dp_type2(&k1, &k1, &k1, [0, 0, 0], &Exact3Options::default()).unwrap();
        assert_eq!(order, 1);
        assert!(w.verify(&[k1.clone(), k1.clone(), k1]));
    }

    #[test]
    fn identical_rooted_trees() {
        let t = spider(&[1, 2, 2]);
        let (order, w) = dp_type2(&t, &t, &t, [0, 0, 0], &Exact3Options::default()).unwrap();
        assert_eq!(order, t.order());
        assert!(w.verify(&[t.clone(), t.clone(), t]));
    }

    #[test]
    fn two_edges_and_p3_at_endpoints() {
        let p2 = Forest::path(2);
        let p3 = Forest::path(3);
        let (order, w) = dp_type2(&p2, &p2, &p3, [0, 0, 0], &Exact3Options::default()).unwrap();
        assert_eq!(order, 3);
        assert!(w.verify(&[p2.clone(), p2, p3]));
    }

    #[test]
    fn type1_examples() {
        let k1 = Forest::empty(1);
        let r = type1_min(&Forest::path(2), &k1, &k1, 2).unwrap();
        assert_eq!(r.order, 2);
        let r = type1_min(&Forest::path(5), &Forest::path(2), &Forest::path(2), 5).unwrap();
        assert_eq!(r.order, 5);
        let inputs = [Forest::path(5), Forest::path(2), Forest::path(2)];
        assert!(r.supertree.verify(&inputs));
    }

    #[test]
    fn paths_and_spider() {
        let paths = [Forest::path(2), Forest::path(3), Forest::path(4)];
        let r = exact3_supertree(&paths[0], &paths[1], &paths[2], &Exact3Options::default())
            .unwrap();
        assert_eq!(r.order, 4);
        assert!(r.supertree.verify(&paths));

        let trees = [Forest::path(3), Forest::star(3), Forest::path(5)];
        let r = exact3_supertree(&trees[0], &trees[1], &trees[2], &Exact3Options::default())
            .unwrap();
        assert_eq!(r.order, 6);
        assert!(r.supertree.verify(&trees));
        for i in 0..3 {
            let (j, k) = [(1, 2), (0, 2), (0, 1)][i];
            let t1 = type1_min(&trees[i], &trees[j], &trees[k], 7).unwrap();
            assert!(t1.order >= 6);
        }
    }

    #[test]
    fn memo_bounds_hold() {
        let t1 = spider(&[1, 1, 2]);
        let t2 = spider(&[3, 1]);
        let t3 = Forest::star(3);
        let mut solver = Solver::new([&t1, &t2, &t3], DEFAULT_PARTITION_CAP);
        for r1 in 0..t1.order() {
            for r2 in 0..t2.order() {
                for r3 in 0..t3.order() {
                    solver
                        .triple([Side::root(r1), Side::root(r2), Side::root(r3)])
                        .unwrap();
                }
            }
        }
        assert!(solver.memo_within_bounds());
    }

    #[test]
    fn directed_states_do_not_depend_on_root_triple() {
        let t1 = spider(&[2, 2, 1]);
        let t2 = spider(&[1, 3]);
        let t3 = spider(&[2, 1, 1]);
        let mut shared = Solver::new([&t1, &t2, &t3], DEFAULT_PARTITION_CAP);
        for r1 in 0..t1.order() {
            for r2 in 0..t2.order() {
                for r3 in 0..t3.order() {
                    shared
                        .triple([Side::root(r1), Side::root(r2), Side::root(r3)])
                        .unwrap();
                }
            }
        }
        let entries: Vec<([Side; 3], usize)> =
            shared.memo.iter().map(|(k, e)| (*k, e.value)).collect();
        for (key, value) in entries {
            let mut fresh = Solver::new([&t1, &t2, &t3], DEFAULT_PARTITION_CAP);
            assert_eq!(fresh.triple(key).unwrap(), value);
        }
    }

    #[test]
    fn size_limit_propagates() {
        let s = Forest::star(5);
        let r = exact3_supertree(&s, &s.relabel(&[5, 4, 3, 2, 1, 0]), &Forest::star(4), &Exact3Options {
            partition_cap: 12,
        });
        assert!(matches!(r, Err(Error::SizeLimit { .. })));
    }
}
