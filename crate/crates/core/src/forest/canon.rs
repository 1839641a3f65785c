//! AHU-style canonical codes for rooted trees, unrooted trees and forests.
//!
//! A rooted tree is encoded as `(` followed by the sorted codes of its
//! child subtrees followed by `)`. Unrooted trees are encoded from their
//! center; bicentral trees take the smaller of the two center codes.

use std::fmt;

use super::{Forest, RootedForest, Side};
use crate::error::Result;

const OPEN: u8 = b'(';
const CLOSE: u8 = b')';

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalCode {
    code: Vec<u8>,
    order: usize,
}

impl CanonicalCode {
    fn from_bytes(code: Vec<u8>) -> Self {
        let order = code.iter().filter(|&&b| b == OPEN).count();
        CanonicalCode { code, order }
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.code
    }

    pub fn order(&self) -> usize {
        self.order
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(std::str::from_utf8(&self.code).expect("ascii"))
    }
}

/// Code of the down-subtree at `top`. Child codes are moved into their
/// parent, so only `codes[top]` is meaningful afterwards.
fn down_codes(forest: &Forest, top: Side) -> (Vec<Side>, Vec<Vec<u8>>) {
    let mut pre = vec![top];
    let mut i = 0;
    while i < pre.len() {
        let s = pre[i];
        i += 1;
        pre.extend(s.children(forest));
    }
    let mut codes: Vec<Vec<u8>> = vec![Vec::new(); forest.order()];
    for &s in pre.iter().rev() {
        let mut kids: Vec<Vec<u8>> = s
            .children(forest)
            .map(|c| std::mem::take(&mut codes[c.vertex()]))
            .collect();
        kids.sort_unstable();
        let mut code = Vec::with_capacity(2 + kids.iter().map(Vec::len).sum::<usize>());
        code.push(OPEN);
        for k in &kids {
            code.extend_from_slice(k);
        }
        code.push(CLOSE);
        codes[s.vertex()] = code;
    }
    (pre, codes)
}

/// Like `down_codes` but keeps the code of every vertex.
fn all_down_codes(forest: &Forest, top: Side) -> (Vec<Side>, Vec<Vec<u8>>) {
    let mut pre = vec![top];
    let mut i = 0;
    while i < pre.len() {
        let s = pre[i];
        i += 1;
        pre.extend(s.children(forest));
    }
    let mut codes: Vec<Vec<u8>> = vec![Vec::new(); forest.order()];
    for &s in pre.iter().rev() {
        let mut kids: Vec<&[u8]> = s
            .children(forest)
            .map(|c| codes[c.vertex()].as_slice())
            .collect();
        kids.sort_unstable();
        let mut code = Vec::with_capacity(2 + kids.iter().map(|k| k.len()).sum::<usize>());
        code.push(OPEN);
        for k in kids {
            code.extend_from_slice(k);
        }
        code.push(CLOSE);
        codes[s.vertex()] = code;
    }
    (pre, codes)
}

/// Code of the down-subtree hanging at `side`.
pub fn side_canonical(forest: &Forest, side: Side) -> CanonicalCode {
    let (_, mut codes) = down_codes(forest, side);
    CanonicalCode::from_bytes(std::mem::take(&mut codes[side.vertex()]))
}

/// Code of the subtree of `rooted` at `v` (v and all its descendants).
pub fn rooted_canonical(rooted: &RootedForest, v: usize) -> Result<CanonicalCode> {
    rooted.base.check_vertex(v)?;
    Ok(side_canonical(&rooted.base, rooted.side(v)))
}

/// One or two center vertices of a tree, found by repeated leaf removal.
pub fn tree_centers(tree: &Forest) -> Result<Vec<usize>> {
    tree.require_tree()?;
    let n = tree.order();
    if n <= 2 {
        return Ok((0..n).collect());
    }
    let mut deg: Vec<usize> = (0..n).map(|v| tree.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            deg[v] = 0;
            for &w in tree.neighbors(v) {
                if deg[w] > 1 {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    Ok(layer)
}

/// Canonical code of an unrooted tree.
pub fn tree_canonical(tree: &Forest) -> Result<CanonicalCode> {
    let centers = tree_centers(tree)?;
    Ok(centers
        .iter()
        .map(|&c| side_canonical(tree, Side::root(c)))
        .min()
        .expect("a tree has a center"))
}

/// Canonical code of a forest: the sorted concatenation of its component
/// codes. The empty forest has the empty code.
pub fn forest_canonical(forest: &Forest) -> CanonicalCode {
    let mut parts: Vec<Vec<u8>> = forest
        .components()
        .iter()
        .map(|c| tree_canonical(c).expect("component is a tree").code)
        .collect();
    parts.sort_unstable();
    CanonicalCode::from_bytes(parts.concat())
}

/// An isomorphism `a -> b` between two trees, if one exists.
pub fn tree_isomorphism(a: &Forest, b: &Forest) -> Option<Vec<usize>> {
    if a.order() != b.order() || !a.is_tree() || !b.is_tree() {
        return None;
    }
    let ca = tree_centers(a).ok()?;
    let cb = tree_centers(b).ok()?;
    if ca.len() != cb.len() {
        return None;
    }
    let ra = ca[0];
    let (_, codes_a) = all_down_codes(a, Side::root(ra));
    for &rb in &cb {
        let (_, codes_b) = all_down_codes(b, Side::root(rb));
        if codes_a[ra] == codes_b[rb] {
            return Some(match_down(a, &codes_a, Side::root(ra), b, &codes_b, Side::root(rb)));
        }
    }
    None
}

fn match_down(
    a: &Forest,
    codes_a: &[Vec<u8>],
    top_a: Side,
    b: &Forest,
    codes_b: &[Vec<u8>],
    top_b: Side,
) -> Vec<usize> {
    let mut map = vec![usize::MAX; a.order()];
    let mut stack = vec![(top_a, top_b)];
    while let Some((sa, sb)) = stack.pop() {
        map[sa.vertex()] = sb.vertex();
        let mut ka: Vec<Side> = sa.children(a).collect();
        let mut kb: Vec<Side> = sb.children(b).collect();
        ka.sort_by(|x, y| codes_a[x.vertex()].cmp(&codes_a[y.vertex()]));
        kb.sort_by(|x, y| codes_b[x.vertex()].cmp(&codes_b[y.vertex()]));
        stack.extend(ka.into_iter().zip(kb));
    }
    map
}

/// An isomorphism `a -> b` between two forests, if one exists.
pub fn forest_isomorphism(a: &Forest, b: &Forest) -> Option<Vec<usize>> {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return None;
    }
    let keyed = |f: &Forest| {
        let mut comps: Vec<(CanonicalCode, Vec<usize>)> = f
            .component_vertices()
            .into_iter()
            .map(|vs| (tree_canonical(&f.induced(&vs)).expect("tree"), vs))
            .collect();
        comps.sort();
        comps
    };
    let ka = keyed(a);
    let kb = keyed(b);
    let mut map = vec![usize::MAX; a.order()];
    for ((code_a, va), (code_b, vb)) in ka.iter().zip(&kb) {
        if code_a != code_b {
            return None;
        }
        let local = tree_isomorphism(&a.induced(va), &b.induced(vb))?;
        for (i, &j) in local.iter().enumerate() {
            map[va[i]] = vb[j];
        }
    }
    Some(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::root_at;

    #[test]
    fn rooted_p3_center_differs_from_leaf() {
        let p3 = Forest::path(3);
        let at_center = root_at(&p3, &[1]).unwrap();
        let at_leaf = root_at(&p3, &[0]).unwrap();
        assert_ne!(
            rooted_canonical(&at_center, 1).unwrap(),
            rooted_canonical(&at_leaf, 0).unwrap()
        );
    }

    #[test]
    fn relabeled_stars_share_codes() {
        let s = Forest::star(3);
        let t = s.relabel(&[2, 0, 3, 1]);
        let rs = root_at(&s, &[0]).unwrap();
        let rt = root_at(&t, &[2]).unwrap();
        assert_eq!(
            rooted_canonical(&rs, 0).unwrap(),
            rooted_canonical(&rt, 2).unwrap()
        );
    }

    #[test]
    fn single_vertex_code() {
        let k1 = Forest::empty(1);
        let code = tree_canonical(&k1).unwrap();
        assert_eq!(code.as_bytes(), b"()");
        assert_eq!(code.order(), 1);
    }

    #[test]
    fn path_vs_star() {
        let p4 = Forest::path(4);
        let p4b = p4.relabel(&[3, 1, 0, 2]);
        assert_eq!(tree_canonical(&p4).unwrap(), tree_canonical(&p4b).unwrap());
        assert_ne!(
            tree_canonical(&p4).unwrap(),
            tree_canonical(&Forest::star(3)).unwrap()
        );
    }

    #[test]
    fn disconnected_tree_code_fails() {
        assert!(tree_canonical(&Forest::empty(2)).is_err());
        assert!(tree_canonical(&Forest::empty(0)).is_err());
    }

    #[test]
    fn centers_of_paths() {
        assert_eq!(tree_centers(&Forest::path(5)).unwrap(), vec![2]);
        assert_eq!(tree_centers(&Forest::path(6)).unwrap(), vec![2, 3]);
        assert_eq!(tree_centers(&Forest::star(4)).unwrap(), vec![0]);
    }

    #[test]
    fn isomorphism_maps_edges_to_edges() {
        let s = Forest::new(6, &[(0, 1), (1, 2), (1, 3), (3, 4), (4, 5)]).unwrap();
        let t = s.relabel(&[5, 3, 0, 1, 2, 4]);
        let map = tree_isomorphism(&s, &t).unwrap();
        for (u, v) in s.edges() {
            assert!(t.has_edge(map[u], map[v]));
        }
        assert!(tree_isomorphism(&Forest::path(4), &Forest::star(3)).is_none());
    }

    #[test]
    fn forest_codes_ignore_component_order() {
        let a = Forest::path(2).disjoint_union(&Forest::path(3));
        let b = Forest::path(3).disjoint_union(&Forest::path(2));
        assert_eq!(forest_canonical(&a), forest_canonical(&b));
        let map = forest_isomorphism(&a, &b).unwrap();
        for (u, v) in a.edges() {
            assert!(b.has_edge(map[u], map[v]));
        }
        assert_eq!(forest_canonical(&Forest::empty(0)).order(), 0);
    }
}
