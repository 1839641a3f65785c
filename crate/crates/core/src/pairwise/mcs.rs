//! Maximum common induced subtree by dynamic programming over anchored
//! pairs and bipartite matching of children.
//!
//! For sides `a` (in the left tree) and `b` (in the right tree) the anchored
//! value is the order of a largest common rooted subtree of the two
//! down-subtrees whose roots are `a` and `b`:
//!
//! ```text
//! value(a, b) = 1 + max matching of children with weights value(a', b')
//! ```
//!
//! Every pair of children has value at least 1, so the matching splits into
//! a cardinality part and an excess part: `min(#children) + max matching of
//! non-leaf children with weights value - 1`. This keeps the matchings small
//! on high-degree vertices whose children are mostly leaves.

use std::collections::HashMap;

use super::matching::{max_weight_matching, WeightMatrix};
use crate::forest::{Forest, Side};

pub(crate) struct AnchoredMcs<'a> {
    left: &'a Forest,
    right: &'a Forest,
    memo: HashMap<(Side, Side), u32>,
}

impl<'a> AnchoredMcs<'a> {
    pub(crate) fn new(left: &'a Forest, right: &'a Forest) -> Self {
        AnchoredMcs {
            left,
            right,
            memo: HashMap::new(),
        }
    }

    pub(crate) fn states(&self) -> usize {
        self.memo.len()
    }

    pub(crate) fn value(&mut self, a: Side, b: Side) -> usize {
        if let Some(&v) = self.memo.get(&(a, b)) {
            return v as usize;
        }
        let kids_a = a.child_count(self.left);
        let kids_b = b.child_count(self.right);
        let mut value = 1 + kids_a.min(kids_b);
        if kids_a > 0 && kids_b > 0 {
            let (_, _, weights) = self.excess_weights(a, b);
            value += max_weight_matching(&weights).value as usize;
        }
        self.memo.insert((a, b), value as u32);
        value
    }

    /// Non-leaf children on both sides and the matrix of `value - 1`.
    fn excess_weights(&mut self, a: Side, b: Side) -> (Vec<Side>, Vec<Side>, WeightMatrix) {
        let core_a: Vec<Side> = a
            .children(self.left)
            .filter(|c| c.child_count(self.left) > 0)
            .collect();
        let core_b: Vec<Side> = b
            .children(self.right)
            .filter(|c| c.child_count(self.right) > 0)
            .collect();
        let mut weights = WeightMatrix::zeros(core_a.len(), core_b.len());
        for (i, &ca) in core_a.iter().enumerate() {
            for (j, &cb) in core_b.iter().enumerate() {
                let v = self.value(ca, cb) as u64;
                weights.set(i, j, v - 1);
            }
        }
        (core_a, core_b, weights)
    }

    /// Child pairs of an optimal solution at `(a, b)`.
    fn child_pairs(&mut self, a: Side, b: Side) -> Vec<(Side, Side)> {
        if a.child_count(self.left) == 0 || b.child_count(self.right) == 0 {
            return Vec::new();
        }
        let (core_a, core_b, weights) = self.excess_weights(a, b);
        let matching = max_weight_matching(&weights);
        let mut out: Vec<(Side, Side)> = matching
            .pairs
            .iter()
            .map(|&(i, j)| (core_a[i], core_b[j]))
            .collect();
        let rest_a: Vec<Side> = a
            .children(self.left)
            .filter(|c| !out.iter().any(|p| p.0 == *c))
            .collect();
        let rest_b: Vec<Side> = b
            .children(self.right)
            .filter(|c| !out.iter().any(|p| p.1 == *c))
            .collect();
        out.extend(rest_a.into_iter().zip(rest_b));
        out
    }

    /// Vertex pairs `(left, right)` of an optimal anchored common subtree,
    /// in preorder starting with `(a, b)`.
    pub(crate) fn pairs(&mut self, a: Side, b: Side) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut stack = vec![(a, b)];
        while let Some((x, y)) = stack.pop() {
            out.push((x.vertex(), y.vertex()));
            let kids = self.child_pairs(x, y);
            stack.extend(kids.into_iter().rev());
        }
        debug_assert_eq!(out.len(), self.value(a, b));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leaves_and_identical_subtrees() {
        let p3 = Forest::path(3);
        let mut eng = AnchoredMcs::new(&p3, &p3);
        assert_eq!(eng.value(Side::below(2, 1), Side::below(0, 1)), 1);
        assert_eq!(eng.value(Side::root(1), Side::root(1)), 3);
        assert_eq!(eng.value(Side::root(0), Side::root(0)), 3);
        assert_eq!(eng.value(Side::root(0), Side::root(1)), 2);
    }

    #[test]
    fn star_center_vs_path_endpoint() {
        let star = Forest::star(3);
        let p4 = Forest::path(4);
        let mut eng = AnchoredMcs::new(&star, &p4);
        assert_eq!(eng.value(Side::root(0), Side::root(0)), 2);
        let pairs = eng.pairs(Side::root(0), Side::root(0));
        assert_eq!(pairs.len(), 2);
        assert_eq!(pairs[0], (0, 0));
    }
}
