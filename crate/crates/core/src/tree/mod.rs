//! Binary trees with leaf counts, the rotation that removes imbalances, and
//! the weight-budgeted score LP over internal nodes.
//!
//! For an internal node `v` with children `x`, `y`: `n_v` counts leaves
//! below `v`, its weight is `n_v - 2`, and `m_v = n_x n_y (n_x + n_y - 2) / 2`
//! counts the leaf triples whose least common ancestor is `v`.

mod score;
mod split;

pub use score::{
    min_score_given_weight, min_score_integral, score_breakpoints, Rational, ScoreSolution,
};
pub use split::{
    build_split_tree, classify_good_nodes, good_lca_triple_count, BitOrder, NodeClass, SplitTree,
};

use crate::rng::Stream;
use crate::{Error, Result};

pub type NodeId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeNode {
    pub children: Option<[NodeId; 2]>,
    pub leaves: u64,
    /// Element represented by a leaf.
    pub label: Option<u32>,
}

/// A rooted binary tree in which every internal node has two children.
/// Rotations return a new tree; node ids are stable across a rotation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedBinaryTree {
    nodes: Vec<TreeNode>,
    root: NodeId,
}

/// `u` is the parent of `v` and `w`, `v` is the parent of `x` and `y`,
/// `n_x > n_w` and `n_x >= n_y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Imbalance {
    pub u: NodeId,
    pub v: NodeId,
    pub w: NodeId,
    pub x: NodeId,
    pub y: NodeId,
}

impl WeightedBinaryTree {
    pub fn leaf(label: u32) -> Self {
        WeightedBinaryTree {
            nodes: vec![TreeNode {
                children: None,
                leaves: 1,
                label: Some(label),
            }],
            root: 0,
        }
    }

    /// New root with `left` and `right` as children.
    pub fn join(left: WeightedBinaryTree, right: WeightedBinaryTree) -> Self {
        let mut nodes = Vec::with_capacity(left.nodes.len() + right.nodes.len() + 1);
        nodes.push(TreeNode {
            children: None,
            leaves: 0,
            label: None,
        });
        let shift_l = nodes.len();
        nodes.extend(left.nodes.into_iter().map(|n| shift(n, shift_l)));
        let shift_r = nodes.len();
        nodes.extend(right.nodes.into_iter().map(|n| shift(n, shift_r)));
        let (l, r) = (left.root + shift_l, right.root + shift_r);
        nodes[0] = TreeNode {
            children: Some([l, r]),
            leaves: nodes[l].leaves + nodes[r].leaves,
            label: None,
        };
        WeightedBinaryTree { nodes, root: 0 }
    }

    pub(crate) fn from_parts(nodes: Vec<TreeNode>, root: NodeId) -> Self {
        WeightedBinaryTree { nodes, root }
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn node(&self, id: NodeId) -> &TreeNode {
        &self.nodes[id]
    }

    pub fn num_nodes(&self) -> usize {
        self.nodes.len()
    }

    pub fn children(&self, id: NodeId) -> Option<[NodeId; 2]> {
        self.nodes[id].children
    }

    pub fn is_leaf(&self, id: NodeId) -> bool {
        self.nodes[id].children.is_none()
    }

    /// `n_v`.
    pub fn n(&self, id: NodeId) -> u64 {
        self.nodes[id].leaves
    }

    pub fn leaf_count(&self) -> u64 {
        self.n(self.root)
    }

    /// `n_v - 2` for internal nodes, `None` for leaves.
    pub fn weight(&self, id: NodeId) -> Option<u64> {
        self.nodes[id].children.map(|_| self.n(id) - 2)
    }

    /// `m_v`: leaf triples whose least common ancestor is `v`.
    pub fn lca_triples(&self, id: NodeId) -> u64 {
        match self.nodes[id].children {
            None => 0,
            Some([x, y]) => {
                let (a, b) = (self.n(x), self.n(y));
                a * b * (a + b - 2) / 2
            }
        }
    }

    pub fn preorder(&self) -> Vec<NodeId> {
        let mut out = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![self.root];
        while let Some(id) = stack.pop() {
            out.push(id);
            if let Some([l, r]) = self.nodes[id].children {
                stack.push(r);
                stack.push(l);
            }
        }
        out
    }

    pub fn internal_nodes(&self) -> Vec<NodeId> {
        self.preorder()
            .into_iter()
            .filter(|&id| !self.is_leaf(id))
            .collect()
    }

    /// Leaf labels left to right.
    pub fn leaf_labels(&self) -> Vec<u32> {
        self.preorder()
            .into_iter()
            .filter_map(|id| self.nodes[id].label)
            .collect()
    }

    /// Sum of leaf depths, the root at depth 0.
    pub fn d_total(&self) -> u64 {
        let mut total = 0;
        let mut stack = vec![(self.root, 0u64)];
        while let Some((id, d)) = stack.pop() {
            match self.nodes[id].children {
                None => total += d,
                Some([l, r]) => {
                    stack.push((l, d + 1));
                    stack.push((r, d + 1));
                }
            }
        }
        total
    }

    /// First imbalance in preorder of `u`; for each `u` both children are
    /// tried as `v` (left first) and both children of `v` as `x`.
    pub fn find_imbalance(&self) -> Option<Imbalance> {
        self.preorder()
            .into_iter()
            .find_map(|u| self.imbalances_at(u).into_iter().next())
    }

    /// Every imbalance of the tree, in the scan order of
    /// [`find_imbalance`](Self::find_imbalance).
    pub fn all_imbalances(&self) -> Vec<Imbalance> {
        self.preorder()
            .into_iter()
            .flat_map(|u| self.imbalances_at(u))
            .collect()
    }

    fn imbalances_at(&self, u: NodeId) -> Vec<Imbalance> {
        let mut out = Vec::new();
        let Some([c0, c1]) = self.nodes[u].children else {
            return out;
        };
        for (v, w) in [(c0, c1), (c1, c0)] {
            if let Some([d0, d1]) = self.nodes[v].children {
                for (x, y) in [(d0, d1), (d1, d0)] {
                    let imb = Imbalance { u, v, w, x, y };
                    if self.is_imbalance(&imb) {
                        out.push(imb);
                    }
                }
            }
        }
        out
    }

    pub fn is_imbalance(&self, imb: &Imbalance) -> bool {
        let kids = |id: NodeId| self.nodes.get(id).and_then(|n| n.children);
        let Some(uc) = kids(imb.u) else { return false };
        let Some(vc) = kids(imb.v) else { return false };
        let pair = |c: [NodeId; 2], a: NodeId, b: NodeId| c == [a, b] || c == [b, a];
        pair(uc, imb.v, imb.w)
            && pair(vc, imb.x, imb.y)
            && self.n(imb.x) > self.n(imb.w)
            && self.n(imb.x) >= self.n(imb.y)
    }

    /// Swaps the subtree at `x` with the smaller subtree at `w`. Leaves
    /// under `x` move up one level and leaves under `w` down one, so
    /// `D_total` drops by `n_x - n_w`.
    pub fn rotate(&self, imb: &Imbalance) -> Result<WeightedBinaryTree> {
        if !self.is_imbalance(imb) {
            return Err(Error::invalid(format!("{imb:?} is not an imbalance")));
        }
        let mut t = self.clone();
        let swap_in = |c: &mut [NodeId; 2], old: NodeId, new: NodeId| {
            let k = c.iter().position(|&z| z == old).unwrap();
            c[k] = new;
        };
        swap_in(t.nodes[imb.u].children.as_mut().unwrap(), imb.w, imb.x);
        swap_in(t.nodes[imb.v].children.as_mut().unwrap(), imb.x, imb.w);
        t.nodes[imb.v].leaves = t.n(imb.w) + t.n(imb.y);
        Ok(t)
    }

    /// Rotates the first imbalance until none remain. Returns the final
    /// tree and the number of rotations.
    pub fn rotate_to_balance(&self) -> (WeightedBinaryTree, usize) {
        let mut t = self.clone();
        let mut count = 0;
        while let Some(imb) = t.find_imbalance() {
            t = t.rotate(&imb).expect("found imbalance is valid");
            count += 1;
        }
        (t, count)
    }

    /// Every ordered binary tree shape with `k >= 1` leaves, labeled `0..k`
    /// left to right.
    pub fn all_shapes(k: u32) -> Vec<WeightedBinaryTree> {
        fn shapes(first: u32, k: u32) -> Vec<WeightedBinaryTree> {
            if k == 1 {
                return vec![WeightedBinaryTree::leaf(first)];
            }
            let mut out = Vec::new();
            for l in 1..k {
                let lefts = shapes(first, l);
                let rights = shapes(first + l, k - l);
                for a in &lefts {
                    for b in &rights {
                        out.push(WeightedBinaryTree::join(a.clone(), b.clone()));
                    }
                }
            }
            out
        }
        assert!(k >= 1);
        shapes(0, k)
    }

    /// A random shape with `k >= 1` leaves: each internal node sends a
    /// uniform number in `1..n` of its leaves left.
    pub fn random(k: u32, stream: &mut Stream) -> WeightedBinaryTree {
        fn build(first: u32, k: u32, s: &mut Stream) -> WeightedBinaryTree {
            if k == 1 {
                return WeightedBinaryTree::leaf(first);
            }
            let l = 1 + s.below(k as u64 - 1) as u32;
            let left = build(first, l, s);
            let right = build(first + l, k - l, s);
            WeightedBinaryTree::join(left, right)
        }
        assert!(k >= 1);
        build(0, k, stream)
    }

    /// Parses nested parentheses of leaf labels, e.g. `((0 1) (2 3))`.
    pub fn parse_nested(s: &str) -> Result<WeightedBinaryTree> {
        let tokens: Vec<String> = s
            .replace('(', " ( ")
            .replace(')', " ) ")
            .split_whitespace()
            .map(str::to_owned)
            .collect();
        let mut pos = 0;
        let t = parse_tokens(&tokens, &mut pos)?;
        if pos != tokens.len() {
            return Err(Error::invalid("trailing input after tree"));
        }
        Ok(t)
    }

    /// Nested-parentheses rendering; `annotate` adds text after each
    /// internal node's opening parenthesis.
    pub fn render(&self, annotate: &dyn Fn(NodeId) -> Option<String>) -> String {
        let mut out = String::new();
        self.render_into(self.root, annotate, &mut out);
        out
    }

    fn render_into(
        &self,
        id: NodeId,
        annotate: &dyn Fn(NodeId) -> Option<String>,
        out: &mut String,
    ) {
        match self.nodes[id].children {
            None => out.push_str(&self.nodes[id].label.map_or("*".into(), |l| l.to_string())),
            Some([l, r]) => {
                out.push('(');
                if let Some(a) = annotate(id) {
                    out.push_str(&a);
                    out.push(' ');
                }
                self.render_into(l, annotate, out);
                out.push(' ');
                self.render_into(r, annotate, out);
                out.push(')');
            }
        }
    }

    /// Rendering with `n`, weight and `m` on every internal node.
    pub fn dump(&self) -> String {
        self.render(&|id| {
            Some(format!(
                "n={} w={} m={}",
                self.n(id),
                self.weight(id).unwrap(),
                self.lca_triples(id)
            ))
        })
    }
}

fn shift(mut n: TreeNode, by: usize) -> TreeNode {
    if let Some(c) = n.children.as_mut() {
        c[0] += by;
        c[1] += by;
    }
    n
}

fn parse_tokens(tokens: &[String], pos: &mut usize) -> Result<WeightedBinaryTree> {
    let tok = tokens
        .get(*pos)
        .ok_or_else(|| Error::invalid("unexpected end of tree"))?;
    *pos += 1;
    if tok == "(" {
        let left = parse_tokens(tokens, pos)?;
        let right = parse_tokens(tokens, pos)?;
        if tokens.get(*pos).map(String::as_str) != Some(")") {
            return Err(Error::invalid("expected ')' after two subtrees"));
        }
        *pos += 1;
        Ok(WeightedBinaryTree::join(left, right))
    } else {
        let label = tok
            .parse()
            .map_err(|_| Error::invalid(format!("bad leaf label {tok:?}")))?;
        Ok(WeightedBinaryTree::leaf(label))
    }
}
