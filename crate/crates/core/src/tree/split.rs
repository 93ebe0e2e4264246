use super::{NodeId, TreeNode, WeightedBinaryTree};
use crate::coloring::VertexColors;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// Which disagreeing bit a node splits on.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum BitOrder {
    /// Lowest disagreeing bit. Cross pairs of a node splitting on bit `t`
    /// then have 2-adic valuation of their difference exactly `t`.
    #[default]
    LowestFirst,
    /// Highest disagreeing bit. Sibling sets are contiguous ranges.
    HighestFirst,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeClass {
    Leaf,
    /// Internal with fewer than three leaves.
    Neutral,
    Good,
    Bad,
}

impl NodeClass {
    pub fn as_str(self) -> &'static str {
        match self {
            NodeClass::Leaf => "leaf",
            NodeClass::Neutral => "neutral",
            NodeClass::Good => "good",
            NodeClass::Bad => "bad",
        }
    }
}

/// Binary tree over a vertex set, split recursively on one bit. The
/// larger side is the left child (`S_0`); ties put bit value 0 left.
#[derive(Clone, Debug)]
pub struct SplitTree {
    pub tree: WeightedBinaryTree,
    pub ell: u32,
    pub order: BitOrder,
    /// Sorted vertex set of every node, indexed by node id.
    pub sets: Vec<Vec<u32>>,
    /// Split bit of internal nodes.
    pub split_bit: Vec<Option<u32>>,
}

impl SplitTree {
    /// `(S_0, S_1)` of an internal node.
    pub fn children_sets(&self, id: NodeId) -> Option<(&[u32], &[u32])> {
        self.tree
            .children(id)
            .map(|[a, b]| (self.sets[a].as_slice(), self.sets[b].as_slice()))
    }

    pub fn render(&self, classes: Option<&[NodeClass]>) -> String {
        self.tree.render(&|id| {
            let mut s = format!(
                "bit={} n={} w={} m={}",
                self.split_bit[id].unwrap(),
                self.tree.n(id),
                self.tree.weight(id).unwrap(),
                self.tree.lca_triples(id)
            );
            if let Some(c) = classes {
                s.push(' ');
                s.push_str(c[id].as_str());
            }
            Some(s)
        })
    }
}

pub fn build_split_tree(set: &[u32], ell: u32, order: BitOrder) -> Result<SplitTree> {
    if set.is_empty() {
        return Err(Error::invalid("split tree needs a nonempty set"));
    }
    if ell > 31 {
        return Err(Error::invalid(format!("ell={ell} exceeds 31")));
    }
    let mut s = set.to_vec();
    s.sort_unstable();
    if s.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::invalid("split tree set has duplicates"));
    }
    if let Some(&v) = s.iter().find(|&&v| (v as u64) >> ell != 0) {
        return Err(Error::invalid(format!("{v} does not fit in {ell} bits")));
    }
    let mut st = SplitTree {
        tree: WeightedBinaryTree::from_parts(Vec::new(), 0),
        ell,
        order,
        sets: Vec::new(),
        split_bit: Vec::new(),
    };
    let mut nodes = Vec::new();
    grow(&mut nodes, &mut st, s, order);
    st.tree = WeightedBinaryTree::from_parts(nodes, 0);
    Ok(st)
}

fn grow(nodes: &mut Vec<TreeNode>, st: &mut SplitTree, s: Vec<u32>, order: BitOrder) -> NodeId {
    let id = nodes.len();
    nodes.push(TreeNode {
        children: None,
        leaves: s.len() as u64,
        label: (s.len() == 1).then(|| s[0]),
    });
    st.sets.push(s.clone());
    st.split_bit.push(None);
    if s.len() == 1 {
        return id;
    }
    let disagree = s.iter().fold(0u32, |acc, &v| acc | (v ^ s[0]));
    let bit = match order {
        BitOrder::LowestFirst => disagree.trailing_zeros(),
        BitOrder::HighestFirst => 31 - disagree.leading_zeros(),
    };
    let (zeros, ones): (Vec<u32>, Vec<u32>) = s.iter().partition(|&&v| (v >> bit) & 1 == 0);
    let (s0, s1) = if ones.len() > zeros.len() {
        (ones, zeros)
    } else {
        (zeros, ones)
    };
    st.split_bit[id] = Some(bit);
    let a = grow(nodes, st, s0, order);
    let b = grow(nodes, st, s1, order);
    nodes[id].children = Some([a, b]);
    id
}

/// A node with at least three leaves is good when no color `c_t(u)`,
/// `t` its split bit, appears more than `|S_0| / 2` times over `u` in
/// `S_0`. Indexed by node id.
pub fn classify_good_nodes(split: &SplitTree, colors: &VertexColors) -> Result<Vec<NodeClass>> {
    let t = &split.tree;
    let mut out = vec![NodeClass::Leaf; t.num_nodes()];
    for id in t.internal_nodes() {
        if t.n(id) < 3 {
            out[id] = NodeClass::Neutral;
            continue;
        }
        let bit = split.split_bit[id].unwrap();
        let (s0, _) = split.children_sets(id).unwrap();
        let mut count: HashMap<u32, usize> = HashMap::new();
        for &u in s0 {
            let c = colors
                .get(bit, u)
                .ok_or_else(|| Error::invalid(format!("no color for level {bit}, vertex {u}")))?;
            *count.entry(c).or_default() += 1;
        }
        let worst = count.values().copied().max().unwrap_or(0);
        out[id] = if 2 * worst > s0.len() {
            NodeClass::Bad
        } else {
            NodeClass::Good
        };
    }
    Ok(out)
}

/// Sum of `m_v` over good nodes.
pub fn good_lca_triple_count(split: &SplitTree, classes: &[NodeClass]) -> u64 {
    split
        .tree
        .internal_nodes()
        .into_iter()
        .filter(|&v| classes[v] == NodeClass::Good)
        .map(|v| split.tree.lca_triples(v))
        .sum()
}
