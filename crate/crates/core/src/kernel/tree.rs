use super::graph::NodeId;
use super::value::SetValue;

/// A node of the canonical tree of a set: a membership chain starting at
/// the root set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeNode {
    /// Canonical node ids from the root down to this node.
    pub chain: Vec<NodeId>,
    pub children: Vec<TreeNode>,
    /// The set here has elements that were cut off by the depth bound.
    pub truncated: bool,
}

impl TreeNode {
    /// Canonical node of the set at the end of the chain.
    pub fn node(&self) -> NodeId {
        *self.chain.last().expect("chains are non-empty")
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(TreeNode::size).sum::<usize>()
    }

    pub fn height(&self) -> usize {
        self.children.iter().map(|c| 1 + c.height()).max().unwrap_or(0)
    }
}

/// The canonical tree of `x` unfolded `depth` levels. Non-well-founded sets
/// have infinite trees, so the bound is mandatory.
pub fn unfold_tree(x: &SetValue, depth: usize) -> TreeNode {
    fn go(x: &SetValue, chain: Vec<NodeId>, left: usize) -> TreeNode {
        let kids = x.graph().children(*chain.last().expect("non-empty"));
        if left == 0 {
            return TreeNode {
                truncated: !kids.is_empty(),
                chain,
                children: Vec::new(),
            };
        }
        let children = kids
            .iter()
            .map(|&k| {
                let mut c = chain.clone();
                c.push(k);
                go(x, c, left - 1)
            })
            .collect();
        TreeNode {
            chain,
            children,
            truncated: false,
        }
    }
    go(x, vec![x.point()], depth)
}
