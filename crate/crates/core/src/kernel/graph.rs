use std::fmt;

use crate::error::{Error, Result};

/// Dense index of a node within one [`SetGraph`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct NodeId(u32);

impl NodeId {
    pub fn new(index: usize) -> Self {
        NodeId(u32::try_from(index).expect("node index exceeds u32::MAX"))
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<usize> for NodeId {
    fn from(index: usize) -> Self {
        NodeId::new(index)
    }
}

impl fmt::Debug for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n{}", self.0)
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite directed graph read as a system of set equations: each node
/// stands for the set of the sets its children stand for.
///
/// Child lists are kept sorted and free of duplicates, so the edge
/// collection is always a set.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetGraph {
    succ: Vec<Vec<NodeId>>,
}

impl SetGraph {
    pub fn new(node_count: usize) -> Self {
        SetGraph {
            succ: vec![Vec::new(); node_count],
        }
    }

    /// Builds a graph from an edge list, ignoring repeated edges.
    pub fn from_edges(
        node_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut g = SetGraph::new(node_count);
        for (a, b) in edges {
            g.add_edge(NodeId::new(a), NodeId::new(b))?;
        }
        Ok(g)
    }

    pub(crate) fn from_succ(succ: Vec<Vec<NodeId>>) -> Self {
        debug_assert!(succ
            .iter()
            .all(|c| c.windows(2).all(|w| w[0] < w[1]) && c.iter().all(|n| n.index() < succ.len())));
        SetGraph { succ }
    }

    pub fn node_count(&self) -> usize {
        self.succ.len()
    }

    pub fn edge_count(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    pub fn add_node(&mut self) -> NodeId {
        self.succ.push(Vec::new());
        NodeId::new(self.succ.len() - 1)
    }

    /// Adds `parent -> child`. Returns `false` if the edge was already present.
    pub fn add_edge(&mut self, parent: NodeId, child: NodeId) -> Result<bool> {
        self.check(parent)?;
        self.check(child)?;
        let list = &mut self.succ[parent.index()];
        match list.binary_search(&child) {
            Ok(_) => Ok(false),
            Err(pos) => {
                list.insert(pos, child);
                Ok(true)
            }
        }
    }

    pub fn has_edge(&self, parent: NodeId, child: NodeId) -> bool {
        self.succ
            .get(parent.index())
            .is_some_and(|c| c.binary_search(&child).is_ok())
    }

    pub fn children(&self, node: NodeId) -> &[NodeId] {
        &self.succ[node.index()]
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        (0..self.succ.len()).map(NodeId::new)
    }

    /// All edges in lexicographic `(parent, child)` order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(a, cs)| cs.iter().map(move |&b| (NodeId::new(a), b)))
    }

    pub fn check(&self, node: NodeId) -> Result<()> {
        if node.index() < self.succ.len() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange {
                node: node.index(),
                node_count: self.succ.len(),
            })
        }
    }

    /// Appends a disjoint copy of `other`; returns the id that `other`'s
    /// node 0 received.
    pub fn append(&mut self, other: &SetGraph) -> NodeId {
        let offset = self.succ.len();
        self.succ.extend(other.succ.iter().map(|cs| {
            cs.iter().map(|c| NodeId::new(c.index() + offset)).collect()
        }));
        NodeId::new(offset)
    }

    pub(crate) fn succ(&self) -> &[Vec<NodeId>] {
        &self.succ
    }

    /// Nodes reachable from `point`, in DFS discovery order (point first).
    pub fn reachable_from(&self, point: NodeId) -> Vec<NodeId> {
        let mut seen = vec![false; self.succ.len()];
        let mut order = Vec::new();
        let mut stack = vec![point];
        seen[point.index()] = true;
        while let Some(n) = stack.pop() {
            order.push(n);
            for &c in self.succ[n.index()].iter().rev() {
                if !seen[c.index()] {
                    seen[c.index()] = true;
                    stack.push(c);
                }
            }
        }
        order
    }

    /// True if some cycle is reachable from `point`.
    pub fn has_cycle_from(&self, point: NodeId) -> bool {
        // 0 = unvisited, 1 = on stack, 2 = done
        let mut state = vec![0u8; self.succ.len()];
        let mut stack: Vec<(NodeId, usize)> = vec![(point, 0)];
        state[point.index()] = 1;
        while let Some((n, i)) = stack.last_mut() {
            let n = *n;
            if let Some(&c) = self.succ[n.index()].get(*i) {
                *i += 1;
                match state[c.index()] {
                    0 => {
                        state[c.index()] = 1;
                        stack.push((c, 0));
                    }
                    1 => return true,
                    _ => {}
                }
            } else {
                state[n.index()] = 2;
                stack.pop();
            }
        }
        false
    }

    /// For every node, whether it lies on a cycle (self-loops included).
    pub fn on_cycle(&self) -> Vec<bool> {
        // Iterative Tarjan.
        let n = self.succ.len();
        const UNSEEN: u32 = u32::MAX;
        let mut index = vec![UNSEEN; n];
        let mut low = vec![0u32; n];
        let mut on_stack = vec![false; n];
        let mut stack = Vec::new();
        let mut result = vec![false; n];
        let mut next = 0u32;
        for root in 0..n {
            if index[root] != UNSEEN {
                continue;
            }
            let mut work: Vec<(usize, usize)> = vec![(root, 0)];
            index[root] = next;
            low[root] = next;
            next += 1;
            stack.push(root);
            on_stack[root] = true;
            while let Some(&mut (v, ref mut i)) = work.last_mut() {
                if let Some(&c) = self.succ[v].get(*i) {
                    *i += 1;
                    let c = c.index();
                    if index[c] == UNSEEN {
                        index[c] = next;
                        low[c] = next;
                        next += 1;
                        stack.push(c);
                        on_stack[c] = true;
                        work.push((c, 0));
                    } else if on_stack[c] {
                        low[v] = low[v].min(index[c]);
                    }
                } else {
                    work.pop();
                    if let Some(&(parent, _)) = work.last() {
                        low[parent] = low[parent].min(low[v]);
                    }
                    if low[v] == index[v] {
                        let mut members = Vec::new();
                        loop {
                            let w = stack.pop().expect("tarjan stack");
                            on_stack[w] = false;
                            members.push(w);
                            if w == v {
                                break;
                            }
                        }
                        let cyclic = members.len() > 1
                            || self.succ[v].binary_search(&NodeId::new(v)).is_ok();
                        if cyclic {
                            for w in members {
                                result[w] = true;
                            }
                        }
                    }
                }
            }
        }
        result
    }

    /// True if the whole graph is acyclic.
    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// Children-before-parents order, or `None` if the graph has a cycle.
    pub fn topological_order(&self) -> Option<Vec<NodeId>> {
        let n = self.succ.len();
        let mut outdeg: Vec<usize> = self.succ.iter().map(Vec::len).collect();
        let mut preds = vec![Vec::new(); n];
        for (a, b) in self.edges() {
            preds[b.index()].push(a);
        }
        let mut ready: Vec<NodeId> = (0..n).filter(|&i| outdeg[i] == 0).map(NodeId::new).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(x) = ready.pop() {
            order.push(x);
            for &p in &preds[x.index()] {
                outdeg[p.index()] -= 1;
                if outdeg[p.index()] == 0 {
                    ready.push(p);
                }
            }
        }
        (order.len() == n).then_some(order)
    }
}

impl fmt::Debug for SetGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.succ.iter().enumerate())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edges_are_a_set() {
        let mut g = SetGraph::new(2);
        assert!(g.add_edge(0.into(), 1.into()).unwrap());
        assert!(!g.add_edge(0.into(), 1.into()).unwrap());
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn out_of_range_edge() {
        let mut g = SetGraph::new(1);
        assert_eq!(
            g.add_edge(0.into(), 3.into()),
            Err(Error::NodeOutOfRange { node: 3, node_count: 1 })
        );
    }

    #[test]
    fn cycle_detection() {
        let chain = SetGraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(!chain.has_cycle_from(0.into()));
        assert!(chain.is_acyclic());
        let lasso = SetGraph::from_edges(3, [(0, 1), (1, 2), (2, 1)]).unwrap();
        assert!(lasso.has_cycle_from(0.into()));
        assert!(lasso.has_cycle_from(NodeId::new(2)));
        let unreachable_loop = SetGraph::from_edges(2, [(1, 1)]).unwrap();
        assert!(!unreachable_loop.has_cycle_from(0.into()));
        assert!(!unreachable_loop.is_acyclic());
    }
}
