use std::cmp::Ordering;
use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use super::canon::{canonical_graph, canonical_subgraph_of_minimal};
use super::graph::{NodeId, SetGraph};
use crate::error::Result;

/// A hereditarily finite, possibly non-well-founded set.
///
/// Stored as its canonical picture: the minimal accessible pointed graph,
/// point at node 0, numbered canonically. Two values are equal exactly when
/// the sets are equal, and equality is a structural comparison.
///
/// Cloning is cheap; values are immutable and `Send + Sync`.
#[derive(Clone)]
pub struct SetValue(Arc<Inner>);

struct Inner {
    graph: SetGraph,
    fingerprint: u64,
    children: OnceLock<Vec<SetValue>>,
}

impl SetValue {
    fn from_canonical(graph: SetGraph) -> Self {
        let mut h = DefaultHasher::new();
        graph.hash(&mut h);
        SetValue(Arc::new(Inner {
            fingerprint: h.finish(),
            graph,
            children: OnceLock::new(),
        }))
    }

    /// The set pictured by `graph` at `point`.
    pub fn from_graph(graph: &SetGraph, point: NodeId) -> Result<Self> {
        graph.check(point)?;
        Ok(Self::from_canonical(canonical_graph(graph, point)))
    }

    /// ∅
    pub fn empty() -> Self {
        Self::from_canonical(SetGraph::new(1))
    }

    /// The Quine atom Ω = {Ω}: one node with a self-loop.
    pub fn quine_atom() -> Self {
        let mut g = SetGraph::new(1);
        g.add_edge(NodeId::new(0), NodeId::new(0)).expect("node 0 exists");
        Self::from_canonical(g)
    }

    /// The canonical picture; the point is node 0.
    pub fn graph(&self) -> &SetGraph {
        &self.0.graph
    }

    pub fn point(&self) -> NodeId {
        NodeId::new(0)
    }

    pub fn node_count(&self) -> usize {
        self.0.graph.node_count()
    }

    /// Hash of the canonical form, stable within a build of this crate.
    pub fn fingerprint(&self) -> u64 {
        self.0.fingerprint
    }

    pub fn is_empty(&self) -> bool {
        self.0.graph.children(NodeId::new(0)).is_empty()
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.0.graph.children(NodeId::new(0)).len()
    }

    /// The elements, sorted ascending. Distinct by minimality.
    pub fn children(&self) -> &[SetValue] {
        self.0.children.get_or_init(|| {
            let g = &self.0.graph;
            let mut out: Vec<SetValue> = g
                .children(NodeId::new(0))
                .iter()
                .map(|&c| {
                    if c.index() == 0 {
                        self.clone()
                    } else {
                        Self::from_canonical(canonical_subgraph_of_minimal(g, c))
                    }
                })
                .collect();
            out.sort();
            out
        })
    }

    /// The set decorating node `node` of this value's own picture.
    pub fn node_value(&self, node: NodeId) -> Result<SetValue> {
        self.0.graph.check(node)?;
        if node.index() == 0 {
            return Ok(self.clone());
        }
        Ok(Self::from_canonical(canonical_subgraph_of_minimal(
            &self.0.graph,
            node,
        )))
    }

    /// `x ∈ self`.
    pub fn contains(&self, x: &SetValue) -> bool {
        self.children().binary_search(x).is_ok()
    }
}

impl PartialEq for SetValue {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.fingerprint == other.0.fingerprint && self.0.graph == other.0.graph)
    }
}

impl Eq for SetValue {}

impl Hash for SetValue {
    fn hash<H: Hasher>(&self, state: &mut H) {
        state.write_u64(self.0.fingerprint);
    }
}

impl Ord for SetValue {
    /// Smaller pictures first, then the canonical graphs lexicographically.
    fn cmp(&self, other: &Self) -> Ordering {
        if Arc::ptr_eq(&self.0, &other.0) {
            return Ordering::Equal;
        }
        self.node_count()
            .cmp(&other.node_count())
            .then_with(|| self.0.graph.cmp(&other.0.graph))
    }
}

impl PartialOrd for SetValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for SetValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetValue({self})")
    }
}

impl fmt::Display for SetValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::print::render(self))
    }
}
