//! Decorations of finite graphs: the unique assignment of a set to every
//! node such that each node's set has exactly its children's sets as
//! elements, optionally unioned with a per-node label set.
//!
//! Labeled decorations are reduced to plain ones by splicing: each node
//! gets extra edges to a copy of its label's elements, after which the
//! ordinary decoration of the spliced graph solves the labeled equation.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::kernel::{make_set, quotient, NodeId, SetGraph, SetValue};

/// A set-valued labeling of graph nodes; unlabeled nodes carry ∅.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Labeling {
    labels: BTreeMap<NodeId, SetValue>,
}

impl Labeling {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, node: NodeId, label: SetValue) {
        if label.is_empty() {
            self.labels.remove(&node);
        } else {
            self.labels.insert(node, label);
        }
    }

    pub fn get(&self, node: NodeId) -> Option<&SetValue> {
        self.labels.get(&node)
    }

    /// The label of `node`, ∅ when absent.
    pub fn label(&self, node: NodeId) -> SetValue {
        self.get(node).cloned().unwrap_or_else(SetValue::empty)
    }

    pub fn iter(&self) -> impl Iterator<Item = (NodeId, &SetValue)> {
        self.labels.iter().map(|(&n, v)| (n, v))
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn validate(&self, graph: &SetGraph) -> Result<()> {
        match self.labels.keys().find(|n| n.index() >= graph.node_count()) {
            Some(n) => Err(Error::InvalidLabeling {
                node: n.index(),
                node_count: graph.node_count(),
            }),
            None => Ok(()),
        }
    }
}

impl FromIterator<(NodeId, SetValue)> for Labeling {
    fn from_iter<I: IntoIterator<Item = (NodeId, SetValue)>>(iter: I) -> Self {
        let mut l = Labeling::new();
        for (n, v) in iter {
            l.set(n, v);
        }
        l
    }
}

/// A set for every node of a graph, indexed by node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decoration(Vec<SetValue>);

impl Decoration {
    pub fn new(values: Vec<SetValue>) -> Self {
        Decoration(values)
    }

    pub fn get(&self, node: NodeId) -> &SetValue {
        &self.0[node.index()]
    }

    pub fn set(&mut self, node: NodeId, value: SetValue) {
        self.0[node.index()] = value;
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[SetValue] {
        &self.0
    }

    pub fn into_values(self) -> Vec<SetValue> {
        self.0
    }
}

impl std::ops::Index<NodeId> for Decoration {
    type Output = SetValue;
    fn index(&self, node: NodeId) -> &SetValue {
        self.get(node)
    }
}

/// The decoration of `graph`: `d(a) = canon(graph, a)` for every node.
pub fn decorate(graph: &SetGraph) -> Decoration {
    decorate_well_founded(graph).unwrap_or_else(|| decorate_by_quotient(graph))
}

/// Bottom-up construction for acyclic graphs; `None` if `graph` has a cycle.
pub fn decorate_well_founded(graph: &SetGraph) -> Option<Decoration> {
    let order = graph.topological_order()?;
    let mut values: Vec<Option<SetValue>> = vec![None; graph.node_count()];
    for a in order {
        let kids: Vec<&SetValue> = graph
            .children(a)
            .iter()
            .map(|c| values[c.index()].as_ref().expect("children come first"))
            .collect();
        values[a.index()] = Some(make_set(kids));
    }
    Some(Decoration(values.into_iter().map(|v| v.expect("all nodes visited")).collect()))
}

/// Decoration via one refinement of the whole graph.
fn decorate_by_quotient(graph: &SetGraph) -> Decoration {
    let (q, block_of) = quotient(graph);
    let mut per_block: HashMap<NodeId, SetValue> = HashMap::new();
    let values = block_of
        .iter()
        .map(|&b| {
            per_block
                .entry(b)
                .or_insert_with(|| SetValue::from_graph(&q, b).expect("block exists"))
                .clone()
        })
        .collect();
    Decoration(values)
}

/// The labeled decoration: `d(a) = {d(b) | a → b} ∪ λ(a)` for every node.
pub fn decorate_labeled(graph: &SetGraph, labeling: &Labeling) -> Result<Decoration> {
    labeling.validate(graph)?;
    if labeling.is_empty() {
        return Ok(decorate(graph));
    }
    let n = graph.node_count();
    let mut spliced = graph.clone();
    let mut copies: HashMap<&SetValue, NodeId> = HashMap::new();
    for (a, label) in labeling.iter() {
        let p = *copies
            .entry(label)
            .or_insert_with(|| spliced.append(label.graph()));
        let kids: Vec<NodeId> = label
            .graph()
            .children(label.point())
            .iter()
            .map(|c| NodeId::new(c.index() + p.index()))
            .collect();
        for c in kids {
            spliced.add_edge(a, c)?;
        }
    }
    let mut values = decorate(&spliced).into_values();
    values.truncate(n);
    Ok(Decoration(values))
}

/// First node at which a proposed decoration breaks its defining equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecorationViolation {
    pub node: NodeId,
    pub assigned: SetValue,
    /// `{d(b) | a → b} ∪ λ(a)` computed from the proposed values.
    pub required: SetValue,
}

/// Verifies `d(a) = {d(b) | a → b} ∪ λ(a)` at every node (λ = ∅ when no
/// labeling is given).
pub fn check_decoration(
    graph: &SetGraph,
    decoration: &Decoration,
    labeling: Option<&Labeling>,
) -> Result<(), DecorationViolation> {
    assert_eq!(
        decoration.len(),
        graph.node_count(),
        "decoration must cover every node"
    );
    for a in graph.nodes() {
        let mut elems: Vec<&SetValue> = graph.children(a).iter().map(|&b| &decoration[b]).collect();
        if let Some(label) = labeling.and_then(|l| l.get(a)) {
            elems.extend(label.children());
        }
        let required = make_set(elems);
        if required != decoration[a] {
            return Err(DecorationViolation {
                node: a,
                assigned: decoration[a].clone(),
                required,
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::dual;

    fn e() -> SetValue {
        SetValue::empty()
    }
    fn om() -> SetValue {
        SetValue::quine_atom()
    }

    #[test]
    fn plain_examples() {
        let self_loop = SetGraph::from_edges(1, [(0, 0)]).unwrap();
        assert_eq!(decorate(&self_loop)[NodeId::new(0)], om());

        let chain = SetGraph::from_edges(2, [(0, 1)]).unwrap();
        let d = decorate(&chain);
        assert_eq!(d[NodeId::new(1)], e());
        assert_eq!(d[NodeId::new(0)], make_set([&e()]));

        let cycle = SetGraph::from_edges(2, [(0, 1), (1, 0)]).unwrap();
        let d = decorate(&cycle);
        assert!(d.values().iter().all(|v| *v == om()));
    }

    #[test]
    fn labeled_examples() {
        let g = SetGraph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(decorate_labeled(&g, &Labeling::new()).unwrap(), decorate(&g));

        let b = make_set([&e(), &om()]);
        let self_loop = SetGraph::from_edges(1, [(0, 0)]).unwrap();
        let lab: Labeling = [(NodeId::new(0), make_set([&b]))].into_iter().collect();
        let d = decorate_labeled(&self_loop, &lab).unwrap();
        assert_eq!(d[NodeId::new(0)], dual(&b));

        let lone = SetGraph::new(1);
        let lab: Labeling = [(NodeId::new(0), b.clone())].into_iter().collect();
        assert_eq!(decorate_labeled(&lone, &lab).unwrap()[NodeId::new(0)], b);
    }

    #[test]
    fn invalid_labeling() {
        let lab: Labeling = [(NodeId::new(4), om())].into_iter().collect();
        assert_eq!(
            decorate_labeled(&SetGraph::new(2), &lab),
            Err(Error::InvalidLabeling { node: 4, node_count: 2 })
        );
    }

    #[test]
    fn checker() {
        let self_loop = SetGraph::from_edges(1, [(0, 0)]).unwrap();
        assert!(check_decoration(&self_loop, &decorate(&self_loop), None).is_ok());
        let bad = Decoration::new(vec![e()]);
        let v = check_decoration(&self_loop, &bad, None).unwrap_err();
        assert_eq!(v.node, NodeId::new(0));
        assert_eq!(v.required, make_set([&e()]));
    }

    #[test]
    fn well_founded_path_only_for_acyclic_graphs() {
        let cyc = SetGraph::from_edges(2, [(0, 1), (1, 1)]).unwrap();
        assert!(decorate_well_founded(&cyc).is_none());
        let dag = SetGraph::from_edges(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        let d = decorate_well_founded(&dag).unwrap();
        assert_eq!(d[NodeId::new(0)], crate::encodings::nat_to_set(2));
    }
}
