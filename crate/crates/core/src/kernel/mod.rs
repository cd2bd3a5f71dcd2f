//! Finite hypersets as pointed graphs modulo bisimulation.
//!
//! Every set is a [`SetValue`]: the minimal picture of the set, numbered
//! canonically, so set equality is structural equality. Binary operations
//! splice their operands into one graph and canonicalise the result.

mod canon;
mod graph;
mod partition;
mod print;
mod tree;
mod value;

pub use graph::{NodeId, SetGraph};
pub use partition::{coarsest_bisimulation, Partition};
pub use tree::{unfold_tree, TreeNode};
pub use value::SetValue;

pub(crate) use canon::quotient;

use crate::error::Result;

/// Default bound on the size of any graph built by an evaluation.
pub const DEFAULT_MAX_NODES: usize = 1_000_000;

/// Resource bounds for evaluations that can grow graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_nodes: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_nodes: DEFAULT_MAX_NODES,
        }
    }
}

impl Limits {
    pub fn check(&self, nodes: usize) -> Result<()> {
        if nodes > self.max_nodes {
            Err(crate::Error::ResourceLimit {
                nodes,
                limit: self.max_nodes,
            })
        } else {
            Ok(())
        }
    }
}

/// The set whose elements are exactly `elements` (duplicates collapse).
pub fn make_set<'a>(elements: impl IntoIterator<Item = &'a SetValue>) -> SetValue {
    let mut g = SetGraph::new(1);
    let root = NodeId::new(0);
    for e in elements {
        let p = g.append(e.graph());
        g.add_edge(root, p).expect("spliced node exists");
    }
    SetValue::from_graph(&g, root).expect("root exists")
}

/// Canonical form of the set decorating `point` in `graph`.
pub fn canon(graph: &SetGraph, point: NodeId) -> Result<SetValue> {
    SetValue::from_graph(graph, point)
}

/// Set equality decided by refining the disjoint union of both pictures.
///
/// Agrees with `x == y`; kept as the independent definition of equality.
pub fn bisimilar(x: &SetValue, y: &SetValue) -> bool {
    let mut g = x.graph().clone();
    let py = g.append(y.graph());
    coarsest_bisimulation(&g).same_block(x.point(), py)
}

/// `x ∈ y`.
pub fn elem(x: &SetValue, y: &SetValue) -> bool {
    y.contains(x)
}

/// `x ⊆ y`.
pub fn subset(x: &SetValue, y: &SetValue) -> bool {
    x.len() <= y.len() && x.children().iter().all(|c| y.contains(c))
}

/// `x ∪ y`.
pub fn union2(x: &SetValue, y: &SetValue) -> SetValue {
    make_set(x.children().iter().chain(y.children()))
}

/// `x ∩ y`.
pub fn intersect(x: &SetValue, y: &SetValue) -> SetValue {
    make_set(x.children().iter().filter(|c| y.contains(c)))
}

/// `x − y`, the elements of `x` that are not elements of `y`.
pub fn diff(x: &SetValue, y: &SetValue) -> SetValue {
    make_set(x.children().iter().filter(|c| !y.contains(c)))
}

/// Monadic union `⋃a = {z | z ∈ b for some b ∈ a}`.
pub fn big_union(a: &SetValue) -> SetValue {
    make_set(a.children().iter().flat_map(|b| b.children()))
}

/// `x ∉ x`.
pub fn is_normal(x: &SetValue) -> bool {
    !x.contains(x)
}

/// `x ∈ x`.
pub fn is_abnormal(x: &SetValue) -> bool {
    x.contains(x)
}

/// True iff no infinite membership path starts at `x`, i.e. the canonical
/// picture is acyclic.
pub fn is_well_founded(x: &SetValue) -> bool {
    !x.graph().has_cycle_from(x.point())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn empty() -> SetValue {
        SetValue::empty()
    }
    fn omega() -> SetValue {
        SetValue::quine_atom()
    }
    fn set(xs: &[SetValue]) -> SetValue {
        make_set(xs)
    }

    #[test]
    fn make_set_examples() {
        let e = make_set([]);
        assert_eq!(e.node_count(), 1);
        assert_eq!(e.graph().edge_count(), 0);
        assert_eq!(set(&[empty(), empty()]), set(&[empty()]));
        let eo = set(&[empty(), omega()]);
        assert_eq!(eo.node_count(), 3);
        assert_eq!(eo.len(), 2);
        let loops = eo.graph().edges().filter(|(a, b)| a == b).count();
        assert_eq!(loops, 1);
    }

    #[test]
    fn canon_examples() {
        let two_cycle = SetGraph::from_edges(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(canon(&two_cycle, 0.into()).unwrap(), omega());
        assert_eq!(canon(&SetGraph::new(1), 0.into()).unwrap(), empty());
        let chain = SetGraph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(canon(&chain, 0.into()).unwrap(), set(&[empty()]));
        assert!(canon(&chain, 5.into()).is_err());
    }

    #[test]
    fn canon_is_idempotent_on_examples() {
        let g = SetGraph::from_edges(4, [(0, 1), (1, 2), (2, 1), (0, 3)]).unwrap();
        let once = canon(&g, 0.into()).unwrap();
        let twice = canon(once.graph(), once.point()).unwrap();
        assert_eq!(once.graph(), twice.graph());
    }

    #[test]
    fn bisimilar_examples() {
        let two_cycle = SetGraph::from_edges(2, [(0, 1), (1, 0)]).unwrap();
        assert!(bisimilar(&omega(), &canon(&two_cycle, 0.into()).unwrap()));
        assert!(!bisimilar(&empty(), &set(&[empty()])));
        assert!(bisimilar(&set(&[omega()]), &omega()));
    }

    #[test]
    fn children_examples() {
        assert!(empty().children().is_empty());
        assert_eq!(omega().children(), &[omega()]);
        let one = set(&[empty()]);
        let two = set(&[empty(), one.clone()]);
        assert_eq!(two.children(), &[empty(), one]);
    }

    #[test]
    fn elem_and_subset_examples() {
        let one = set(&[empty()]);
        assert!(elem(&empty(), &one));
        assert!(elem(&omega(), &omega()));
        assert!(!elem(&one, &one));

        assert!(subset(&empty(), &omega()));
        assert!(subset(&one, &set(&[empty(), omega()])));
        assert!(!subset(&set(&[omega()]), &one));
    }

    #[test]
    fn boolean_examples() {
        let one = set(&[empty()]);
        let so = set(&[omega()]);
        let eo = set(&[empty(), omega()]);
        assert_eq!(union2(&one, &so), eo);
        assert_eq!(intersect(&eo, &so), so);
        assert_eq!(diff(&so, &omega()), empty());
        assert_eq!(diff(&eo, &so), one);
    }

    #[test]
    fn normality_and_foundation() {
        assert!(is_normal(&empty()));
        assert!(!is_normal(&omega()));
        assert!(is_well_founded(&empty()));
        assert!(!is_well_founded(&omega()));
        let two = set(&[empty(), set(&[empty()])]);
        assert!(is_well_founded(&two));
        // {Ω} is well-founded-looking but equals Ω.
        assert!(!is_well_founded(&set(&[omega()])));
    }

    #[test]
    fn monadic_union() {
        let one = set(&[empty()]);
        let a = set(&[one.clone(), set(&[omega()])]);
        assert_eq!(big_union(&a), set(&[empty(), omega()]));
    }

    #[test]
    fn limits_guard() {
        let l = Limits { max_nodes: 3 };
        assert!(l.check(3).is_ok());
        assert_eq!(
            l.check(4),
            Err(crate::Error::ResourceLimit { nodes: 4, limit: 3 })
        );
    }

    #[test]
    fn printing_examples() {
        assert_eq!(empty().to_string(), "{}");
        assert_eq!(set(&[empty()]).to_string(), "{ {} }");
        let two = set(&[empty(), set(&[empty()])]);
        assert_eq!(two.to_string(), "{ {}, { {} } }");
        assert_eq!(omega().to_string(), "x0 where x0 = {x0}");
    }
}
