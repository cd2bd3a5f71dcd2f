use std::collections::BTreeSet;

use crate::encodings::nat_to_set;
use crate::kernel::{make_set, NodeId, SetGraph, SetValue};

use super::dual;

/// Every set whose minimal picture has at most `max_nodes` nodes, sorted.
///
/// Enumerates all graphs on up to `max_nodes` nodes pointed at node 0, so
/// the cost is `2^(max_nodes²)`; 4 is the practical ceiling.
pub fn sets_with_pictures_up_to(max_nodes: usize) -> Vec<SetValue> {
    assert!(max_nodes <= 4, "enumeration is exponential in max_nodes²");
    let mut out = BTreeSet::new();
    for n in 1..=max_nodes {
        let slots = n * n;
        for mask in 0u32..(1u32 << slots) {
            let mut g = SetGraph::new(n);
            for bit in 0..slots {
                if mask >> bit & 1 == 1 {
                    g.add_edge(NodeId::new(bit / n), NodeId::new(bit % n))
                        .expect("nodes exist");
                }
            }
            // Only accessible graphs; the others repeat smaller pictures.
            if g.reachable_from(NodeId::new(0)).len() == n {
                out.insert(SetValue::from_graph(&g, NodeId::new(0)).expect("point exists"));
            }
        }
    }
    out.into_iter().collect()
}

/// Sets that serve as worked examples for the operator identities.
pub fn named_examples() -> Vec<(&'static str, SetValue)> {
    let e = SetValue::empty();
    let om = SetValue::quine_atom();
    let one = make_set([&e]);
    let eo = make_set([&e, &om]);
    let a1 = make_set([&eo]);
    let a2 = make_set([&e, &om, &eo]);
    let dual_e = dual(&e);
    let dual_one = dual(&one);
    vec![
        ("empty", e.clone()),
        ("omega", om.clone()),
        ("one", one.clone()),
        ("two", nat_to_set(2)),
        ("three", nat_to_set(3)),
        ("empty_omega", eo),
        ("a1", a1),
        ("a2", a2),
        ("dual_empty", dual_e.clone()),
        ("dual_one", dual_one.clone()),
        ("dual_dual_empty", dual(&dual_e)),
        ("pair_of_duals", make_set([&dual_e, &dual_one])),
        ("brace_dual_empty", make_set([&dual_e])),
        ("omega_and_ordinals", make_set([&om, &e, &one])),
    ]
}

/// The default corpus for pointwise operator checks: all sets with
/// pictures of at most four nodes, plus [`named_examples`].
pub fn small_corpus() -> Vec<SetValue> {
    let mut all: BTreeSet<SetValue> = sets_with_pictures_up_to(4).into_iter().collect();
    all.extend(named_examples().into_iter().map(|(_, v)| v));
    all.into_iter().collect()
}
