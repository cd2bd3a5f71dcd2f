//! Canonical minimal pictures.
//!
//! `canon(g, p)` keeps the nodes reachable from `p`, collapses bisimilar
//! nodes, and renumbers the quotient so that two graphs picturing the same
//! set come out bit-identical. The numbering is a breadth-first walk from
//! the point whose children are visited in the order of an
//! isomorphism-invariant key: the block id each node receives when the
//! (already minimal) quotient is refined a second time.

use super::graph::{NodeId, SetGraph};
use super::partition::coarsest_bisimulation;

/// Restriction of `graph` to the nodes reachable from `point`, with the
/// point renumbered to 0.
fn reachable_subgraph(graph: &SetGraph, point: NodeId) -> SetGraph {
    let order = graph.reachable_from(point);
    let mut renum = vec![u32::MAX; graph.node_count()];
    for (i, n) in order.iter().enumerate() {
        renum[n.index()] = i as u32;
    }
    let succ = order
        .iter()
        .map(|n| {
            let mut cs: Vec<NodeId> = graph
                .children(*n)
                .iter()
                .map(|c| NodeId::new(renum[c.index()] as usize))
                .collect();
            cs.sort_unstable();
            cs
        })
        .collect();
    SetGraph::from_succ(succ)
}

/// Quotient of `graph` by its coarsest bisimulation, together with the
/// block of each original node.
pub(crate) fn quotient(graph: &SetGraph) -> (SetGraph, Vec<NodeId>) {
    let part = coarsest_bisimulation(graph);
    let mut succ = vec![Vec::new(); part.block_count()];
    let mut done = vec![false; part.block_count()];
    for n in graph.nodes() {
        let b = part.block_of(n);
        if std::mem::replace(&mut done[b], true) {
            continue;
        }
        let mut cs: Vec<NodeId> = graph
            .children(n)
            .iter()
            .map(|&c| NodeId::new(part.block_of(c)))
            .collect();
        cs.sort_unstable();
        cs.dedup();
        succ[b] = cs;
    }
    let block_of = graph.nodes().map(|n| NodeId::new(part.block_of(n))).collect();
    (SetGraph::from_succ(succ), block_of)
}

/// Canonical numbering of a minimal accessible pointed graph whose point
/// is node 0.
fn number_minimal(graph: &SetGraph) -> SetGraph {
    let n = graph.node_count();
    let rank = coarsest_bisimulation(graph);
    debug_assert!(rank.is_discrete(), "graph is not minimal");

    let mut new_id = vec![u32::MAX; n];
    let mut order = Vec::with_capacity(n);
    new_id[0] = 0;
    order.push(NodeId::new(0));
    let mut head = 0;
    let mut kids: Vec<NodeId> = Vec::new();
    while head < order.len() {
        let x = order[head];
        head += 1;
        kids.clear();
        kids.extend_from_slice(graph.children(x));
        kids.sort_unstable_by_key(|&c| rank.block_of(c));
        for &c in &kids {
            if new_id[c.index()] == u32::MAX {
                new_id[c.index()] = order.len() as u32;
                order.push(c);
            }
        }
    }

    let succ = order
        .iter()
        .map(|&x| {
            let mut cs: Vec<NodeId> = graph
                .children(x)
                .iter()
                .map(|c| NodeId::new(new_id[c.index()] as usize))
                .collect();
            cs.sort_unstable();
            cs
        })
        .collect();
    SetGraph::from_succ(succ)
}

/// Canonical minimal picture of the set decorating `point`.
pub(crate) fn canonical_graph(graph: &SetGraph, point: NodeId) -> SetGraph {
    let sub = reachable_subgraph(graph, point);
    let (q, block_of) = quotient(&sub);
    // Put the point's block first; reachability is preserved by the quotient.
    let point_block = block_of[0];
    let q = reachable_subgraph(&q, point_block);
    number_minimal(&q)
}

/// Like [`canonical_graph`], for a graph already known to be minimal.
pub(crate) fn canonical_subgraph_of_minimal(graph: &SetGraph, point: NodeId) -> SetGraph {
    let sub = reachable_subgraph(graph, point);
    number_minimal(&sub)
}
