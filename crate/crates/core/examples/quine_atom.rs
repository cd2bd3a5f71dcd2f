//! Building hypersets from graphs and comparing them by bisimulation.

use hyperset::kernel::{canon, elem, is_abnormal, is_well_founded, make_set, union2};
use hyperset::{SetGraph, SetValue, NodeId};

fn main() -> hyperset::Result<()> {
    // Ω = {Ω} pictured three ways: a self-loop, a 2-cycle, a 3-cycle.
    let loop1 = SetGraph::from_edges(1, [(0, 0)])?;
    let loop2 = SetGraph::from_edges(2, [(0, 1), (1, 0)])?;
    let loop3 = SetGraph::from_edges(3, [(0, 1), (1, 2), (2, 0)])?;
    let omega = canon(&loop1, NodeId::new(0))?;
    for g in [&loop2, &loop3] {
        assert_eq!(canon(g, NodeId::new(0))?, omega);
    }
    println!("Ω              = {omega}");
    println!("Ω ∈ Ω          = {}", elem(&omega, &omega));
    println!("abnormal       = {}", is_abnormal(&omega));
    println!("well-founded   = {}", is_well_founded(&omega));

    // x = {∅, x} has no finite brace literal either.
    let g = SetGraph::from_edges(2, [(0, 0), (0, 1)])?;
    let x = canon(&g, NodeId::new(0))?;
    println!("x = {{∅, x}}    = {x}");
    println!("{{Ω}} ∪ {{∅}}    = {}", union2(&make_set([&omega]), &make_set([&SetValue::empty()])));

    // Canonical pictures are minimal: the 3-cycle collapses to one node.
    println!("nodes in Ω's picture: {}", omega.node_count());
    Ok(())
}
