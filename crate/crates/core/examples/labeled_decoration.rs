//! Decorating graphs, with and without node labels.

use hyperset::decoration::{check_decoration, decorate, decorate_labeled, Labeling};
use hyperset::kernel::make_set;
use hyperset::operators::dual;
use hyperset::{NodeId, SetGraph, SetValue};

fn main() -> hyperset::Result<()> {
    // a → b → c, c → a: every node decorates to Ω.
    let g = SetGraph::from_edges(3, [(0, 1), (1, 2), (2, 0)])?;
    let d = decorate(&g);
    for a in g.nodes() {
        println!("d({}) = {}", a.index(), d[a]);
    }

    // A self-loop labeled {b} solves x = {x} ∪ {b}, the dual of b.
    let b = make_set([&SetValue::empty(), &SetValue::quine_atom()]);
    let self_loop = SetGraph::from_edges(1, [(0, 0)])?;
    let mut labels = Labeling::new();
    labels.set(NodeId::new(0), make_set([&b]));
    let d = decorate_labeled(&self_loop, &labels)?;
    println!("x = {{x}} ∪ {{b}} gives {}", d[NodeId::new(0)]);
    assert_eq!(d[NodeId::new(0)], dual(&b));
    assert!(check_decoration(&self_loop, &d, Some(&labels)).is_ok());

    // Any other assignment is rejected, with the node that breaks.
    let mut wrong = d.clone();
    wrong.set(NodeId::new(0), b.clone());
    let v = check_decoration(&self_loop, &wrong, Some(&labels)).unwrap_err();
    println!("{} at node {} should be {}", v.assigned, v.node.index(), v.required);
    Ok(())
}
