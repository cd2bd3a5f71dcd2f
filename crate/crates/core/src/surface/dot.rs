use std::fmt::Write;

use crate::kernel::{SetGraph, SetValue};
use crate::neural::{NeuralNet, NeuralState};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// The canonical picture of `x`; the point is drawn as a double circle.
pub fn set_to_dot(x: &SetValue) -> String {
    let g = x.graph();
    let mut out = String::from("digraph set {\n  node [shape=circle, label=\"\"];\n");
    for v in g.nodes() {
        let shape = if v == x.point() { "doublecircle" } else { "circle" };
        writeln!(out, "  n{} [shape={shape}, xlabel=\"x{}\"];", v.index(), v.index()).unwrap();
    }
    for (a, b) in g.edges() {
        writeln!(out, "  n{} -> n{};", a.index(), b.index()).unwrap();
    }
    out.push_str("}\n");
    out
}

/// A bare graph, with node names when given.
pub fn graph_to_dot(g: &SetGraph, names: Option<&[String]>) -> String {
    let mut out = String::from("digraph graph_ {\n");
    for v in g.nodes() {
        let label = names.map_or_else(|| format!("n{}", v.index()), |n| n[v.index()].clone());
        writeln!(out, "  n{} [label={}];", v.index(), quote(&label)).unwrap();
    }
    for (a, b) in g.edges() {
        writeln!(out, "  n{} -> n{};", a.index(), b.index()).unwrap();
    }
    out.push_str("}\n");
    out
}

/// A network; with a state, firing neurons are filled and synapses carry
/// their weights.
pub fn network_to_dot(net: &NeuralNet, state: Option<&NeuralState>) -> String {
    let mut out = String::from("digraph network {\n");
    if let Some(s) = state {
        writeln!(out, "  label=\"t = {}\";", s.time).unwrap();
    }
    for v in net.graph().nodes() {
        let mut attrs = format!("label={}", quote(net.name(v)));
        if v == net.point() {
            attrs.push_str(", peripheries=2");
        }
        if state.is_some_and(|s| s.voltage(v)) {
            attrs.push_str(", style=filled, fillcolor=gray");
        }
        writeln!(out, "  n{} [{attrs}];", v.index()).unwrap();
    }
    for (i, &(a, b)) in net.edges().iter().enumerate() {
        match state {
            Some(s) => writeln!(
                out,
                "  n{} -> n{} [label={}];",
                a.index(),
                b.index(),
                quote(&s.weights[i].to_string())
            )
            .unwrap(),
            None => writeln!(out, "  n{} -> n{};", a.index(), b.index()).unwrap(),
        }
    }
    out.push_str("}\n");
    out
}
