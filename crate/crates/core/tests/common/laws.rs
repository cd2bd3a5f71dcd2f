//! Randomised law checks for the kernel, decorations, encodings and network
//! dynamics. Like `checks`, each returns the first counterexample as text.

use hyperset::decoration::{
    check_decoration, decorate, decorate_labeled, decorate_well_founded, Decoration, Labeling,
};
use hyperset::encodings::{
    histogram_of, histogram_to_set, nat_to_set, pair, rat_to_set, set_to_histogram, set_to_nat,
    set_to_rat, unpair, Rational,
};
use hyperset::kernel::{coarsest_bisimulation, is_well_founded, make_set};
use hyperset::neural::{mz_decorate, run, state_labeling, step, NeuralNet, NeuralState};
use hyperset::{NodeId, SetGraph, SetValue};
use num_rational::BigRational;
use rand::Rng;

use super::checks::Check;
use super::{naive_bisimulation, random_graph, random_net, random_rational, random_set};

/// The refinement partition and the brute-force relation agree on `g`.
pub fn partition_matches_oracle(g: &SetGraph) -> Check {
    let fast = coarsest_bisimulation(g);
    let slow = naive_bisimulation(g);
    let n = g.node_count();
    for (a, row) in slow.iter().enumerate().take(n) {
        for (b, &related) in row.iter().enumerate() {
            if fast.same_block(NodeId::new(a), NodeId::new(b)) != related {
                return Err(format!("nodes {a} and {b} of {g:?}: oracle says {related}"));
            }
        }
    }
    Ok(())
}

/// A value differing from `x`.
fn perturb(x: &SetValue) -> SetValue {
    let candidate = make_set([x]);
    if candidate != *x {
        candidate
    } else {
        SetValue::empty()
    }
}

/// `decorate` passes the checker, and changing any single node's value
/// makes it fail.
pub fn decoration_is_unique(g: &SetGraph) -> Check {
    let d = decorate(g);
    check_decoration(g, &d, None).map_err(|v| format!("{g:?}: rejected at {:?}", v.node))?;
    for a in g.nodes() {
        let mut bad = d.clone();
        bad.set(a, perturb(&d[a]));
        if check_decoration(g, &bad, None).is_ok() {
            return Err(format!("{g:?}: perturbing node {} went unnoticed", a.index()));
        }
    }
    Ok(())
}

pub fn random_labeling(rng: &mut impl Rng, g: &SetGraph) -> Labeling {
    let mut labeling = Labeling::new();
    for a in g.nodes() {
        if rng.gen_bool(0.5) {
            labeling.set(a, random_set(rng, 4));
        }
    }
    labeling
}

/// The labeled decoration satisfies its equation, each node's elements are
/// exactly its children's values plus its label's elements, and on acyclic
/// graphs it matches a bottom-up construction.
pub fn labeled_decoration_is_correct(g: &SetGraph, labeling: &Labeling) -> Check {
    let d = decorate_labeled(g, labeling).map_err(|e| e.to_string())?;
    check_decoration(g, &d, Some(labeling))
        .map_err(|v| format!("{g:?}: violated at {:?}", v.node))?;
    for a in g.nodes() {
        let mut want: Vec<&SetValue> = g.children(a).iter().map(|&b| &d[b]).collect();
        want.extend(labeling.get(a).map(|l| l.children()).unwrap_or_default());
        for y in d[a].children() {
            if !want.contains(&y) {
                return Err(format!("{g:?}: stray element {y} at node {}", a.index()));
            }
        }
        for y in &want {
            if !d[a].contains(y) {
                return Err(format!("{g:?}: missing element {y} at node {}", a.index()));
            }
        }
    }
    if let Some(order) = g.topological_order() {
        let mut values: Vec<Option<SetValue>> = vec![None; g.node_count()];
        for a in order {
            let mut elems: Vec<SetValue> = g
                .children(a)
                .iter()
                .map(|b| values[b.index()].clone().unwrap())
                .collect();
            elems.extend(labeling.label(a).children().iter().cloned());
            values[a.index()] = Some(make_set(&elems));
        }
        let bottom_up = Decoration::new(values.into_iter().map(Option::unwrap).collect());
        if bottom_up != d {
            return Err(format!("{g:?}: splice and bottom-up construction disagree"));
        }
    }
    if decorate_labeled(g, &Labeling::new()).map_err(|e| e.to_string())? != decorate(g) {
        return Err(format!("{g:?}: empty labeling differs from the plain decoration"));
    }
    Ok(())
}

/// Acyclic graphs take the bottom-up path and agree with it; graphs with a
/// reachable cycle decorate to non-well-founded sets.
pub fn decoration_paths_agree(g: &SetGraph) -> Check {
    let d = decorate(g);
    if let Some(w) = decorate_well_founded(g) {
        if w != d {
            return Err(format!("{g:?}: bottom-up and quotient decorations differ"));
        }
    }
    for a in g.nodes() {
        if g.has_cycle_from(a) == is_well_founded(&d[a]) {
            return Err(format!("{g:?}: node {} cycle/well-foundedness mismatch", a.index()));
        }
    }
    Ok(())
}

/// Naturals, reduced rationals and pairs invert exactly and encode to
/// well-founded sets; histograms keep their counts and stay distinct.
pub fn encodings_round_trip(rng: &mut impl Rng, pairs: usize) -> Check {
    for n in 0..=100 {
        let x = nat_to_set(n);
        if set_to_nat(&x) != Ok(n) || !is_well_founded(&x) {
            return Err(format!("natural {n}"));
        }
    }
    for m in -50i64..=50 {
        for n in 1i64..=50 {
            if num_integer::gcd(m, n) != 1 {
                continue;
            }
            let q = Rational::new(m, n);
            let x = rat_to_set(&q);
            if set_to_rat(&x).as_ref() != Ok(&q) || !is_well_founded(&x) {
                return Err(format!("rational {m}/{n}"));
            }
        }
    }
    for _ in 0..pairs {
        let (a, b) = (random_set(rng, 5), random_set(rng, 5));
        let p = pair(&a, &b);
        if unpair(&p) != Ok((a.clone(), b.clone())) {
            return Err(format!("pair of {a} and {b}"));
        }
        if is_well_founded(&a) && is_well_founded(&b) && !is_well_founded(&p) {
            return Err(format!("pair of well-founded {a} and {b} is not well-founded"));
        }
    }
    let mut seen: Vec<(Vec<Rational>, SetValue)> = Vec::new();
    for _ in 0..200 {
        let len = rng.gen_range(0..6);
        let mut values: Vec<Rational> = (0..len).map(|_| random_rational(rng, 2, 2)).collect();
        let h = histogram_of(values.iter().cloned());
        if h.total() != len {
            return Err(format!("histogram of {len} values counts {}", h.total()));
        }
        let x = histogram_to_set(&h);
        if set_to_histogram(&x).as_ref() != Ok(&h) || !is_well_founded(&x) {
            return Err(format!("histogram of {values:?}"));
        }
        values.sort();
        for (other, y) in &seen {
            if (*other == values) != (*y == x) {
                return Err(format!("histograms of {values:?} and {other:?}"));
            }
        }
        seen.push((values, x));
    }
    Ok(())
}

fn zero() -> BigRational {
    BigRational::from_integer(0.into())
}

/// Recomputes one update from scratch with plain big rationals.
fn oracle_step(net: &NeuralNet, s: &NeuralState) -> (Vec<bool>, Vec<BigRational>) {
    let n = net.neuron_count();
    let mut sums = vec![zero(); n];
    for (i, &(a, b)) in net.edges().iter().enumerate() {
        if s.voltages[a.index()] {
            sums[b.index()] += s.weights[i].as_big();
        }
    }
    let voltages: Vec<bool> = sums.iter().map(|x| x >= net.theta().as_big()).collect();
    let weights = net
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &(a, b))| {
            let w = s.weights[i].as_big().clone();
            if s.voltages[a.index()] && voltages[b.index()] {
                w + net.alpha().as_big()
            } else {
                w
            }
        })
        .collect();
    (voltages, weights)
}

/// States after each of `steps` updates, starting with `initial`.
fn iterate(net: &NeuralNet, initial: &NeuralState, steps: usize) -> Vec<NeuralState> {
    let mut states = vec![initial.clone()];
    for _ in 0..steps {
        states.push(step(net, states.last().unwrap()));
    }
    states
}

/// Labeled decorations are checked over at most this many states; weights
/// grow by α per step and their ordinal encodings grow quadratically.
pub const DECORATED_STATES: usize = 20;

/// Over `steps` updates: two runs are identical, every update matches the
/// threshold/Hebb oracle, only synapses from a firing source into a firing
/// target change (by exactly α), and the first states' labeled
/// decorations pass the checker.
pub fn dynamics_laws(net: &NeuralNet, initial: &NeuralState, steps: usize) -> Check {
    let first = iterate(net, initial, steps);
    if first != iterate(net, initial, steps) {
        return Err("two runs from the same state differ".into());
    }
    for (k, pair) in first.windows(2).enumerate() {
        let (old, new) = (&pair[0], &pair[1]);
        if new.time != old.time + 1 {
            return Err(format!("time jumps from {} to {}", old.time, new.time));
        }
        let (v, w) = oracle_step(net, old);
        if new.voltages != v {
            return Err(format!("step {k}: voltages {:?}, oracle {v:?}", new.voltages));
        }
        for (i, &(a, b)) in net.edges().iter().enumerate() {
            if new.weights[i].as_big() != &w[i] {
                return Err(format!("step {k}: weight of edge {i} differs from oracle"));
            }
            let fired = old.voltages[a.index()] && new.voltages[b.index()];
            let delta = new.weights[i].as_big() - old.weights[i].as_big();
            let want = if fired { net.alpha().as_big().clone() } else { zero() };
            if delta != want {
                return Err(format!("step {k}: edge {i} changed by {delta}"));
            }
        }
    }
    let shown = steps.min(DECORATED_STATES - 1);
    let traj = run(net, initial, shown, false).map_err(|e| e.to_string())?;
    for (e, s) in traj.entries.iter().zip(&first) {
        if e.state != *s {
            return Err(format!("t={}: run and step disagree", e.time));
        }
        let labeling = state_labeling(net, &e.state).map_err(|e| e.to_string())?;
        let d = mz_decorate(net, &e.state).map_err(|e| e.to_string())?;
        check_decoration(net.graph(), &d, Some(&labeling))
            .map_err(|v| format!("t={}: decoration violated at {:?}", e.time, v.node))?;
        if d[net.point()] != e.thema {
            return Err(format!("t={}: recorded thema is not the point's value", e.time));
        }
    }
    Ok(())
}

/// With θ > 0 and no neuron firing, a step changes nothing but the clock.
pub fn quiescent_is_fixed(net: &NeuralNet, steps: usize) -> Check {
    let s0 = NeuralState::quiescent(net, Rational::new(1, 3));
    let mut s = s0.clone();
    for _ in 0..steps {
        s = step(net, &s);
        if s.voltages != s0.voltages || s.weights != s0.weights {
            return Err(format!("quiescent state moved by t={}", s.time));
        }
    }
    let traj = run(net, &s0, steps, false).map_err(|e| e.to_string())?;
    if traj.themata().any(|t| *t != traj.entries[0].thema) {
        return Err("quiescent thema changed".into());
    }
    Ok(())
}

/// With no neuron firing, every label is empty and the labeled decoration
/// is the plain one.
pub fn mz_reduces_when_silent(net: &NeuralNet, state: &NeuralState) -> Check {
    let silent = NeuralState::new(net, state.weights.clone(), vec![false; net.neuron_count()])
        .map_err(|e| e.to_string())?;
    let d = mz_decorate(net, &silent).map_err(|e| e.to_string())?;
    if d != decorate(net.graph()) {
        return Err(format!("silent state of {:?} decorates differently", net.graph()));
    }
    Ok(())
}

/// Random networks of up to `max_nodes` neurons with θ forced positive.
pub fn random_quiescent_net(rng: &mut impl Rng, max_nodes: usize) -> NeuralNet {
    let g = random_graph(rng, max_nodes, 0.35);
    let theta = Rational::new(rng.gen_range(1..=3), rng.gen_range(1..=3));
    let point = NodeId::new(rng.gen_range(0..g.node_count()));
    NeuralNet::new(g, Rational::new(1, 2), theta, point).unwrap()
}

pub fn random_nets(rng: &mut impl Rng, count: usize, max_nodes: usize) -> Vec<(NeuralNet, NeuralState)> {
    (0..count).map(|_| random_net(rng, max_nodes)).collect()
}
