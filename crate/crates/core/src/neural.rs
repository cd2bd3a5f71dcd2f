//! Hebbian / McCulloch-Pitts networks and the sets their states decorate.
//!
//! A network is a finite directed graph of neurons; an edge `a → b` is a
//! synapse from `a` to `b` with a rational weight. The same graph serves
//! as the membership graph for decoration: neuron `a` decorates to the set
//! of its targets' decorations, unioned with the histogram of the weights
//! on its active in-synapses. The point's decoration is the state's thema.
//!
//! Everything is exact: weights are rationals, voltages are 0 or 1.

use crate::decoration::{decorate_labeled, Decoration, Labeling};
use crate::encodings::{histogram_of, histogram_to_set, Histogram, Rational};
use crate::error::{Error, Result};
use crate::kernel::{Limits, NodeId, SetGraph, SetValue};
use num_traits::Signed;

/// A network: connectivity, learning rate α, firing threshold θ and the
/// distinguished neuron whose decoration is the thema.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeuralNet {
    graph: SetGraph,
    edges: Vec<(NodeId, NodeId)>,
    in_edges: Vec<Vec<usize>>,
    alpha: Rational,
    theta: Rational,
    point: NodeId,
    names: Vec<String>,
    limits: Limits,
}

impl NeuralNet {
    /// Neurons are named `n0, n1, …` unless [`NeuralNet::with_names`] is used.
    pub fn new(graph: SetGraph, alpha: Rational, theta: Rational, point: NodeId) -> Result<Self> {
        if point.index() >= graph.node_count() {
            return Err(Error::InvalidNetwork(format!(
                "point {} is not one of the {} neurons",
                point.index(),
                graph.node_count()
            )));
        }
        let edges: Vec<_> = graph.edges().collect();
        let mut in_edges = vec![Vec::new(); graph.node_count()];
        for (i, &(_, b)) in edges.iter().enumerate() {
            in_edges[b.index()].push(i);
        }
        let names = (0..graph.node_count()).map(|i| format!("n{i}")).collect();
        Ok(NeuralNet {
            graph,
            edges,
            in_edges,
            alpha,
            theta,
            point,
            names,
            limits: Limits::default(),
        })
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.graph.node_count() {
            return Err(Error::InvalidNetwork(format!(
                "{} names for {} neurons",
                names.len(),
                self.graph.node_count()
            )));
        }
        self.names = names;
        Ok(self)
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    pub fn graph(&self) -> &SetGraph {
        &self.graph
    }

    /// The membership graph whose labeled decoration gives the thema.
    ///
    /// This is the connectivity graph itself: a synapse `a → b` makes the
    /// set of `b` an element of the set of `a`.
    pub fn membership_graph(&self) -> &SetGraph {
        &self.graph
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn theta(&self) -> &Rational {
        &self.theta
    }

    pub fn point(&self) -> NodeId {
        self.point
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn neuron_count(&self) -> usize {
        self.graph.node_count()
    }

    pub fn name(&self, a: NodeId) -> &str {
        &self.names[a.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn neuron(&self, name: &str) -> Option<NodeId> {
        self.names.iter().position(|n| n == name).map(NodeId::new)
    }

    /// Synapses in lexicographic order; a synapse's position is its edge id.
    pub fn edges(&self) -> &[(NodeId, NodeId)] {
        &self.edges
    }

    pub fn edge_id(&self, from: NodeId, to: NodeId) -> Option<usize> {
        self.edges.binary_search(&(from, to)).ok()
    }

    /// Edge ids of the synapses ending at `a`.
    pub fn in_edges(&self, a: NodeId) -> &[usize] {
        &self.in_edges[a.index()]
    }
}

/// A frozen snapshot of weights (per edge id) and voltages (per neuron).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NeuralState {
    pub weights: Vec<Rational>,
    pub voltages: Vec<bool>,
    pub time: u64,
}

impl NeuralState {
    pub fn new(net: &NeuralNet, weights: Vec<Rational>, voltages: Vec<bool>) -> Result<Self> {
        if weights.len() != net.edges.len() {
            return Err(Error::InvalidNetwork(format!(
                "{} weights for {} synapses",
                weights.len(),
                net.edges.len()
            )));
        }
        if voltages.len() != net.neuron_count() {
            return Err(Error::InvalidNetwork(format!(
                "{} voltages for {} neurons",
                voltages.len(),
                net.neuron_count()
            )));
        }
        Ok(NeuralState {
            weights,
            voltages,
            time: 0,
        })
    }

    /// Every weight `w`, every voltage 0.
    pub fn quiescent(net: &NeuralNet, w: Rational) -> Self {
        NeuralState {
            weights: vec![w; net.edges.len()],
            voltages: vec![false; net.neuron_count()],
            time: 0,
        }
    }

    pub fn weight(&self, net: &NeuralNet, from: NodeId, to: NodeId) -> Option<&Rational> {
        net.edge_id(from, to).map(|i| &self.weights[i])
    }

    pub fn voltage(&self, a: NodeId) -> bool {
        self.voltages[a.index()]
    }
}

fn active_ids<'a>(
    net: &'a NeuralNet,
    state: &'a NeuralState,
    a: NodeId,
) -> impl Iterator<Item = usize> + 'a {
    net.in_edges(a)
        .iter()
        .copied()
        .filter(move |&i| state.voltages[net.edges[i].0.index()])
}

/// Synapses into `a` whose source currently fires.
pub fn active_in_edges(net: &NeuralNet, state: &NeuralState, a: NodeId) -> Vec<(NodeId, NodeId)> {
    active_ids(net, state, a).map(|i| net.edges[i]).collect()
}

/// Heaviside step with the value at 0 taken to be 1.
fn heaviside(x: &Rational) -> bool {
    !x.as_big().is_negative()
}

/// The McCulloch-Pitts update: fires iff the active input weight sum
/// reaches θ.
pub fn mcp_voltage(net: &NeuralNet, state: &NeuralState, a: NodeId) -> bool {
    let sum = active_ids(net, state, a).fold(Rational::zero(), |acc, i| &acc + &state.weights[i]);
    heaviside(&(&sum - &net.theta))
}

/// Hebb's rule for synapse `edge`: grows by α iff its source fired before
/// the step and its target fires after it.
pub fn hebb_weight(net: &NeuralNet, state: &NeuralState, v_new: &[bool], edge: usize) -> Rational {
    let (a, b) = net.edges[edge];
    let w = &state.weights[edge];
    if state.voltages[a.index()] && v_new[b.index()] {
        w + &net.alpha
    } else {
        w.clone()
    }
}

/// One synchronous update: all voltages from the old state, then all
/// weights from old source and new target voltages.
pub fn step(net: &NeuralNet, state: &NeuralState) -> NeuralState {
    let voltages: Vec<bool> = net.graph.nodes().map(|a| mcp_voltage(net, state, a)).collect();
    let weights = (0..net.edges.len())
        .map(|i| hebb_weight(net, state, &voltages, i))
        .collect();
    NeuralState {
        weights,
        voltages,
        time: state.time + 1,
    }
}

/// Histogram of the weights on the active synapses into `a`.
pub fn active_histogram(net: &NeuralNet, state: &NeuralState, a: NodeId) -> Histogram {
    histogram_of(active_ids(net, state, a).map(|i| state.weights[i].clone()))
}

/// Labels every neuron with the encoded histogram of its active in-weights.
///
/// Fails with [`Error::ResourceLimit`] when a weight or count would encode
/// to more nodes than the network's limits allow.
pub fn state_labeling(net: &NeuralNet, state: &NeuralState) -> Result<Labeling> {
    let mut labeling = Labeling::new();
    for a in net.graph.nodes() {
        let h = active_histogram(net, state, a);
        for (w, count) in h.iter() {
            let size = w.encoding_magnitude().unwrap_or(usize::MAX).max(count);
            net.limits.check(size)?;
        }
        labeling.set(a, histogram_to_set(&h));
    }
    Ok(labeling)
}

/// The labeled decoration of a neural state.
pub fn mz_decorate(net: &NeuralNet, state: &NeuralState) -> Result<Decoration> {
    let labeling = state_labeling(net, state)?;
    decorate_labeled(&net.graph, &labeling)
}

/// The set decorating the point.
pub fn thema(net: &NeuralNet, state: &NeuralState) -> Result<SetValue> {
    Ok(mz_decorate(net, state)?[net.point].clone())
}

/// One recorded time of a run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrajectoryEntry {
    pub time: u64,
    pub state: NeuralState,
    pub thema: SetValue,
    /// Every neuron's decoration, when requested.
    pub decoration: Option<Decoration>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Trajectory {
    pub entries: Vec<TrajectoryEntry>,
}

impl Trajectory {
    pub fn themata(&self) -> impl Iterator<Item = &SetValue> {
        self.entries.iter().map(|e| &e.thema)
    }

    pub fn final_state(&self) -> Option<&NeuralState> {
        self.entries.last().map(|e| &e.state)
    }
}

/// Records `initial` and the states after each of `steps` updates, each
/// labeled and decorated as it stands.
pub fn run(
    net: &NeuralNet,
    initial: &NeuralState,
    steps: usize,
    full_decorations: bool,
) -> Result<Trajectory> {
    let mut entries = Vec::with_capacity(steps + 1);
    let mut state = initial.clone();
    for k in 0..=steps {
        if k > 0 {
            state = step(net, &state);
        }
        let d = mz_decorate(net, &state)?;
        entries.push(TrajectoryEntry {
            time: state.time,
            state: state.clone(),
            thema: d[net.point].clone(),
            decoration: full_decorations.then_some(d),
        });
    }
    Ok(Trajectory { entries })
}

/// Three neurons `a, b, c` with synapses `a → b`, `a → c`, `c → b` and only
/// `b` firing. Every histogram is empty and the thema of `a` is the ordinal 2.
///
/// Weights are 1/2, 1/3 and 1/4 in that edge order; α = 1/2 and θ = 0.
pub fn ordinal_two_network() -> (NeuralNet, NeuralState) {
    let g = SetGraph::from_edges(3, [(0, 1), (0, 2), (2, 1)]).expect("three neurons");
    let net = NeuralNet::new(g, Rational::new(1, 2), Rational::zero(), NodeId::new(0))
        .expect("point exists")
        .with_names(vec!["a".into(), "b".into(), "c".into()])
        .expect("three names");
    let weights = vec![Rational::new(1, 2), Rational::new(1, 3), Rational::new(1, 4)];
    let state = NeuralState::new(&net, weights, vec![false, true, false]).expect("sizes match");
    (net, state)
}
