//! Test-only oracles and generators shared by the integration suites.
#![allow(dead_code)]

pub mod checks;
pub mod laws;

use hyperset::encodings::Rational;
use hyperset::neural::{NeuralNet, NeuralState};
use hyperset::{NodeId, SetGraph, SetValue};
use rand::Rng;

/// Greatest bisimulation by brute force: start from the full relation and
/// delete pairs until every remaining pair matches children both ways.
/// Deliberately O(n²·m) per sweep and shares no code with the library.
pub fn naive_bisimulation(g: &SetGraph) -> Vec<Vec<bool>> {
    let n = g.node_count();
    let kids: Vec<Vec<usize>> = (0..n)
        .map(|a| g.children(NodeId::new(a)).iter().map(|c| c.index()).collect())
        .collect();
    let mut rel = vec![vec![true; n]; n];
    loop {
        let mut changed = false;
        for a in 0..n {
            for b in 0..n {
                if !rel[a][b] {
                    continue;
                }
                let forth = kids[a].iter().all(|&x| kids[b].iter().any(|&y| rel[x][y]));
                let back = kids[b].iter().all(|&y| kids[a].iter().any(|&x| rel[x][y]));
                if !(forth && back) {
                    rel[a][b] = false;
                    changed = true;
                }
            }
        }
        if !changed {
            return rel;
        }
    }
}

/// Random graph on `1..=max_nodes` nodes with edge probability `p`.
pub fn random_graph(rng: &mut impl Rng, max_nodes: usize, p: f64) -> SetGraph {
    let n = rng.gen_range(1..=max_nodes);
    let mut g = SetGraph::new(n);
    for a in 0..n {
        for b in 0..n {
            if rng.gen_bool(p) {
                g.add_edge(NodeId::new(a), NodeId::new(b)).unwrap();
            }
        }
    }
    g
}

/// Random set with a picture of at most `max_nodes` nodes.
pub fn random_set(rng: &mut impl Rng, max_nodes: usize) -> SetValue {
    let p = rng.gen_range(0.1..0.5);
    let g = random_graph(rng, max_nodes, p);
    SetValue::from_graph(&g, NodeId::new(0)).unwrap()
}

/// Every graph on exactly `n` nodes (2^(n²) of them).
pub fn all_graphs(n: usize) -> impl Iterator<Item = SetGraph> {
    let slots = n * n;
    (0u64..(1u64 << slots)).map(move |mask| {
        let mut g = SetGraph::new(n);
        for bit in 0..slots {
            if mask >> bit & 1 == 1 {
                g.add_edge(NodeId::new(bit / n), NodeId::new(bit % n)).unwrap();
            }
        }
        g
    })
}

/// Relabels the nodes of `g` by `perm` (new id of node i is perm[i]).
pub fn permute(g: &SetGraph, perm: &[usize]) -> SetGraph {
    let edges = g.edges().map(|(a, b)| (perm[a.index()], perm[b.index()]));
    SetGraph::from_edges(g.node_count(), edges).unwrap()
}

pub fn seeded(seed: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}

/// Random rational with numerator in `-num..=num` and denominator in `1..=den`.
pub fn random_rational(rng: &mut impl Rng, num: i64, den: i64) -> Rational {
    Rational::new(rng.gen_range(-num..=num), rng.gen_range(1..=den))
}

/// Random network on `1..=max_nodes` neurons with random weights, voltages,
/// a positive α and any θ.
pub fn random_net(rng: &mut impl Rng, max_nodes: usize) -> (NeuralNet, NeuralState) {
    let g = random_graph(rng, max_nodes, 0.35);
    let n = g.node_count();
    let alpha = Rational::new(rng.gen_range(1..=3), rng.gen_range(1..=4));
    let theta = random_rational(rng, 2, 3);
    let point = NodeId::new(rng.gen_range(0..n));
    let net = NeuralNet::new(g, alpha, theta, point).unwrap();
    let weights = (0..net.edges().len()).map(|_| random_rational(rng, 3, 4)).collect();
    let voltages = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let state = NeuralState::new(&net, weights, voltages).unwrap();
    (net, state)
}
