//! A three-neuron network whose state pictures the ordinal 2, run forward.

use hyperset::encodings::nat_to_set;
use hyperset::neural::{active_histogram, ordinal_two_network, run, thema};

fn main() -> hyperset::Result<()> {
    let (net, state) = ordinal_two_network();
    let t = thema(&net, &state)?;
    println!("thema at t=0: {t}");
    assert_eq!(t, nat_to_set(2));

    let traj = run(&net, &state, 3, false)?;
    for entry in &traj.entries {
        let firing: Vec<&str> = net
            .graph()
            .nodes()
            .filter(|&a| entry.state.voltage(a))
            .map(|a| net.name(a))
            .collect();
        let weights: Vec<String> = entry.state.weights.iter().map(|w| w.to_string()).collect();
        println!(
            "t={} firing {:?} weights [{}]  thema has {} elements",
            entry.time,
            firing,
            weights.join(", "),
            entry.thema.len()
        );
    }
    let last = traj.final_state().expect("non-empty run");
    let b = net.neuron("b").expect("b exists");
    println!("inputs to b at the end: {:?}", active_histogram(&net, last, b));
    Ok(())
}
