//! The text formats: systems of equations, operator expressions, networks.

use hyperset::surface::{
    builtins, eval_setexpr, network_to_dot, parse_network, parse_opexpr, parse_system,
};
use hyperset::operators::apply;

const SYSTEM: &str = "
    # y contains itself and x
    x = {q, zero};
    y = {x, y};
    q = {q};
    zero = {};
    point y;
";

fn main() {
    let sys = parse_system(SYSTEM).expect("valid system");
    for (eq, v) in sys.equations.iter().zip(&sys.values) {
        println!("{} = {v}", eq.name);
    }

    // Printed forms parse back to the same set.
    let printed = sys.point.to_string();
    assert_eq!(eval_setexpr(&printed, &builtins()).unwrap(), sys.point);

    let op = parse_opexpr("(R | B).T").expect("valid operator");
    println!("{op} applied to y = {}", apply(&op, &sys.point).unwrap());
    println!("R(B({{}})) = {}", eval_setexpr("R(B({}))", &builtins()).unwrap());

    match eval_setexpr("{ {}, x }", &builtins()) {
        Err(e) => println!("error: {e}"),
        Ok(v) => println!("unexpected: {v}"),
    }

    let spec = parse_network(include_str!("data/ordinal_two.net")).expect("valid network");
    let (net, state) = spec.build().expect("consistent network");
    print!("{}", network_to_dot(&net, Some(&state)));
}
