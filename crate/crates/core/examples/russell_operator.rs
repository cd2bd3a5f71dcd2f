//! The Russell operator and the operator algebra around it.

use hyperset::kernel::make_set;
use hyperset::operators::{apply, brace, dual, russell, OperatorExpr};
use hyperset::SetValue;

fn main() -> hyperset::Result<()> {
    let empty = SetValue::empty();
    let omega = SetValue::quine_atom();
    let x = make_set([&empty, &omega]);

    // ℛ keeps the normal elements: ∅ ∉ ∅ stays, Ω ∈ Ω goes.
    println!("R({x}) = {}", russell(&x));

    // ℛx is never an element of x, whatever x is.
    for a in [&empty, &omega, &x, &dual(&empty)] {
        let r = russell(a);
        assert!(!a.contains(&r));
        println!("R({a}) = {r}, not an element");
    }

    // ℛℬ and ℬℛ differ on Ω.
    use OperatorExpr::*;
    let rb = OperatorExpr::compose(Russell, Brace);
    let br = OperatorExpr::compose(Brace, Russell);
    println!("{rb}(Ω) = {}", apply(&rb, &omega)?);
    println!("{br}(Ω) = {}", apply(&br, &omega)?);
    assert_eq!(apply(&br, &omega)?, brace(&empty));

    // The dual x* = {x*, x}.
    println!("∅* = {}", dual(&empty));
    Ok(())
}
