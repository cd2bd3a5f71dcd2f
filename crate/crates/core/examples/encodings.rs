//! Naturals, pairs, rationals and histograms encoded as pure sets.

use hyperset::encodings::{
    histogram_of, histogram_to_set, nat_to_set, pair, rat_to_set, set_to_histogram, set_to_rat,
    unpair, Rational,
};
use hyperset::SetValue;

fn main() -> hyperset::Result<()> {
    for n in 0..4 {
        println!("{n} = {}", nat_to_set(n));
    }

    let p = pair(&SetValue::quine_atom(), &SetValue::empty());
    let (a, b) = unpair(&p)?;
    println!("(Ω, ∅) = {p}\n  unpairs to {a} and {b}");

    let q: Rational = "-1/3".parse().expect("valid rational");
    let x = rat_to_set(&q);
    println!("{q} = {x}");
    assert_eq!(set_to_rat(&x)?, q);

    let h = histogram_of(["1/2", "1/2", "1/3"].map(|s| s.parse::<Rational>().unwrap()));
    let hx = histogram_to_set(&h);
    println!("histogram {h:?} has {} entries and encodes to a set of {} pairs", h.len(), hx.len());
    assert_eq!(set_to_histogram(&hx)?, h);
    Ok(())
}
