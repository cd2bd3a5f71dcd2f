//! Checking candidate operators against the four selection axioms.

use hyperset::kernel::make_set;
use hyperset::operators::{check_k_axioms, small_corpus, OperatorExpr};
use hyperset::SetValue;

fn main() -> hyperset::Result<()> {
    let corpus = small_corpus();
    let omega = SetValue::quine_atom();
    let candidates = [
        OperatorExpr::Russell,
        OperatorExpr::Conscious,
        OperatorExpr::k(make_set([&omega])),
        OperatorExpr::Ident,
        OperatorExpr::KDiag,
    ];
    for op in &candidates {
        let report = check_k_axioms(op, &corpus)?;
        println!("{report}");
    }
    Ok(())
}
