//! Pointwise identity checks over a corpus. Each returns the first
//! counterexample as text so callers can assert or report it.

use hyperset::kernel::{intersect, is_normal, make_set, subset};
use hyperset::operators::{
    apply, brace, c_op, check_k_axioms, dual, elim, is_selector_on, k_a, named_examples, russell,
    Axiom, OperatorExpr, Violation,
};
use hyperset::SetValue;
use OperatorExpr::*;

pub type Check = Result<(), String>;

fn ap(op: &OperatorExpr, x: &SetValue) -> SetValue {
    apply(op, x).expect("corpus evaluations stay small")
}

fn c(outer: OperatorExpr, inner: OperatorExpr) -> OperatorExpr {
    OperatorExpr::compose(outer, inner)
}

pub fn empty() -> SetValue {
    SetValue::empty()
}

pub fn omega() -> SetValue {
    SetValue::quine_atom()
}

/// {∅, Ω}
pub fn empty_omega() -> SetValue {
    make_set([&empty(), &omega()])
}

/// The parameters for 𝒦_A used throughout: ∅, {Ω} and {{∅, Ω}}.
pub fn k_params() -> Vec<SetValue> {
    vec![empty(), make_set([&omega()]), make_set([&empty_omega()])]
}

fn expect_eq(what: &str, x: &SetValue, got: SetValue, want: SetValue) -> Check {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what} at x = {x}: got {got}, expected {want}"))
    }
}

/// Russell's operator: ℛA ∉ A, A ∉ ℛA, ℛA normal, ℛℛA = ℛA, and
/// x ⊆ y ⇒ ℛx = x ∩ ℛy on every corpus pair.
pub fn russell_suite(corpus: &[SetValue]) -> Check {
    let images: Vec<SetValue> = corpus.iter().map(russell).collect();
    for (a, r) in corpus.iter().zip(&images) {
        if a.contains(r) {
            return Err(format!("ℛA ∈ A for A = {a}"));
        }
        if r.contains(a) {
            return Err(format!("A ∈ ℛA for A = {a}"));
        }
        if !is_normal(r) {
            return Err(format!("ℛA abnormal for A = {a}"));
        }
        expect_eq("ℛℛ = ℛ", a, russell(r), r.clone())?;
    }
    for (y, ry) in corpus.iter().zip(&images) {
        for (x, rx) in corpus.iter().zip(&images) {
            if subset(x, y) && *rx != intersect(x, ry) {
                return Err(format!("selector law fails for x = {x}, y = {y}"));
            }
        }
    }
    if let Some(w) = is_selector_on(&Russell, corpus).unwrap().witness() {
        return Err(format!("selector harness rejects ℛ at x = {}, y = {}", w.x, w.y));
    }
    Ok(())
}

/// The ℐ/ℬ/ℛ identities: ℐ∩ℛ = ℛ, ℬ∩ℛ = ℰ, ℐ∩ℬℛ = ℰ, ℐ∩ℛℬ = ℰ, ℛℬ = ℬ−ℐ,
/// ℛℬℛ = ℬℛ, (ℛℬ−ℬℛ)ℛ = ℰ and (ℬℛ−ℛℬ)ℛ = ℰ.
pub fn russell_brace_identities(corpus: &[SetValue]) -> Check {
    let rb = || c(Russell, Brace);
    let br = || c(Brace, Russell);
    let cases: Vec<(&str, OperatorExpr, OperatorExpr)> = vec![
        ("ℐ∩ℛ = ℛ", OperatorExpr::intersect(Ident, Russell), Russell),
        ("ℬ∩ℛ = ℰ", OperatorExpr::intersect(Brace, Russell), Elim),
        ("ℐ∩ℬℛ = ℰ", OperatorExpr::intersect(Ident, br()), Elim),
        ("ℐ∩ℛℬ = ℰ", OperatorExpr::intersect(Ident, rb()), Elim),
        ("ℛℬ = ℬ−ℐ", rb(), OperatorExpr::diff(Brace, Ident)),
        ("ℛℬℛ = ℬℛ", c(Russell, br()), br()),
        ("(ℛℬ−ℬℛ)ℛ = ℰ", c(OperatorExpr::diff(rb(), br()), Russell), Elim),
        ("(ℬℛ−ℛℬ)ℛ = ℰ", c(OperatorExpr::diff(br(), rb()), Russell), Elim),
    ];
    for x in corpus {
        for (name, lhs, rhs) in &cases {
            expect_eq(name, x, ap(lhs, x), ap(rhs, x))?;
        }
    }
    Ok(())
}

/// ℛℬ and ℬℛ do not commute: both differences are non-empty somewhere.
pub fn russell_brace_noncommutation() -> Check {
    let rb_minus_br = OperatorExpr::diff(c(Russell, Brace), c(Brace, Russell));
    let br_minus_rb = OperatorExpr::diff(c(Brace, Russell), c(Russell, Brace));
    let dual_witness = brace(&dual(&empty()));
    for (op, x, name) in [
        (&rb_minus_br, empty_omega(), "(ℛℬ−ℬℛ){∅,Ω}"),
        (&rb_minus_br, dual_witness, "(ℛℬ−ℬℛ)ℬ𝒟∅"),
        (&br_minus_rb, omega(), "(ℬℛ−ℛℬ)Ω"),
    ] {
        if ap(op, &x).is_empty() {
            return Err(format!("{name} is empty"));
        }
    }
    Ok(())
}

/// Every entry of the composition table of ℰ, ℐ, ℛ, ℬ.
pub fn multiplication_table(corpus: &[SetValue]) -> Check {
    let ops = [Elim, Ident, Russell, Brace];
    let names = ["ℰ", "ℐ", "ℛ", "ℬ"];
    for x in corpus {
        for (i, row) in ops.iter().enumerate() {
            for (j, col) in ops.iter().enumerate() {
                let want = match (i, j) {
                    (0, _) => empty(),
                    (1, _) => ap(col, x),
                    (2, 0) => empty(),
                    (2, 1) | (2, 2) => russell(x),
                    (2, 3) => russell(&brace(x)),
                    (3, 0) => brace(&elim(x)),
                    (3, 1) => brace(x),
                    (3, 2) => brace(&russell(x)),
                    (3, 3) => brace(&brace(x)),
                    _ => unreachable!(),
                };
                let got = ap(&c(row.clone(), col.clone()), x);
                expect_eq(&format!("{}{}", names[i], names[j]), x, got, want)?;
            }
        }
    }
    Ok(())
}

/// Expected (a, b, c, d) verdicts of the axiom checker.
pub fn axiom_expectations() -> Vec<(OperatorExpr, [bool; 4])> {
    let mut v = vec![
        (Russell, [true; 4]),
        (Conscious, [true; 4]),
    ];
    v.extend(k_params().into_iter().map(|a| (OperatorExpr::k(a), [true; 4])));
    v.extend([
        (Brace, [false, false, false, false]),
        (Ident, [true, false, false, true]),
        (Elim, [true, true, false, true]),
        (KDiag, [true, true, true, false]),
    ]);
    v
}

/// The axiom report matches the expected table; ℐ's irreversibility witness
/// is Ω; 𝒦^diag breaks selection on {{∅,Ω}} ⊆ {∅, Ω, {∅,Ω}}.
pub fn axiom_table(corpus: &[SetValue]) -> Check {
    for (op, want) in axiom_expectations() {
        let report = check_k_axioms(&op, corpus).unwrap();
        if report.verdicts() != want {
            return Err(format!("{op}: got {:?}, expected {want:?}\n{report}", report.verdicts()));
        }
        for axiom in Axiom::ALL {
            if report.passes(axiom) != report.violation(axiom).is_none() {
                return Err(format!("{op}: failure without witness"));
            }
        }
        if op == Ident {
            match report.violation(Axiom::Irreversibility) {
                Some(Violation::At { x, .. }) if *x == omega() => {}
                other => return Err(format!("ℐ irreversibility witness: {other:?}")),
            }
        }
    }
    let a1 = make_set([&empty_omega()]);
    let a2 = make_set([&empty(), &omega(), &empty_omega()]);
    let verdict = is_selector_on(&KDiag, &[a1.clone(), a2.clone()]).unwrap();
    match verdict.witness() {
        Some(w) if w.x == a1 && w.y == a2 => Ok(()),
        other => Err(format!("𝒦^diag witness on A₁ ⊆ A₂: {other:?}")),
    }
}

/// The selectors under test: ℰ, ℐ, ℛ, C and 𝒦_A.
pub fn selectors() -> Vec<OperatorExpr> {
    let mut v = vec![Elim, Ident, Russell, Conscious];
    v.extend(k_params().into_iter().map(OperatorExpr::k));
    v
}

/// Selectors commute and compose to their intersection; every
/// consciousness operator fixes {∅}; each is rebuilt from its action on
/// singletons; a selector agreeing with ℛ on the singletons of x's elements
/// agrees with ℛ at x.
pub fn selector_algebra(corpus: &[SetValue]) -> Check {
    let sels = selectors();
    for x in corpus {
        for s1 in &sels {
            for s2 in &sels {
                let a = ap(&c(s1.clone(), s2.clone()), x);
                let b = ap(&c(s2.clone(), s1.clone()), x);
                let meet = ap(&OperatorExpr::intersect(s1.clone(), s2.clone()), x);
                if a != b || a != meet {
                    return Err(format!("{s1} and {s2} at x = {x}: {a} / {b} / {meet}"));
                }
            }
        }
    }
    let one = brace(&empty());
    for k in sels.iter().skip(2) {
        expect_eq(&format!("{k} on {{∅}}"), &one, ap(k, &one), one.clone())?;
    }
    for k in sels.iter().skip(2) {
        for x in corpus {
            let rebuilt = make_set(x.children().iter().filter(|y| {
                let by = brace(y);
                ap(k, &by) == by
            }));
            expect_eq(&format!("{k} from singletons"), x, ap(k, x), rebuilt)?;
        }
    }
    for k in &sels {
        for x in corpus {
            let singletons_agree = x.children().iter().all(|y| {
                let by = brace(y);
                ap(k, &by) == russell(&by)
            });
            if singletons_agree {
                expect_eq(&format!("{k} agrees with ℛ"), x, ap(k, x), russell(x))?;
            }
        }
    }
    Ok(())
}

/// 𝒟 = ℬ𝒟 ∪ ℬ; ℛℬ and 𝒯ℬ split normal from abnormal sets; a pair of
/// duals of distinct normal sets is not a member of itself; 𝒦_∅ = ℛ.
pub fn dual_and_brace_facts(corpus: &[SetValue]) -> Check {
    let d_rhs = OperatorExpr::union(c(Brace, Dual), Brace);
    for x in corpus {
        expect_eq("𝒟 = ℬ𝒟 ∪ ℬ", x, ap(&Dual, x), ap(&d_rhs, x))?;
        let bx = brace(x);
        let (r, t) = (russell(&bx), ap(&AntiRussell, &bx));
        if is_normal(x) {
            expect_eq("ℛℬB = ℬB", x, r, bx)?;
            expect_eq("𝒯ℬB = ∅", x, t, empty())?;
        } else {
            expect_eq("ℛℬC = ∅", x, r, empty())?;
            expect_eq("𝒯ℬC = ℬC", x, t, bx)?;
        }
        expect_eq("𝒦_∅ = ℛ", x, k_a(&empty(), x), russell(x))?;
    }
    let normals: Vec<&SetValue> = corpus.iter().filter(|x| is_normal(x)).take(40).collect();
    for (i, x) in normals.iter().enumerate() {
        for y in &normals[i + 1..] {
            let pair = make_set([&dual(x), &dual(y)]);
            if pair.contains(&pair) {
                return Err(format!("{{x*, y*}} ∈ itself for x = {x}, y = {y}"));
            }
        }
    }
    Ok(())
}

/// The worked examples for C: ℛA = A but CA = ∅ for A = {{∅, Ω}}.
pub fn c_differs_from_russell() -> Check {
    let a = named_examples()
        .into_iter()
        .find(|(n, _)| *n == "a1")
        .map(|(_, v)| v)
        .unwrap();
    if russell(&a) != a || !c_op(&a).is_empty() {
        return Err(format!("ℛA = {}, CA = {}", russell(&a), c_op(&a)));
    }
    Ok(())
}
