//! Operators on sets: the basic operators ℰ, ℐ, ℬ, ℛ, 𝒯, 𝒟, the
//! consciousness operators C, 𝒦_A and 𝒦^diag, comprehension filters, and
//! the four dyadic combinators `∘ ∪ ∩ −`.
//!
//! Operators are data ([`OperatorExpr`]) so they can be parsed, printed and
//! compared pointwise; [`apply`] evaluates them strictly.

mod corpus;
mod harness;

use std::fmt;
use std::sync::Arc;

use crate::error::Result;
use crate::kernel::{self, is_abnormal, is_normal, make_set, Limits, NodeId, SetValue};

pub use corpus::{named_examples, sets_with_pictures_up_to, small_corpus};
pub use harness::{
    check_k_axioms, is_selector_on, Axiom, AxiomReport, SelectorVerdict, SelectorWitness,
    Violation,
};

/// A named total predicate on sets, used by comprehension filters.
#[derive(Clone)]
pub struct Predicate {
    name: Arc<str>,
    test: Arc<dyn Fn(&SetValue) -> bool + Send + Sync>,
}

impl Predicate {
    pub fn new(name: &str, test: impl Fn(&SetValue) -> bool + Send + Sync + 'static) -> Self {
        Predicate {
            name: name.into(),
            test: Arc::new(test),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn test(&self, x: &SetValue) -> bool {
        (self.test)(x)
    }
}

impl PartialEq for Predicate {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && Arc::ptr_eq(&self.test, &other.test)
    }
}

impl fmt::Debug for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Predicate({})", self.name)
    }
}

/// An operator term.
#[derive(Clone, Debug, PartialEq)]
pub enum OperatorExpr {
    /// ℰx = ∅
    Elim,
    /// ℐx = x
    Ident,
    /// ℬx = {x}
    Brace,
    /// ℛx = normal elements of x
    Russell,
    /// 𝒯x = abnormal elements of x
    AntiRussell,
    /// 𝒟x = x*, the unique set with x* = {x*, x}
    Dual,
    /// C: normal elements none of whose elements is Ω
    Conscious,
    /// 𝒦_A with its parameter A
    KParam(SetValue),
    /// 𝒦^diag
    KDiag,
    /// {y ∈ x | P(y)}
    Filter(Predicate),
    /// (O₁ ∘ O₂)x = O₁(O₂x)
    Compose(Box<OperatorExpr>, Box<OperatorExpr>),
    /// (O₁ ∪ O₂)x = O₁x ∪ O₂x
    Union(Box<OperatorExpr>, Box<OperatorExpr>),
    /// (O₁ ∩ O₂)x = O₁x ∩ O₂x
    Intersect(Box<OperatorExpr>, Box<OperatorExpr>),
    /// (O₁ − O₂)x = O₁x − O₂x
    Diff(Box<OperatorExpr>, Box<OperatorExpr>),
}

impl OperatorExpr {
    pub fn compose(outer: OperatorExpr, inner: OperatorExpr) -> Self {
        OperatorExpr::Compose(Box::new(outer), Box::new(inner))
    }

    /// Right-nested composition of a chain, `O₁ ∘ O₂ ∘ … ∘ Oₖ`.
    pub fn chain(ops: impl IntoIterator<Item = OperatorExpr>) -> Self {
        let mut ops: Vec<_> = ops.into_iter().collect();
        let mut acc = ops.pop().unwrap_or(OperatorExpr::Ident);
        while let Some(o) = ops.pop() {
            acc = Self::compose(o, acc);
        }
        acc
    }

    pub fn union(a: OperatorExpr, b: OperatorExpr) -> Self {
        OperatorExpr::Union(Box::new(a), Box::new(b))
    }

    pub fn intersect(a: OperatorExpr, b: OperatorExpr) -> Self {
        OperatorExpr::Intersect(Box::new(a), Box::new(b))
    }

    pub fn diff(a: OperatorExpr, b: OperatorExpr) -> Self {
        OperatorExpr::Diff(Box::new(a), Box::new(b))
    }

    pub fn k(param: SetValue) -> Self {
        OperatorExpr::KParam(param)
    }

}

impl fmt::Display for OperatorExpr {
    /// Operator syntax accepted by the parser in [`crate::surface`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use OperatorExpr::*;
        match self {
            Elim => f.write_str("E"),
            Ident => f.write_str("I"),
            Brace => f.write_str("B"),
            Russell => f.write_str("R"),
            AntiRussell => f.write_str("T"),
            Dual => f.write_str("D"),
            Conscious => f.write_str("C"),
            KParam(a) => write!(f, "K[{a}]"),
            KDiag => f.write_str("Kdiag"),
            Filter(p) => write!(f, "?{}", p.name()),
            Compose(a, b) => write!(f, "{a}.{b}"),
            Union(a, b) => write!(f, "({a} | {b})"),
            Intersect(a, b) => write!(f, "({a} & {b})"),
            Diff(a, b) => write!(f, "({a} - {b})"),
        }
    }
}

/// Evaluates operators with a bound on the size of intermediate sets.
#[derive(Clone, Copy, Debug, Default)]
pub struct Evaluator {
    pub limits: Limits,
}

impl Evaluator {
    pub fn new(limits: Limits) -> Self {
        Evaluator { limits }
    }

    pub fn apply(&self, op: &OperatorExpr, x: &SetValue) -> Result<SetValue> {
        use OperatorExpr::*;
        let v = match op {
            Elim => elim(x),
            Ident => identity(x),
            Brace => brace(x),
            Russell => russell(x),
            AntiRussell => anti_russell(x),
            Dual => dual(x),
            Conscious => c_op(x),
            KParam(a) => k_a(a, x),
            KDiag => k_diag(x),
            Filter(p) => make_set(x.children().iter().filter(|y| p.test(y))),
            Compose(outer, inner) => {
                let y = self.apply(inner, x)?;
                self.apply(outer, &y)?
            }
            Union(a, b) => kernel::union2(&self.apply(a, x)?, &self.apply(b, x)?),
            Intersect(a, b) => kernel::intersect(&self.apply(a, x)?, &self.apply(b, x)?),
            Diff(a, b) => kernel::diff(&self.apply(a, x)?, &self.apply(b, x)?),
        };
        self.limits.check(v.node_count())?;
        Ok(v)
    }
}

/// Evaluates `op` at `x` under the default limits.
pub fn apply(op: &OperatorExpr, x: &SetValue) -> Result<SetValue> {
    Evaluator::default().apply(op, x)
}

/// ℰx = ∅
pub fn elim(_x: &SetValue) -> SetValue {
    SetValue::empty()
}

/// ℐx = x
pub fn identity(x: &SetValue) -> SetValue {
    x.clone()
}

/// ℬx = {x}
pub fn brace(x: &SetValue) -> SetValue {
    make_set([x])
}

/// ℛx = {y ∈ x | y ∉ y}
pub fn russell(x: &SetValue) -> SetValue {
    make_set(x.children().iter().filter(|y| is_normal(y)))
}

/// 𝒯x = x − ℛx, the abnormal elements of x.
pub fn anti_russell(x: &SetValue) -> SetValue {
    make_set(x.children().iter().filter(|y| is_abnormal(y)))
}

/// The dual x*, solving x* = {x*, x}: a fresh point with a self-loop and an
/// edge to x.
pub fn dual(x: &SetValue) -> SetValue {
    let mut g = crate::kernel::SetGraph::new(1);
    let p = NodeId::new(0);
    let q = g.append(x.graph());
    g.add_edge(p, p).expect("node exists");
    g.add_edge(p, q).expect("node exists");
    SetValue::from_graph(&g, p).expect("point exists")
}

/// Cx = {y ∈ x | y ∉ y, and no element of y is Ω}
pub fn c_op(x: &SetValue) -> SetValue {
    let omega = SetValue::quine_atom();
    make_set(
        x.children()
            .iter()
            .filter(|y| is_normal(y) && !y.contains(&omega)),
    )
}

/// 𝒦_A x = {y ∈ x | y ∉ y, 𝒯(y ∩ A) = ∅}
pub fn k_a(a: &SetValue, x: &SetValue) -> SetValue {
    make_set(x.children().iter().filter(|y| {
        is_normal(y)
            && y
                .children()
                .iter()
                .all(|z| !a.contains(z) || is_normal(z))
    }))
}

/// 𝒦^diag x = {y ∈ x | y ∉ y, and every z ∈ x ∩ y is normal}
pub fn k_diag(x: &SetValue) -> SetValue {
    make_set(x.children().iter().filter(|y| {
        is_normal(y)
            && y
                .children()
                .iter()
                .all(|z| !x.contains(z) || is_normal(z))
    }))
}

/// Comprehension operator `{y ∈ x | pred(y)}`.
pub fn filter_op(
    name: &str,
    pred: impl Fn(&SetValue) -> bool + Send + Sync + 'static,
) -> OperatorExpr {
    OperatorExpr::Filter(Predicate::new(name, pred))
}
