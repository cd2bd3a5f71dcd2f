//! Corpus-based checks of the selector law and the consciousness axioms.
//!
//! Quantifying over all sets is out of reach, so every check ranges over a
//! finite corpus and reports a concrete counterexample when one exists.

use std::collections::HashMap;
use std::fmt;

use crate::error::Result;
use crate::kernel::{intersect, make_set, subset, SetValue};

use super::{Evaluator, OperatorExpr};

/// A counterexample to `x ⊆ y ⇒ Ox = x ∩ Oy`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelectorWitness {
    pub x: SetValue,
    pub y: SetValue,
    /// `Ox`
    pub image: SetValue,
    /// `x ∩ Oy`
    pub expected: SetValue,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SelectorVerdict {
    Holds,
    Fails(SelectorWitness),
}

impl SelectorVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, SelectorVerdict::Holds)
    }

    pub fn witness(&self) -> Option<&SelectorWitness> {
        match self {
            SelectorVerdict::Holds => None,
            SelectorVerdict::Fails(w) => Some(w),
        }
    }
}

struct Memo<'e> {
    eval: &'e Evaluator,
    op: &'e OperatorExpr,
    cache: HashMap<SetValue, SetValue>,
}

impl Memo<'_> {
    fn get(&mut self, x: &SetValue) -> Result<SetValue> {
        if let Some(v) = self.cache.get(x) {
            return Ok(v.clone());
        }
        let v = self.eval.apply(self.op, x)?;
        self.cache.insert(x.clone(), v.clone());
        Ok(v)
    }
}

/// Subsets of `y`'s elements used as extra `x ⊆ y` instances: all of them
/// for sets with at most this many elements, otherwise the singletons and
/// the co-singletons.
const ALL_SUBSETS_UP_TO: usize = 8;

fn child_subsets(y: &SetValue) -> Vec<SetValue> {
    let kids = y.children();
    let k = kids.len();
    if k <= ALL_SUBSETS_UP_TO {
        (0u32..(1 << k))
            .map(|mask| make_set((0..k).filter(|i| mask >> i & 1 == 1).map(|i| &kids[i])))
            .collect()
    } else {
        let mut out = vec![SetValue::empty(), y.clone()];
        for i in 0..k {
            out.push(make_set([&kids[i]]));
            out.push(make_set((0..k).filter(|&j| j != i).map(|j| &kids[j])));
        }
        out
    }
}

fn selector_check(memo: &mut Memo<'_>, corpus: &[SetValue]) -> Result<SelectorVerdict> {
    let check = |memo: &mut Memo<'_>, x: &SetValue, y: &SetValue| -> Result<Option<SelectorWitness>> {
        let image = memo.get(x)?;
        let expected = intersect(x, &memo.get(y)?);
        Ok((image != expected).then(|| SelectorWitness {
            x: x.clone(),
            y: y.clone(),
            image,
            expected,
        }))
    };
    for y in corpus {
        for x in corpus {
            if subset(x, y) {
                if let Some(w) = check(memo, x, y)? {
                    return Ok(SelectorVerdict::Fails(w));
                }
            }
        }
        for x in child_subsets(y) {
            if let Some(w) = check(memo, &x, y)? {
                return Ok(SelectorVerdict::Fails(w));
            }
        }
    }
    Ok(SelectorVerdict::Holds)
}

/// Checks `x ⊆ y ⇒ Ox = x ∩ Oy` for every corpus pair with `x ⊆ y` and for
/// every `y` in the corpus against subsets of its elements.
pub fn is_selector_on(op: &OperatorExpr, corpus: &[SetValue]) -> Result<SelectorVerdict> {
    let eval = Evaluator::default();
    let mut memo = Memo {
        eval: &eval,
        op,
        cache: HashMap::new(),
    };
    selector_check(&mut memo, corpus)
}

/// The four consciousness-operator axioms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    /// a) 𝒦x ⊆ x
    Generation,
    /// b) x ∉ 𝒦x
    Irreversibility,
    /// c) 𝒦x ∉ x
    Removal,
    /// d) x ⊆ y ⇒ 𝒦x = x ∩ 𝒦y
    Selection,
}

impl Axiom {
    pub const ALL: [Axiom; 4] = [
        Axiom::Generation,
        Axiom::Irreversibility,
        Axiom::Removal,
        Axiom::Selection,
    ];

    pub fn letter(self) -> char {
        match self {
            Axiom::Generation => 'a',
            Axiom::Irreversibility => 'b',
            Axiom::Removal => 'c',
            Axiom::Selection => 'd',
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Generation => "generation",
            Axiom::Irreversibility => "irreversibility",
            Axiom::Removal => "removal",
            Axiom::Selection => "selection",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            Axiom::Generation => "Kx ⊆ x",
            Axiom::Irreversibility => "x ∉ Kx",
            Axiom::Removal => "Kx ∉ x",
            Axiom::Selection => "x ⊆ y ⇒ Kx = x ∩ Ky",
        }
    }
}

/// A counterexample to one axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Axioms a–c: the set `x` and its image `Ox`.
    At { x: SetValue, image: SetValue },
    /// Axiom d.
    Selector(SelectorWitness),
}

/// Outcome of [`check_k_axioms`]: for each axiom, `None` if it held on the
/// whole corpus, otherwise the first counterexample found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub operator: String,
    pub corpus_size: usize,
    results: [(Axiom, Option<Violation>); 4],
}

impl AxiomReport {
    pub fn passes(&self, axiom: Axiom) -> bool {
        self.violation(axiom).is_none()
    }

    pub fn violation(&self, axiom: Axiom) -> Option<&Violation> {
        self.results
            .iter()
            .find(|(a, _)| *a == axiom)
            .and_then(|(_, v)| v.as_ref())
    }

    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|(_, v)| v.is_none())
    }

    /// Pass/fail per axiom, in the order a, b, c, d.
    pub fn verdicts(&self) -> [bool; 4] {
        Axiom::ALL.map(|a| self.passes(a))
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "axioms for {} over {} sets",
            self.operator, self.corpus_size
        )?;
        for (axiom, v) in &self.results {
            write!(f, "{}) {:<16} {:<22} ", axiom.letter(), axiom.name(), axiom.statement())?;
            match v {
                None => writeln!(f, "pass")?,
                Some(Violation::At { x, image }) => {
                    writeln!(f, "FAIL")?;
                    writeln!(f, "     x  = {x}")?;
                    writeln!(f, "     Kx = {image}")?;
                }
                Some(Violation::Selector(w)) => {
                    writeln!(f, "FAIL")?;
                    writeln!(f, "     x      = {}", w.x)?;
                    writeln!(f, "     y      = {}", w.y)?;
                    writeln!(f, "     Kx     = {}", w.image)?;
                    writeln!(f, "     x ∩ Ky = {}", w.expected)?;
                }
            }
        }
        Ok(())
    }
}

/// Evaluates axioms a–d for `op` on every set of `corpus`.
pub fn check_k_axioms(op: &OperatorExpr, corpus: &[SetValue]) -> Result<AxiomReport> {
    let eval = Evaluator::default();
    let mut memo = Memo {
        eval: &eval,
        op,
        cache: HashMap::new(),
    };
    let mut generation = None;
    let mut irreversibility = None;
    let mut removal = None;
    for x in corpus {
        let image = memo.get(x)?;
        let at = || Violation::At {
            x: x.clone(),
            image: image.clone(),
        };
        if generation.is_none() && !subset(&image, x) {
            generation = Some(at());
        }
        if irreversibility.is_none() && image.contains(x) {
            irreversibility = Some(at());
        }
        if removal.is_none() && x.contains(&image) {
            removal = Some(at());
        }
    }
    let selection = match selector_check(&mut memo, corpus)? {
        SelectorVerdict::Holds => None,
        SelectorVerdict::Fails(w) => Some(Violation::Selector(w)),
    };
    Ok(AxiomReport {
        operator: op.to_string(),
        corpus_size: corpus.len(),
        results: [
            (Axiom::Generation, generation),
            (Axiom::Irreversibility, irreversibility),
            (Axiom::Removal, removal),
            (Axiom::Selection, selection),
        ],
    })
}
