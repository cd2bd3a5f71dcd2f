//! Pure-set encodings of naturals, ordered pairs, signed rationals and
//! histograms.
//!
//! * naturals are von Neumann ordinals: `0 = ∅`, `n + 1 = n ∪ {n}`;
//! * pairs are Kuratowski pairs `(a, b) = {{a}, {a, b}}`;
//! * a rational `±m/n` in lowest terms is `(s, (m, n))` with sign code
//!   `s = 0` for non-negative values and `s = 1` for negative ones; zero is
//!   `(0, (0, 1))`;
//! * a histogram is the set of pairs `(value, count)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign as BigSign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::kernel::{make_set, NodeId, SetGraph, SetValue};

/// The von Neumann ordinal `n`.
pub fn nat_to_set(n: usize) -> SetValue {
    let mut g = SetGraph::new(n + 1);
    for i in 0..=n {
        for j in 0..i {
            g.add_edge(NodeId::new(i), NodeId::new(j))
                .expect("nodes exist");
        }
    }
    SetValue::from_graph(&g, NodeId::new(n)).expect("point exists")
}

/// Inverse of [`nat_to_set`].
pub fn set_to_nat(x: &SetValue) -> Result<usize> {
    // An ordinal with k elements must be exactly the ordinal k.
    let k = x.len();
    if x.node_count() != k + 1 || x.graph().edge_count() != k * (k + 1) / 2 {
        return Err(Error::NotAnOrdinal);
    }
    if *x == nat_to_set(k) {
        Ok(k)
    } else {
        Err(Error::NotAnOrdinal)
    }
}

/// The Kuratowski pair `{{a}, {a, b}}`.
pub fn pair(a: &SetValue, b: &SetValue) -> SetValue {
    make_set([&make_set([a]), &make_set([a, b])])
}

/// Inverse of [`pair`].
pub fn unpair(x: &SetValue) -> Result<(SetValue, SetValue)> {
    match x.children() {
        [only] => match only.children() {
            [a] => Ok((a.clone(), a.clone())),
            _ => Err(Error::NotAPair),
        },
        [p, q] => {
            let (single, double) = match (p.len(), q.len()) {
                (1, 2) => (p, q),
                (2, 1) => (q, p),
                _ => return Err(Error::NotAPair),
            };
            let a = &single.children()[0];
            let b = match double.children() {
                [u, v] if u == a => v,
                [u, v] if v == a => u,
                _ => return Err(Error::NotAPair),
            };
            Ok((a.clone(), b.clone()))
        }
        _ => Err(Error::NotAPair),
    }
}

/// Sign of a rational.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

/// An exact rational number, always in lowest terms with a positive
/// denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// `numer / denom`; panics if `denom == 0`.
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// Builds `sign · numer / denom` from its components; reduces to
    /// lowest terms.
    pub fn from_parts(sign: Sign, numer: BigUint, denom: BigUint) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::MalformedRational("zero denominator"));
        }
        let s = match sign {
            Sign::Negative => BigSign::Minus,
            Sign::Zero => BigSign::NoSign,
            Sign::Positive => BigSign::Plus,
        };
        if (sign == Sign::Zero) != numer.is_zero() {
            return Err(Error::MalformedRational("sign disagrees with numerator"));
        }
        Ok(Rational(BigRational::new(
            BigInt::from_biguint(s, numer),
            BigInt::from_biguint(BigSign::Plus, denom),
        )))
    }

    pub fn sign(&self) -> Sign {
        if self.0.is_zero() {
            Sign::Zero
        } else if self.0.is_negative() {
            Sign::Negative
        } else {
            Sign::Positive
        }
    }

    /// |numerator|
    pub fn numer_abs(&self) -> BigUint {
        self.0.numer().magnitude().clone()
    }

    pub fn denom(&self) -> BigUint {
        self.0.denom().magnitude().clone()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Size of the largest ordinal needed to encode this value.
    pub fn encoding_magnitude(&self) -> Option<usize> {
        let m = self.numer_abs().to_usize()?;
        let n = self.denom().to_usize()?;
        Some(m.max(n))
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl std::ops::Add for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        Rational(&self.0 + &rhs.0)
    }
}

impl std::ops::Sub for &Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        Rational(&self.0 - &rhs.0)
    }
}

impl std::ops::Mul for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        Rational(&self.0 * &rhs.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Error from parsing a rational literal.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed rational literal {0:?}")]
pub struct ParseRationalError(pub String);

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `m`, `-m`, `m/n` and `-m/n` with decimal digits.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let err = || ParseRationalError(s.to_string());
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s.strip_prefix('+').unwrap_or(s)),
        };
        let (m, n) = match body.split_once('/') {
            Some((m, n)) => (m, n),
            None => (body, "1"),
        };
        let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
        if !digits(m) || !digits(n) {
            return Err(err());
        }
        let m: BigInt = m.parse().map_err(|_| err())?;
        let n: BigInt = n.parse().map_err(|_| err())?;
        if n.is_zero() {
            return Err(err());
        }
        let m = if neg { -m } else { m };
        Ok(Rational(BigRational::new(m, n)))
    }
}

fn sign_code(sign: Sign) -> usize {
    match sign {
        Sign::Negative => 1,
        _ => 0,
    }
}

/// `(s, (m, n))` for `q = ±m/n`.
///
/// # Panics
///
/// If `m` or `n` does not fit in `usize`; such ordinals could not be built
/// anyway. Use [`Rational::encoding_magnitude`] to check first.
pub fn rat_to_set(q: &Rational) -> SetValue {
    let m = q.numer_abs().to_usize().expect("numerator too large to encode");
    let n = q.denom().to_usize().expect("denominator too large to encode");
    pair(
        &nat_to_set(sign_code(q.sign())),
        &pair(&nat_to_set(m), &nat_to_set(n)),
    )
}

/// Inverse of [`rat_to_set`].
pub fn set_to_rat(x: &SetValue) -> Result<Rational> {
    let bad = |_| Error::MalformedRational("not a (sign, (m, n)) triple");
    let (s, mn) = unpair(x).map_err(bad)?;
    let (m, n) = unpair(&mn).map_err(bad)?;
    let s = set_to_nat(&s).map_err(|_| Error::MalformedRational("sign is not an ordinal"))?;
    let m = set_to_nat(&m).map_err(|_| Error::MalformedRational("numerator is not an ordinal"))?;
    let n = set_to_nat(&n).map_err(|_| Error::MalformedRational("denominator is not an ordinal"))?;
    if n == 0 {
        return Err(Error::MalformedRational("zero denominator"));
    }
    if num_integer::gcd(m, n) != 1 {
        return Err(Error::MalformedRational("not in lowest terms"));
    }
    let sign = match (s, m) {
        (0, 0) => Sign::Zero,
        (0, _) => Sign::Positive,
        (1, 0) => return Err(Error::MalformedRational("negative zero")),
        (1, _) => Sign::Negative,
        _ => return Err(Error::MalformedRational("sign code must be 0 or 1")),
    };
    Rational::from_parts(sign, m.into(), n.into())
}

/// Multiset summary of rational values: value → multiplicity ≥ 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Histogram {
    entries: BTreeMap<Rational, usize>,
}

impl Histogram {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, value: Rational) {
        *self.entries.entry(value).or_insert(0) += 1;
    }

    pub fn count(&self, value: &Rational) -> usize {
        self.entries.get(value).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of distinct values.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Sum of all multiplicities.
    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Rational, usize)> {
        self.entries.iter().map(|(k, &v)| (k, v))
    }
}

impl FromIterator<Rational> for Histogram {
    fn from_iter<I: IntoIterator<Item = Rational>>(iter: I) -> Self {
        let mut h = Histogram::new();
        for v in iter {
            h.add(v);
        }
        h
    }
}

/// Histogram of a finite multiset of rationals.
pub fn histogram_of<I: IntoIterator<Item = Rational>>(values: I) -> Histogram {
    values.into_iter().collect()
}

/// `{ (rat_to_set(b), nat_to_set(count)) }`.
pub fn histogram_to_set(h: &Histogram) -> SetValue {
    let pairs: Vec<SetValue> = h
        .iter()
        .map(|(b, c)| pair(&rat_to_set(b), &nat_to_set(c)))
        .collect();
    make_set(&pairs)
}

/// Inverse of [`histogram_to_set`].
pub fn set_to_histogram(x: &SetValue) -> Result<Histogram> {
    let mut h = Histogram::new();
    for p in x.children() {
        let (b, c) = unpair(p)?;
        let c = set_to_nat(&c)?;
        if c == 0 {
            return Err(Error::MalformedRational("zero count in histogram"));
        }
        let b = set_to_rat(&b)?;
        if h.entries.insert(b, c).is_some() {
            return Err(Error::MalformedRational("repeated histogram value"));
        }
    }
    Ok(h)
}

/// Ω = {Ω}.
pub fn quine_atom() -> SetValue {
    SetValue::quine_atom()
}
