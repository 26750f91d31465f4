use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exponent vector `(a_1, .., a_r)` of `e_1^{a_1} .. e_r^{a_r}`.
///
/// Ordered graded reverse-lexicographically, where the grading gives `e_k`
/// degree `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(arity: usize) -> Self {
        Monomial(vec![0; arity])
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &a)| (k + 1) * a as usize)
            .sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            self.0.len().cmp(&other.0.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `arity` graded indeterminates with arbitrary-precision
/// integer coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElement {
    arity: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Checked arithmetic: fails on arity mismatch instead of panicking.
pub fn poly_arith(a: &RingElement, b: &RingElement, op: PolyOp) -> Result<RingElement> {
    if a.arity != b.arity {
        return Err(Error::arg(format!(
            "arity mismatch: {} vs {}",
            a.arity, b.arity
        )));
    }
    Ok(match op {
        PolyOp::Add => a.add_ref(b),
        PolyOp::Sub => a.sub_ref(b),
        PolyOp::Mul => a.mul_ref(b),
    })
}

impl RingElement {
    pub fn zero(arity: usize) -> Self {
        RingElement {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, BigInt::one())
    }

    pub fn constant(arity: usize, c: impl Into<BigInt>) -> Self {
        Self::from_terms(arity, [(vec![0; arity], c.into())])
    }

    /// The generator `e_k`, `1 <= k <= arity`.
    pub fn generator(arity: usize, k: usize) -> Self {
        assert!(k >= 1 && k <= arity, "e_{k} is not a generator in arity {arity}");
        let mut exps = vec![0; arity];
        exps[k - 1] = 1;
        Self::from_terms(arity, [(exps, BigInt::one())])
    }

    /// Sums the given terms; repeated exponent vectors are combined.
    pub fn from_terms<I, C>(arity: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, C)>,
        C: Into<BigInt>,
    {
        let mut out = RingElement::zero(arity);
        for (exps, c) in terms {
            assert_eq!(exps.len(), arity, "exponent vector length");
            out.add_term(Monomial(exps), c.into());
        }
        out
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(m, c)| m.degree() == 0 && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&vec![0; self.arity])
    }

    /// Largest degree among the terms; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// `Some(d)` when every term has degree `d`. Zero is homogeneous of
    /// every degree and reports `Some(0)`.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => Some(0),
            Some(d) => degs.all(|e| e == d).then_some(d),
        }
    }

    pub fn homogeneous_component(&self, d: usize) -> RingElement {
        RingElement {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Distinct degrees occurring, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.terms.keys().map(Monomial::degree).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn scale(&self, c: &BigInt) -> RingElement {
        if c.is_zero() {
            return RingElement::zero(self.arity);
        }
        RingElement {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v * c))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> RingElement {
        let mut acc = RingElement::one(self.arity);
        for _ in 0..k {
            acc = acc.mul_ref(self);
        }
        acc
    }

    fn add_ref(&self, other: &RingElement) -> RingElement {
        assert_eq!(self.arity, other.arity, "arity mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    fn sub_ref(&self, other: &RingElement) -> RingElement {
        assert_eq!(self.arity, other.arity, "arity mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    fn mul_ref(&self, other: &RingElement) -> RingElement {
        assert_eq!(self.arity, other.arity, "arity mismatch");
        let mut out = RingElement::zero(self.arity);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    /// Substitutes `values[k-1]` for the `k`-th indeterminate; the values
    /// live in a ring of arity `target`.
    pub fn eval(&self, target: usize, values: &[RingElement]) -> RingElement {
        assert_eq!(values.len(), self.arity, "one value per indeterminate");
        assert!(values.iter().all(|v| v.arity == target), "value arity");
        let mut out = RingElement::zero(target);
        for (m, c) in &self.terms {
            let mut t = RingElement::constant(target, c.clone());
            for (v, &a) in values.iter().zip(&m.0) {
                if a > 0 {
                    t = t.mul_ref(&v.pow(a));
                }
            }
            out = out.add_ref(&t);
        }
        out
    }

    /// Re-tags a zero element read back from JSON with its true arity.
    pub fn with_arity(mut self, arity: usize) -> Result<Self> {
        if self.is_zero() {
            self.arity = arity;
            return Ok(self);
        }
        if self.arity != arity {
            return Err(Error::arg(format!(
                "element has arity {}, expected {arity}",
                self.arity
            )));
        }
        Ok(self)
    }

    /// Text rendering with a custom symbol prefix, e.g. `h` for `h1*h2`.
    pub fn display_with<'a>(&'a self, symbol: &'a str) -> impl fmt::Display + 'a {
        Render {
            p: self,
            symbol,
            latex: false,
        }
    }

    pub fn to_latex(&self, symbol: &str) -> String {
        Render {
            p: self,
            symbol,
            latex: true,
        }
        .to_string()
    }
}

struct Render<'a> {
    p: &'a RingElement,
    symbol: &'a str,
    latex: bool,
}

impl fmt::Display for Render<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.p.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let factors: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(i, &a)| match (self.latex, a) {
                    (false, 1) => format!("{}{}", self.symbol, i + 1),
                    (false, _) => format!("{}{}^{}", self.symbol, i + 1, a),
                    (true, 1) => format!("{}_{{{}}}", self.symbol, i + 1),
                    (true, _) => format!("{}_{{{}}}^{{{}}}", self.symbol, i + 1, a),
                })
                .collect();
            let sep = if self.latex { " " } else { "*" };
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join(sep))?;
            } else {
                write!(f, "{abs}{sep}{}", factors.join(sep))?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with("e").fmt(f)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    exps: Vec<u32>,
}

impl Serialize for RingElement {
    /// Terms in decreasing monomial order.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermJson> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| TermJson {
                coeff: c.to_string(),
                exps: m.0.clone(),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RingElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let terms = Vec::<TermJson>::deserialize(d)?;
        let arity = terms.first().map(|t| t.exps.len()).unwrap_or(0);
        let mut out = RingElement::zero(arity);
        for t in terms {
            if t.exps.len() != arity {
                return Err(D::Error::custom("inconsistent exponent vector lengths"));
            }
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| D::Error::custom(format!("bad coefficient {:?}", t.coeff)))?;
            out.add_term(Monomial(t.exps), c);
        }
        Ok(out)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr<&RingElement> for &RingElement {
            type Output = RingElement;
            fn $method(self, rhs: &RingElement) -> RingElement {
                self.$inner(rhs)
            }
        }
        impl $tr<RingElement> for RingElement {
            type Output = RingElement;
            fn $method(self, rhs: RingElement) -> RingElement {
                self.$inner(&rhs)
            }
        }
        impl $tr<&RingElement> for RingElement {
            type Output = RingElement;
            fn $method(self, rhs: &RingElement) -> RingElement {
                self.$inner(rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        self.scale(&BigInt::from(-1))
    }
}

impl Neg for RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        -&self
    }
}
