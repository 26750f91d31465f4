//! A brute-force model of the exterior powers `⋀^r M` of the free module
//! `M = ⊕_{j>=0} Z b_j`.
//!
//! Nothing here uses determinants or symmetric functions: wedge monomials are
//! sorted with a sign, contractions remove a factor, and the Schubert
//! derivations act factor by factor. The closed forms in
//! [`crate::schubert_ops`] are checked against this module.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::{LaurentWindow, Window};
use crate::partitions::Partition;
use crate::symfunc::{HSequence, SchurExpansion};

/// An integer combination of wedge monomials `b_{i_1} ∧ .. ∧ b_{i_r}`, stored
/// with strictly decreasing index tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeElement {
    degree: usize,
    terms: BTreeMap<Vec<usize>, BigInt>,
}

/// Sorts `idx` decreasingly and returns the sign of the permutation, or
/// `None` if an index repeats.
fn normalize(idx: &mut [usize]) -> Option<i32> {
    let mut sign = 1;
    // insertion sort; the tuples are short
    for a in 1..idx.len() {
        let mut b = a;
        while b > 0 && idx[b - 1] < idx[b] {
            idx.swap(b - 1, b);
            sign = -sign;
            b -= 1;
        }
    }
    if idx.windows(2).any(|p| p[0] == p[1]) {
        None
    } else {
        Some(sign)
    }
}

impl WedgeElement {
    pub fn zero(degree: usize) -> Self {
        WedgeElement {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The empty wedge, unit of the exterior algebra.
    pub fn one() -> Self {
        Self::monomial(&[])
    }

    /// The basis vector `b_i` of `M`.
    pub fn b(i: usize) -> Self {
        Self::monomial(&[i])
    }

    /// `b_{i_1} ∧ .. ∧ b_{i_r}` for indices in any order.
    pub fn monomial(indices: &[usize]) -> Self {
        let mut out = Self::zero(indices.len());
        let mut idx = indices.to_vec();
        if let Some(s) = normalize(&mut idx) {
            out.terms.insert(idx, BigInt::from(s));
        }
        out
    }

    /// `[b]^r_λ = b_{r-1+λ_1} ∧ .. ∧ b_{λ_r}`.
    pub fn basis(lambda: &Partition, r: usize) -> Result<Self> {
        if lambda.length() > r {
            return Err(Error::arg(format!("{lambda} has more than r = {r} parts")));
        }
        let idx: Vec<usize> = lambda
            .padded(r)
            .iter()
            .enumerate()
            .map(|(k, &p)| p + r - 1 - k)
            .collect();
        Ok(Self::monomial(&idx))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &BigInt)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn coeff(&self, indices: &[usize]) -> BigInt {
        self.terms.get(indices).cloned().unwrap_or_default()
    }

    /// Largest index appearing in any term.
    pub fn max_index(&self) -> Option<usize> {
        self.terms.keys().filter_map(|k| k.first().copied()).max()
    }

    fn add_term(&mut self, idx: Vec<usize>, c: BigInt) {
        debug_assert_eq!(idx.len(), self.degree);
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(idx.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&idx);
        }
    }

    fn add_unsorted(&mut self, mut idx: Vec<usize>, c: &BigInt) {
        if let Some(s) = normalize(&mut idx) {
            self.add_term(idx, if s > 0 { c.clone() } else { -c });
        }
    }

    pub fn add(&self, other: &WedgeElement) -> WedgeElement {
        assert_eq!(self.degree, other.degree, "wedge degrees differ");
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &WedgeElement) -> WedgeElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> WedgeElement {
        self.scale(&BigInt::from(-1))
    }

    pub fn scale(&self, c: &BigInt) -> WedgeElement {
        let mut out = Self::zero(self.degree);
        if !c.is_zero() {
            for (k, v) in &self.terms {
                out.terms.insert(k.clone(), v * c);
            }
        }
        out
    }

    /// `self ∧ other`.
    pub fn wedge(&self, other: &WedgeElement) -> WedgeElement {
        let mut out = Self::zero(self.degree + other.degree);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let idx: Vec<usize> = a.iter().chain(b).copied().collect();
                out.add_unsorted(idx, &(x * y));
            }
        }
        out
    }

    /// `β_j ⌟ self`: removes `b_j` from each monomial containing it, with sign
    /// `(-1)^{k-1}` for position `k`.
    pub fn contract(&self, j: usize) -> WedgeElement {
        let mut out = Self::zero(self.degree.saturating_sub(1));
        if self.degree == 0 {
            return out;
        }
        for (idx, c) in &self.terms {
            if let Some(pos) = idx.iter().position(|&i| i == j) {
                let mut rest = idx.clone();
                rest.remove(pos);
                out.add_term(rest, if pos % 2 == 0 { c.clone() } else { -c });
            }
        }
        out
    }

    /// `δ(E_ij) u = b_i ∧ (β_j ⌟ u)`.
    pub fn delta_elementary(&self, i: usize, j: usize) -> WedgeElement {
        if self.degree == 0 {
            return self.clone().scale(&BigInt::zero());
        }
        Self::b(i).wedge(&self.contract(j))
    }

    /// `δ(E_ij)` through the Leibniz rule: every factor equal to `b_j` is
    /// replaced by `b_i` in turn.
    pub fn delta_leibniz(&self, i: usize, j: usize) -> WedgeElement {
        let mut out = Self::zero(self.degree);
        for (idx, c) in &self.terms {
            for (k, &a) in idx.iter().enumerate() {
                if a == j {
                    let mut img = idx.clone();
                    img[k] = i;
                    out.add_unsorted(img, c);
                }
            }
        }
        out
    }

    /// `δ(A)` for a finitely supported matrix given by its entries `(i, j, a_ij)`.
    pub fn delta_sparse<'a, I>(&self, entries: I) -> WedgeElement
    where
        I: IntoIterator<Item = (usize, usize, &'a BigInt)>,
    {
        let mut out = Self::zero(self.degree);
        for (i, j, a) in entries {
            out = out.add(&self.delta_leibniz(i, j).scale(a));
        }
        out
    }

    /// The single Schubert component `σ_i`: the coefficient of `z^i` in
    /// `σ_+(z)` for `i >= 0`, and of `z^i` in `σ_-(z)` for `i < 0`.
    pub fn sigma(&self, i: i64) -> WedgeElement {
        let k = i.unsigned_abs() as usize;
        let kind = if i >= 0 {
            SchubertKind::SigmaPlus
        } else {
            SchubertKind::SigmaMinus
        };
        hs_apply(kind, k, self)
            .into_iter()
            .nth(k)
            .unwrap_or_else(|| WedgeElement::zero(self.degree))
    }

    /// Reads each tuple `(i_1, .., i_r)` as the partition
    /// `(i_1 - r + 1, .., i_r)`, the inverse of `Δ_λ(H_r) -> [b]^r_λ`.
    pub fn to_schur(&self) -> SchurExpansion {
        let r = self.degree;
        let terms = self.terms.iter().map(|(idx, c)| {
            let parts: Vec<usize> = idx.iter().enumerate().map(|(k, &i)| i - (r - 1 - k)).collect();
            let lambda = Partition::new(parts).expect("strictly decreasing tuple");
            (lambda, c.clone())
        });
        SchurExpansion::from_terms(r, None, terms).expect("partitions have at most r parts")
    }

    pub fn from_schur(x: &SchurExpansion) -> WedgeElement {
        let r = x.rank();
        let mut out = Self::zero(r);
        for (lambda, c) in x.terms() {
            let b = Self::basis(lambda, r).expect("expansion partitions fit r");
            out = out.add(&b.scale(c));
        }
        out
    }
}

impl fmt::Display for WedgeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (idx, c)) in self.terms.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if k > 0 {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let abs = c.abs();
            let mono = if idx.is_empty() {
                "1".to_string()
            } else {
                idx.iter().map(|i| format!("b{i}")).collect::<Vec<_>>().join("^")
            };
            if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

/// The four Schubert derivations. `σ_±` shift indices up or down;
/// the barred ones are their formal inverses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SchubertKind {
    SigmaPlus,
    SigmaBarPlus,
    SigmaMinus,
    SigmaBarMinus,
}

impl SchubertKind {
    fn lowers(self) -> bool {
        matches!(self, SchubertKind::SigmaMinus | SchubertKind::SigmaBarMinus)
    }

    fn barred(self) -> bool {
        matches!(self, SchubertKind::SigmaBarPlus | SchubertKind::SigmaBarMinus)
    }
}

/// The formal variable a derivation is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    Z,
    W,
}

/// `σ_{±k}` on a degree-one element: `b_j -> b_{j±k}`, zero below `b_0`.
fn shift_one(x: &WedgeElement, k: usize, down: bool) -> WedgeElement {
    let mut out = WedgeElement::zero(1);
    for (idx, c) in &x.terms {
        let j = idx[0];
        let t = if down { j.checked_sub(k) } else { Some(j + k) };
        if let Some(t) = t {
            out.add_term(vec![t], c.clone());
        }
    }
    out
}

/// Components `D_0 b_j, .., D_top b_j` of a Schubert derivation on `b_j`.
/// Barred components come from the inversion recursion
/// `D̄_0 = 1`, `D̄_k = -sum_{i=1..k} D_i D̄_{k-i}`.
fn degree_one_images(kind: SchubertKind, j: usize, top: usize) -> Vec<WedgeElement> {
    let down = kind.lowers();
    let bj = WedgeElement::b(j);
    if !kind.barred() {
        return (0..=top).map(|k| shift_one(&bj, k, down)).collect();
    }
    let mut bar = vec![bj];
    for k in 1..=top {
        let mut acc = WedgeElement::zero(1);
        for i in 1..=k {
            acc = acc.sub(&shift_one(&bar[k - i], i, down));
        }
        bar.push(acc);
    }
    bar
}

/// A truncated series in `z` and `w^{-1}` with [`WedgeElement`]
/// coefficients, using the same window conventions as [`LaurentWindow`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeSeries {
    degree: usize,
    window: Window,
    entries: BTreeMap<(i64, i64), WedgeElement>,
}

impl WedgeSeries {
    pub fn zero(degree: usize, window: Window) -> Self {
        WedgeSeries {
            degree,
            window,
            entries: BTreeMap::new(),
        }
    }

    /// `u` as an exact constant series.
    pub fn constant(u: WedgeElement) -> Self {
        let mut s = Self::zero(u.degree, Window::exact(0, 0));
        if !u.is_zero() {
            s.entries.insert((0, 0), u);
        }
        s
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(i64, i64), &WedgeElement)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    fn insert_add(&mut self, key: (i64, i64), v: WedgeElement) {
        if !self.window.contains(key.0, key.1) || v.is_zero() {
            return;
        }
        let slot = self
            .entries
            .entry(key)
            .or_insert_with(|| WedgeElement::zero(v.degree));
        *slot = slot.add(&v);
        if slot.is_zero() {
            self.entries.remove(&key);
        }
    }

    pub fn coeff(&self, z: i64, w: i64) -> Result<WedgeElement> {
        if z < self.window.z_min || w > self.window.w_max {
            return Ok(WedgeElement::zero(self.degree));
        }
        if !self.window.certifies(z, w) {
            return Err(Error::OutsideWindow {
                z,
                w,
                window: self.window.to_string(),
            });
        }
        Ok(self
            .entries
            .get(&(z, w))
            .cloned()
            .unwrap_or_else(|| WedgeElement::zero(self.degree)))
    }

    pub fn add(&self, other: &WedgeSeries) -> WedgeSeries {
        assert_eq!(self.degree, other.degree, "wedge degrees differ");
        let mut out = Self::zero(self.degree, self.window.join(&other.window));
        for (k, v) in self.entries.iter().chain(&other.entries) {
            out.insert_add(*k, v.clone());
        }
        out
    }

    pub fn sub(&self, other: &WedgeSeries) -> WedgeSeries {
        self.add(&other.map_linear(other.degree, |u| u.neg()))
    }

    /// Multiplication by `z^dz w^dw`.
    pub fn shift(&self, dz: i64, dw: i64) -> WedgeSeries {
        let w = self.window;
        WedgeSeries {
            degree: self.degree,
            window: Window::new(
                w.z_min + dz,
                w.z_max.map(|m| m + dz),
                w.w_min.map(|m| m + dw),
                w.w_max + dw,
            ),
            entries: self
                .entries
                .iter()
                .map(|((z, ww), v)| ((z + dz, ww + dw), v.clone()))
                .collect(),
        }
    }

    /// Applies a linear map coefficientwise.
    pub fn map_linear<F>(&self, degree: usize, f: F) -> WedgeSeries
    where
        F: Fn(&WedgeElement) -> WedgeElement,
    {
        let mut out = Self::zero(degree, self.window);
        for (k, v) in &self.entries {
            out.insert_add(*k, f(v));
        }
        out
    }

    /// Product with an integer series (a [`LaurentWindow`] over `B_0 = Z`).
    pub fn scalar_mul(&self, s: &LaurentWindow) -> Result<WedgeSeries> {
        if s.arity() != 0 {
            return Err(Error::arg("scalar series must have integer coefficients"));
        }
        let window = self.window.product(&s.window());
        if window.z_max.is_some_and(|m| m < window.z_min)
            || window.w_min.is_some_and(|m| m > window.w_max)
        {
            return Err(Error::EmptyWindow(window.to_string()));
        }
        let mut out = Self::zero(self.degree, window);
        for ((z1, w1), u) in &self.entries {
            for ((z2, w2), c) in s.entries() {
                out.insert_add((z1 + z2, w1 + w2), u.scale(&c.constant_term()));
            }
        }
        Ok(out)
    }

    /// Coefficientwise wedge product of two series.
    pub fn wedge(&self, other: &WedgeSeries) -> Result<WedgeSeries> {
        let window = self.window.product(&other.window);
        if window.z_max.is_some_and(|m| m < window.z_min)
            || window.w_min.is_some_and(|m| m > window.w_max)
        {
            return Err(Error::EmptyWindow(window.to_string()));
        }
        let mut out = Self::zero(self.degree + other.degree, window);
        for ((z1, w1), u) in &self.entries {
            for ((z2, w2), v) in &other.entries {
                out.insert_add((z1 + z2, w1 + w2), u.wedge(v));
            }
        }
        Ok(out)
    }

    /// Applies the Schubert derivation `kind` in variable `var` to every
    /// coefficient, as a Hasse-Schmidt derivation (factor by factor).
    ///
    /// Raising derivations are truncated at `order` and are only offered in
    /// `z`. Lowering derivations are exact on finite wedges, so they need the
    /// series to be exact in their own variable.
    pub fn apply_sigma(&self, kind: SchubertKind, var: Var, order: usize) -> Result<WedgeSeries> {
        if !kind.lowers() && var == Var::W {
            return Err(Error::arg("raising derivations are only expanded in z"));
        }
        if kind.lowers() {
            let truncated = match var {
                Var::Z => self.window.z_max.is_some(),
                Var::W => self.window.w_min.is_some(),
            };
            if truncated {
                return Err(Error::arg(
                    "a lowering derivation needs a series exact in its variable",
                ));
            }
        }
        let op_window = if kind.lowers() {
            let depth: i64 = self
                .entries
                .values()
                .flat_map(|u| u.terms.keys())
                .map(|idx| idx.iter().sum::<usize>() as i64)
                .max()
                .unwrap_or(0);
            match var {
                Var::Z => Window::exact(-depth, 0),
                Var::W => Window::exact(0, 0),
            }
        } else {
            Window::new(0, Some(order as i64), None, 0)
        };
        let window = self.window.product(&op_window);
        let mut out = Self::zero(self.degree, window);
        for ((z, w), u) in &self.entries {
            let image = hs_apply(kind, order, u);
            for (k, v) in image.into_iter().enumerate() {
                let k = k as i64;
                let key = match (kind.lowers(), var) {
                    (false, _) => (z + k, *w),
                    (true, Var::Z) => (z - k, *w),
                    (true, Var::W) => (*z, w - k),
                };
                out.insert_add(key, v);
            }
        }
        Ok(out)
    }

    /// `b(z) = sum_{j=0..=order} b_j z^j`, certified through `z^order`.
    pub fn b_series(order: usize) -> WedgeSeries {
        let mut s = Self::zero(1, Window::new(0, Some(order as i64), None, 0));
        for j in 0..=order {
            s.insert_add((j as i64, 0), WedgeElement::b(j));
        }
        s
    }

    /// Whether the two series agree at every position both windows certify.
    pub fn agrees_with(&self, other: &WedgeSeries) -> bool {
        self.entries
            .keys()
            .chain(other.entries.keys())
            .filter(|(z, w)| self.window.certifies(*z, *w) && other.window.certifies(*z, *w))
            .all(|&(z, w)| self.coeff(z, w).ok() == other.coeff(z, w).ok())
    }

    /// Transports the series to `B_r` through `[b]^r_λ -> Δ_λ(H_r)`.
    pub fn to_laurent(&self, h: &HSequence) -> Result<LaurentWindow> {
        if h.rank() != self.degree {
            return Err(Error::arg("HSequence rank differs from the wedge degree"));
        }
        let mut entries = Vec::new();
        for (k, u) in &self.entries {
            entries.push((*k, u.to_schur().to_ring(h)?));
        }
        LaurentWindow::from_parts(self.degree, self.window, entries)
    }
}

/// `D(t) u` for a wedge element `u`, as the list of coefficients of
/// `t^0, t^{±1}, ..`. Raising kinds stop at `order`; lowering kinds run until
/// every index has dropped below zero.
fn hs_apply(kind: SchubertKind, order: usize, u: &WedgeElement) -> Vec<WedgeElement> {
    let mut total = vec![WedgeElement::zero(u.degree)];
    for (idx, c) in &u.terms {
        let depth = if kind.lowers() {
            idx.iter().sum::<usize>()
        } else {
            order
        };
        // running product of the factor series, kept up to `depth`
        let mut acc: Vec<WedgeElement> = vec![WedgeElement::one()];
        for &j in idx {
            let top = if kind.lowers() { j } else { order };
            let f = degree_one_images(kind, j, top);
            let mut next = vec![WedgeElement::zero(acc[0].degree + 1); depth + 1];
            for (a, x) in acc.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (b, y) in f.iter().enumerate() {
                    if a + b > depth || y.is_zero() {
                        continue;
                    }
                    next[a + b] = next[a + b].add(&x.wedge(y));
                }
            }
            acc = next;
        }
        if total.len() < acc.len() {
            total.resize(acc.len(), WedgeElement::zero(u.degree));
        }
        for (k, v) in acc.into_iter().enumerate() {
            total[k] = total[k].add(&v.scale(c));
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(idx: &[usize]) -> WedgeElement {
        WedgeElement::monomial(idx)
    }

    #[test]
    fn wedge_signs() {
        assert_eq!(WedgeElement::b(1).wedge(&WedgeElement::b(0)).coeff(&[1, 0]), BigInt::from(1));
        assert_eq!(WedgeElement::b(0).wedge(&WedgeElement::b(1)).coeff(&[1, 0]), BigInt::from(-1));
        assert!(WedgeElement::b(2).wedge(&WedgeElement::b(2)).is_zero());
        assert_eq!(m(&[0, 2, 1]).coeff(&[2, 1, 0]), BigInt::from(1));
        assert_eq!(m(&[0, 1, 2]).coeff(&[2, 1, 0]), BigInt::from(-1));
    }

    #[test]
    fn contraction_signs() {
        let u = m(&[2, 1]);
        assert_eq!(u.contract(1), WedgeElement::b(2).neg());
        assert!(u.contract(0).is_zero());
        assert_eq!(u.contract(2), WedgeElement::b(1));
    }

    #[test]
    fn elementary_action() {
        let u = m(&[3, 1]);
        assert_eq!(u.delta_elementary(4, 1), m(&[4, 3]).neg());
        assert_eq!(u.delta_elementary(4, 1), u.delta_leibniz(4, 1));
        assert_eq!(u.delta_elementary(3, 3), u);
        // E_{4,2} e_2 corresponds to b_4 ∧ b_1 = [b]^2_(3,1)
        let e2 = WedgeElement::basis(&Partition::new(vec![1, 1]).unwrap(), 2).unwrap();
        assert_eq!(e2, m(&[2, 1]));
        let img = e2.delta_elementary(4, 2);
        assert_eq!(img, m(&[4, 1]));
        assert_eq!(
            img.to_schur(),
            SchurExpansion::basis(2, None, Partition::new(vec![3, 1]).unwrap()).unwrap()
        );
    }

    #[test]
    fn schur_round_trip() {
        assert!(m(&[1, 0]).to_schur().coeff(&Partition::empty()).is_one());
        assert_eq!(m(&[3, 1]).to_schur().to_string(), "{(2,1): 1}");
        let x = m(&[5, 2, 0]).add(&m(&[3, 2, 1]).scale(&BigInt::from(-4)));
        assert_eq!(WedgeElement::from_schur(&x.to_schur()), x);
    }

    #[test]
    fn degree_one_bars() {
        let up = degree_one_images(SchubertKind::SigmaBarPlus, 3, 4);
        assert_eq!(up[0], WedgeElement::b(3));
        assert_eq!(up[1], WedgeElement::b(4).neg());
        assert!(up[2..].iter().all(WedgeElement::is_zero));
        let down = degree_one_images(SchubertKind::SigmaBarMinus, 3, 3);
        assert_eq!(down[1], WedgeElement::b(2).neg());
        assert!(down[2..].iter().all(WedgeElement::is_zero));
        let b0 = degree_one_images(SchubertKind::SigmaBarMinus, 0, 0);
        assert_eq!(b0, vec![WedgeElement::b(0)]);
    }

    #[test]
    fn sigma_plus_on_b0_is_b_series() {
        let s = WedgeSeries::constant(WedgeElement::b(0))
            .apply_sigma(SchubertKind::SigmaPlus, Var::Z, 3)
            .unwrap();
        assert_eq!(s, WedgeSeries::b_series(3));
        assert!(s.coeff(4, 0).is_err());
    }

    #[test]
    fn lowering_needs_exact_input() {
        let s = WedgeSeries::b_series(3);
        assert!(s.apply_sigma(SchubertKind::SigmaMinus, Var::Z, 3).is_err());
        assert!(s.apply_sigma(SchubertKind::SigmaMinus, Var::W, 3).is_ok());
        assert!(s.apply_sigma(SchubertKind::SigmaPlus, Var::W, 3).is_err());
    }

    #[test]
    fn sigma_plus_then_bar_is_identity() {
        let u = m(&[4, 2, 1]);
        let s = WedgeSeries::constant(u.clone())
            .apply_sigma(SchubertKind::SigmaPlus, Var::Z, 5)
            .unwrap()
            .apply_sigma(SchubertKind::SigmaBarPlus, Var::Z, 5)
            .unwrap();
        assert!(s.agrees_with(&WedgeSeries::constant(u)));
        assert_eq!(s.window().z_max, Some(5));
    }

    #[test]
    fn leibniz_matches_contraction_route() {
        for idx in [[5usize, 3, 0], [4, 2, 1], [2, 1, 0]] {
            let u = m(&idx);
            for i in 0..7 {
                for j in 0..7 {
                    assert_eq!(u.delta_elementary(i, j), u.delta_leibniz(i, j), "{i} {j}");
                }
            }
        }
    }
}
