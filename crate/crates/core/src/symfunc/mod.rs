//! The rings `B_r = Z[e_1..e_r]` and `B_{r,n}`.
//!
//! Elements of `B_r` are kept as [`RingElement`]s in the `e`-variables; the
//! Schur basis `Δ_λ(H_r) = det(h_{λ_j - j + i})` is a derived view
//! ([`SchurExpansion`]) obtained by [`straighten`]. Elements of the finite
//! ring `B_{r,n}` are Schur expansions supported in the `r x (n-r)` box.

mod expansion;
mod parser;

use std::collections::HashMap;
use std::fmt;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactpoly::{determinant, LaurentWindow, RingElement};
use crate::partitions::Partition;

pub use expansion::{project, project_series, straighten, SchurExpansion};
pub use parser::parse_element;

/// The complete homogeneous sequence `h_0, h_1, ..` of `B_r`, defined by
/// `sum h_i z^i = 1 / E_r(z)` with `E_r(z) = 1 - e_1 z + .. + (-1)^r e_r z^r`.
///
/// Values are computed on demand and cached, together with the Schur
/// determinants built from them. The caches only grow and are guarded by
/// locks, so a shared `&HSequence` can be used from several threads.
pub struct HSequence {
    r: usize,
    h: RwLock<Vec<RingElement>>,
    schur: RwLock<HashMap<Partition, RingElement>>,
}

impl fmt::Debug for HSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HSequence").field("r", &self.r).finish()
    }
}

impl HSequence {
    pub fn new(r: usize) -> Self {
        HSequence {
            r,
            h: RwLock::new(vec![RingElement::one(r)]),
            schur: RwLock::new(HashMap::new()),
        }
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    /// `e_k`, with `e_0 = 1` and `e_k = 0` outside `0..=r`.
    pub fn e(&self, k: i64) -> RingElement {
        match k {
            0 => RingElement::one(self.r),
            k if k < 0 || k as usize > self.r => RingElement::zero(self.r),
            k => RingElement::generator(self.r, k as usize),
        }
    }

    /// `h_j`; zero for negative `j`.
    pub fn h(&self, j: i64) -> RingElement {
        if j < 0 {
            return RingElement::zero(self.r);
        }
        let j = j as usize;
        if let Some(v) = self.h.read().unwrap().get(j) {
            return v.clone();
        }
        let mut cache = self.h.write().unwrap();
        while cache.len() <= j {
            let m = cache.len();
            let mut next = RingElement::zero(self.r);
            for k in 1..=self.r.min(m) {
                let t = &self.e(k as i64) * &cache[m - k];
                next = if k % 2 == 1 { next + t } else { next - t };
            }
            cache.push(next);
        }
        cache[j].clone()
    }

    /// `E_r(z)` as an exact polynomial in `z`.
    pub fn e_polynomial(&self) -> LaurentWindow {
        LaurentWindow::polynomial(
            self.r,
            (0..=self.r as i64).map(|k| {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                ((k, 0), self.e(k).scale(&BigInt::from(sign)))
            }),
        )
    }

    /// `1 / E_r(z)` certified through `z^{z_max}`.
    pub fn generating_series(&self, z_max: i64) -> Result<LaurentWindow> {
        self.e_polynomial().geometric_inverse(z_max)
    }

    /// Cached [`schur_det`].
    pub fn schur(&self, lambda: &Partition) -> Result<RingElement> {
        if let Some(v) = self.schur.read().unwrap().get(lambda) {
            return Ok(v.clone());
        }
        let v = schur_det(lambda, self)?;
        check_leading_term(lambda, &v, self.r);
        self.schur.write().unwrap().insert(lambda.clone(), v.clone());
        Ok(v)
    }
}

/// The Schur determinant `Δ_λ(H_r) = det(h_{λ_j - j + i})_{1<=i,j<=r}`.
pub fn schur_det(lambda: &Partition, h: &HSequence) -> Result<RingElement> {
    let r = h.rank();
    if lambda.length() > r {
        return Err(Error::arg(format!(
            "{lambda} has more than r = {r} parts"
        )));
    }
    let parts = lambda.padded(r);
    let m: Vec<Vec<RingElement>> = (1..=r as i64)
        .map(|i| {
            (1..=r as i64)
                .map(|j| h.h(parts[j as usize - 1] as i64 - j + i))
                .collect()
        })
        .collect();
    Ok(determinant(&m, &RingElement::one(r)))
}

/// The exponent vector of `e_{λ'}`, the monomial that leads `Δ_λ(H_r)` in
/// the straightening order.
pub(crate) fn leading_exps(lambda: &Partition, r: usize) -> Vec<u32> {
    (1..=r)
        .map(|k| (lambda.part(k) - lambda.part(k + 1)) as u32)
        .collect()
}

/// Conjugate partition `μ` of an `e`-monomial `e_1^{a_1}..e_r^{a_r}`, i.e. the
/// partition with `a_k` parts equal to `k`.
pub(crate) fn monomial_partition(exps: &[u32]) -> Vec<usize> {
    let mut parts = Vec::new();
    for (k, &a) in exps.iter().enumerate().rev() {
        parts.extend(std::iter::repeat_n(k + 1, a as usize));
    }
    parts
}

/// Straightening relies on `Δ_λ` having `e_{λ'}` with coefficient 1 as its
/// lexicographically smallest monomial.
fn check_leading_term(lambda: &Partition, det: &RingElement, r: usize) {
    let lead = leading_exps(lambda, r);
    let lead_mu = monomial_partition(&lead);
    let min = det
        .terms()
        .map(|(m, c)| (monomial_partition(m.exps()), c))
        .min_by(|a, b| a.0.cmp(&b.0));
    match min {
        Some((mu, c)) if mu == lead_mu && c.is_one() => {}
        _ => panic!("transition matrix is not unitriangular at {lambda} (r = {r})"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn h_sequence_r2() {
        let h = HSequence::new(2);
        let e1 = h.e(1);
        let e2 = h.e(2);
        assert_eq!(h.h(0), RingElement::one(2));
        assert_eq!(h.h(-1), RingElement::zero(2));
        assert_eq!(h.h(1), e1);
        assert_eq!(h.h(2), &(&e1 * &e1) - &e2);
        // recursion h_j = e1 h_{j-1} - e2 h_{j-2}
        for j in 2..8 {
            assert_eq!(h.h(j), &(&e1 * &h.h(j - 1)) - &(&e2 * &h.h(j - 2)));
            assert_eq!(h.h(j).homogeneous_degree(), Some(j as usize));
        }
    }

    #[test]
    fn generating_series_inverts_e() {
        for r in 0..=3 {
            let h = HSequence::new(r);
            let s = h.generating_series(6).unwrap();
            for j in 0..=6 {
                assert_eq!(s.coeff(j, 0).unwrap(), h.h(j));
            }
            let back = h.e_polynomial().mul(&s).unwrap();
            assert_eq!(back.coeff(0, 0).unwrap(), RingElement::one(r));
            assert_eq!(back.len(), 1);
        }
    }

    #[test]
    fn schur_examples() {
        let h = HSequence::new(2);
        assert_eq!(h.schur(&Partition::empty()).unwrap(), RingElement::one(2));
        // e2 = h1^2 - h2
        let e2 = h.e(2);
        assert_eq!(h.schur(&p(&[1, 1])).unwrap(), e2);
        assert_eq!(&(&h.h(1) * &h.h(1)) - &h.h(2), e2);
        // Δ_(3,1) = h1 h3 - h4 = e1^2 e2 - e2^2
        let d31 = h.schur(&p(&[3, 1])).unwrap();
        assert_eq!(d31, &(&h.h(1) * &h.h(3)) - &h.h(4));
        assert_eq!(d31.to_string(), "e1^2*e2 - e2^2");
        assert!(h.schur(&p(&[1, 1, 1])).is_err());
    }

    #[test]
    fn schur_is_homogeneous() {
        for r in 1..=3 {
            let h = HSequence::new(r);
            for lam in crate::partitions::enumerate_box(r, 4, None) {
                let d = h.schur(&lam).unwrap();
                assert_eq!(d.homogeneous_degree(), Some(lam.weight()), "{lam}");
            }
        }
    }

    #[test]
    fn rank_zero_ring_is_integers() {
        let h = HSequence::new(0);
        assert_eq!(h.h(0), RingElement::one(0));
        assert!(h.h(3).is_zero());
        assert_eq!(h.schur(&Partition::empty()).unwrap(), RingElement::one(0));
    }
}
