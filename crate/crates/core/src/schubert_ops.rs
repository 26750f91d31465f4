//! Closed forms for the action of `gl_n(Z)` on `B_r` and `B_{r,n}`.
//!
//! The generating function `E(z,w) = sum E_ij z^i w^{-j}` acting on a Schur
//! determinant is computed in two independent ways:
//!
//! - [`action_first_form`]: `z^{r-1} w^{-(r-1)} (1/E_r(z))` times the mixed
//!   determinant whose first row is `w^{j-1-λ_j}` and whose other rows are
//!   `σ̄_-(z) h_{λ_j - j + i}`;
//! - [`action_second_form`]: `i_{w,z}(w/(w-z)) (1 - (z^r/w^r) Γ_r(z,w))`
//!   with `Γ_r(z,w) = E_r(w)/E_r(z) σ_-(w) σ̄_-(z)`.
//!
//! [`act_elementary`] and [`act_matrix`] extract single coefficients and
//! project them to `B_{r,n}` afterwards.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactpoly::{determinant, LaurentWindow, RingElement};
use crate::partitions::Partition;
use crate::symfunc::{project, straighten, HSequence, SchurExpansion};

/// A formal combination `sum c z^a w^b h_k`, used to apply the substitutions
/// `σ̄_-(z)` and `σ_-(w)` to a single `h_j` symbolically.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HForm {
    terms: BTreeMap<(i64, i64, i64), BigInt>,
}

impl HForm {
    pub fn h(j: i64) -> Self {
        let mut f = HForm::default();
        f.add((0, 0, j), BigInt::from(1));
        f
    }

    fn add(&mut self, key: (i64, i64, i64), c: BigInt) {
        if key.2 < 0 || c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// `h_k -> h_k - h_{k-1} z^{-1}`.
    pub fn twist_z(&self) -> Self {
        let mut out = HForm::default();
        for (&(a, b, k), c) in &self.terms {
            out.add((a, b, k), c.clone());
            out.add((a - 1, b, k - 1), -c);
        }
        out
    }

    /// `h_k -> sum_{i=0..=k} h_{k-i} w^{-i}`.
    pub fn twist_w(&self) -> Self {
        let mut out = HForm::default();
        for (&(a, b, k), c) in &self.terms {
            for i in 0..=k {
                out.add((a, b - i, k - i), c.clone());
            }
        }
        out
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_laurent(&self, h: &HSequence) -> LaurentWindow {
        let mut acc: BTreeMap<(i64, i64), RingElement> = BTreeMap::new();
        for (&(a, b, k), c) in &self.terms {
            let slot = acc
                .entry((a, b))
                .or_insert_with(|| RingElement::zero(h.rank()));
            *slot = &*slot + &h.h(k).scale(c);
        }
        LaurentWindow::polynomial(h.rank(), acc)
    }
}

/// The sequence `H_r` with the substitutions `σ̄_-(z)` and/or `σ_-(w)`
/// applied entrywise.
#[derive(Clone, Copy, Debug)]
pub struct TwistedHSequence<'a> {
    base: &'a HSequence,
    z_twist: bool,
    w_twist: bool,
}

impl<'a> TwistedHSequence<'a> {
    pub fn new(base: &'a HSequence) -> Self {
        TwistedHSequence {
            base,
            z_twist: false,
            w_twist: false,
        }
    }

    pub fn twist_z(self) -> Self {
        TwistedHSequence {
            z_twist: true,
            ..self
        }
    }

    pub fn twist_w(self) -> Self {
        TwistedHSequence {
            w_twist: true,
            ..self
        }
    }

    pub fn base(&self) -> &'a HSequence {
        self.base
    }

    pub fn rank(&self) -> usize {
        self.base.rank()
    }

    pub fn z_twisted(&self) -> bool {
        self.z_twist
    }

    pub fn w_twisted(&self) -> bool {
        self.w_twist
    }

    pub fn form(&self, j: i64) -> HForm {
        let mut f = HForm::h(j);
        if self.z_twist {
            f = f.twist_z();
        }
        if self.w_twist {
            f = f.twist_w();
        }
        f
    }

    /// The twisted entry, an exact polynomial in `z^{-1}` and `w^{-1}`.
    pub fn entry(&self, j: i64) -> LaurentWindow {
        self.form(j).to_laurent(self.base)
    }

    /// `Δ_λ` of the twisted sequence, an `r x r` determinant.
    pub fn schur(&self, lambda: &Partition) -> Result<LaurentWindow> {
        let r = self.rank();
        let parts = check_length(lambda, r)?;
        let m: Vec<Vec<LaurentWindow>> = (1..=r)
            .map(|i| {
                (1..=r)
                    .map(|j| self.entry(parts[j - 1] as i64 - j as i64 + i as i64))
                    .collect()
            })
            .collect();
        Ok(determinant(&m, &LaurentWindow::constant(RingElement::one(r))))
    }
}

fn check_length(lambda: &Partition, r: usize) -> Result<Vec<usize>> {
    if lambda.length() > r {
        return Err(Error::arg(format!("{lambda} has more than r = {r} parts")));
    }
    Ok(lambda.padded(r))
}

fn w_power(arity: usize, e: i64) -> LaurentWindow {
    LaurentWindow::monomial(0, e, RingElement::one(arity))
}

/// Determinant with first row `w^{j-1-λ_j}` and rows `i >= 2` given by
/// `row(λ_j - j + i)`.
fn first_row_determinant<F>(lambda: &Partition, r: usize, arity: usize, row: F) -> Result<LaurentWindow>
where
    F: Fn(i64) -> LaurentWindow,
{
    let parts = check_length(lambda, r)?;
    let m: Vec<Vec<LaurentWindow>> = (1..=r as i64)
        .map(|i| {
            (1..=r as i64)
                .map(|j| {
                    let lj = parts[j as usize - 1] as i64;
                    if i == 1 {
                        w_power(arity, j - 1 - lj)
                    } else {
                        row(lj - j + i)
                    }
                })
                .collect()
        })
        .collect();
    Ok(determinant(&m, &LaurentWindow::constant(RingElement::one(arity))))
}

/// `Δ_λ(w^{-λ}, σ̄_-(z)H_r)`: first row `w^{j-1-λ_j}`, rows `i >= 2` equal
/// to `σ̄_-(z) h_{λ_j - j + i}`.
pub fn mixed_determinant(lambda: &Partition, tw: &TwistedHSequence) -> Result<LaurentWindow> {
    if !tw.z_twisted() || tw.w_twisted() {
        return Err(Error::arg("the mixed determinant uses the z-twisted sequence only"));
    }
    first_row_determinant(lambda, tw.rank(), tw.rank(), |k| tw.entry(k))
}

/// `E(z,w) Δ_λ(H_r)`, certified for `z <= z_max` and exact in `w`.
pub fn action_first_form(lambda: &Partition, h: &HSequence, z_max: i64) -> Result<LaurentWindow> {
    let r = h.rank();
    if r == 0 {
        return Err(Error::arg("the generating function needs r >= 1"));
    }
    let tw = TwistedHSequence::new(h).twist_z();
    let det = mixed_determinant(lambda, &tw)?;
    let shift = r as i64 - 1;
    let inv = h.generating_series(z_max.max(0))?;
    let prod = inv.mul(&det)?.shift(shift, -shift);
    prod.truncate(Some(z_max), None)
}

/// `E(z,w) Δ_λ(H_r)` through the vertex-operator form, certified for
/// `z <= z_max` and `w >= w_min`.
pub fn action_second_form(
    lambda: &Partition,
    h: &HSequence,
    z_max: i64,
    w_min: i64,
) -> Result<LaurentWindow> {
    let r = h.rank();
    if r == 0 {
        return Err(Error::arg("the generating function needs r >= 1"));
    }
    if z_max < 0 || w_min > 0 {
        return Err(Error::arg("need z_max >= 0 and w_min <= 0"));
    }
    let ri = r as i64;
    let delta = LaurentWindow::constant(h.schur(lambda)?);
    let twisted = TwistedHSequence::new(h).twist_z().twist_w().schur(lambda)?;
    // (z^r / w^r) E_r(w), a polynomial in z and w^{-1}
    let e_w = LaurentWindow::polynomial(
        r,
        h.e_polynomial()
            .entries()
            .map(|(&(k, _), v)| ((ri, k - ri), v.clone())),
    );
    let inv = h.generating_series(z_max + ri)?;
    let gamma_term = e_w.mul(&inv)?.mul(&twisted)?;
    let inner = delta.sub(&gamma_term);
    let order = z_max.max(-w_min);
    let out = LaurentWindow::geometric_zw(r, order).mul(&inner)?;
    out.truncate(Some(z_max), Some(w_min))
}

/// Which substitution the vertex operator `Γ_r(z)` applies inside the
/// determinant.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum GammaVariant {
    /// `Δ_λ(σ̄_-(z) H_{r+1})`; agrees with `z^{-r} b(z) ∧ [b]^r_λ`.
    #[default]
    Barred,
    /// `Δ_λ(σ_-(z) H_{r+1})`.
    Unbarred,
}

/// `Γ_r(z) x = sum c_λ (1/E_{r+1}(z)) Δ_λ(σ̄_-(z) H_{r+1})` for
/// `x = sum c_λ Δ_λ(H_r)`, certified for `z <= z_max`. `h_next` is the
/// sequence of `B_{r+1}`.
pub fn gamma(
    x: &SchurExpansion,
    h_next: &HSequence,
    z_max: i64,
    variant: GammaVariant,
) -> Result<LaurentWindow> {
    let r1 = x.rank() + 1;
    if h_next.rank() != r1 {
        return Err(Error::arg("gamma needs the sequence of B_{r+1}"));
    }
    let mut total = LaurentWindow::polynomial(r1, []);
    for (lambda, c) in x.terms() {
        // substitute h_k -> sum_i h_{k-i} z^{-i} by renaming w to z
        let tw = match variant {
            GammaVariant::Barred => TwistedHSequence::new(h_next).twist_z(),
            GammaVariant::Unbarred => TwistedHSequence::new(h_next).twist_w(),
        };
        let mut det = tw.schur(lambda)?;
        if variant == GammaVariant::Unbarred {
            det = LaurentWindow::polynomial(
                r1,
                det.entries().map(|(&(z, w), v)| ((z + w, 0), v.clone())),
            );
        }
        let depth = det.entries().map(|(&(z, _), _)| z).min().unwrap_or(0).min(0);
        let inv = h_next.generating_series((z_max - depth).max(0))?;
        let term = inv.mul(&det)?.scale(&RingElement::constant(r1, c.clone()));
        total = total.add(&term);
    }
    total.truncate(Some(z_max), None)
}

/// `Γ*_r(w) x = sum c_λ Δ_λ(w^{-λ}, H_{r-1})`, exact. `h_prev` is the
/// sequence of `B_{r-1}`.
pub fn gamma_star(x: &SchurExpansion, h_prev: &HSequence) -> Result<LaurentWindow> {
    let r = x.rank();
    if r == 0 {
        return Err(Error::arg("Γ* is not defined on B_0"));
    }
    if h_prev.rank() != r - 1 {
        return Err(Error::arg("gamma_star needs the sequence of B_{r-1}"));
    }
    let mut total = LaurentWindow::polynomial(r - 1, []);
    for (lambda, c) in x.terms() {
        let det = first_row_determinant(lambda, r, r - 1, |k| {
            LaurentWindow::constant(h_prev.h(k))
        })?;
        total = total.add(&det.scale(&RingElement::constant(r - 1, c.clone())));
    }
    Ok(total)
}

/// The window `z_max = |λ| + r(n-r) + r` that holds every coefficient with
/// `i < n`.
pub fn default_z_max(lambda: &Partition, r: usize, n: usize) -> i64 {
    (lambda.weight() + r * n.saturating_sub(r) + r) as i64
}

/// `E_ij x`, computed in `B_r` from [`action_first_form`], straightened, and
/// projected to `B_{r,n}` when `x` carries a box bound `n`.
pub fn act_elementary(i: usize, j: usize, x: &SchurExpansion, h: &HSequence) -> Result<SchurExpansion> {
    let r = x.rank();
    if h.rank() != r {
        return Err(Error::arg("HSequence rank does not match the expansion"));
    }
    if let Some(n) = x.bound() {
        if i >= n || j >= n {
            return Err(Error::arg(format!("(i, j) = ({i}, {j}) is outside [0, {n})")));
        }
    }
    let mut acc = RingElement::zero(r);
    if r > 0 {
        for (lambda, c) in x.terms() {
            let series = action_first_form(lambda, h, i as i64)?;
            acc = acc + series.coeff(i as i64, -(j as i64))?.scale(c);
        }
    }
    let s = straighten(&acc, h)?;
    match x.bound() {
        Some(n) => project(&s, n),
        None => Ok(s),
    }
}

/// A finitely supported integer matrix, an element of `gl_n(Z)` (or of the
/// infinite case when `n` is absent).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlMatrix {
    n: Option<usize>,
    entries: BTreeMap<(usize, usize), BigInt>,
}

impl GlMatrix {
    pub fn new<I>(n: Option<usize>, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), BigInt)>,
    {
        let mut m = GlMatrix {
            n,
            entries: BTreeMap::new(),
        };
        for ((i, j), a) in entries {
            if let Some(n) = n {
                if i >= n || j >= n {
                    return Err(Error::arg(format!("entry ({i}, {j}) is outside [0, {n})")));
                }
            }
            m.add_entry(i, j, a);
        }
        Ok(m)
    }

    pub fn zero(n: Option<usize>) -> Self {
        GlMatrix {
            n,
            entries: BTreeMap::new(),
        }
    }

    pub fn elementary(n: Option<usize>, i: usize, j: usize) -> Result<Self> {
        Self::new(n, [((i, j), BigInt::from(1))])
    }

    pub fn identity(n: usize) -> Self {
        Self::new(Some(n), (0..n).map(|k| ((k, k), BigInt::from(1)))).expect("in range")
    }

    fn add_entry(&mut self, i: usize, j: usize, a: BigInt) {
        if a.is_zero() {
            return;
        }
        let slot = self.entries.entry((i, j)).or_default();
        *slot += a;
        if slot.is_zero() {
            self.entries.remove(&(i, j));
        }
    }

    pub fn size(&self) -> Option<usize> {
        self.n
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.entries.iter().map(|(&(i, j), a)| (i, j, a))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn scale(&self, c: &BigInt) -> GlMatrix {
        let mut out = GlMatrix::zero(self.n);
        for (&(i, j), a) in &self.entries {
            out.add_entry(i, j, a * c);
        }
        out
    }

    pub fn add(&self, other: &GlMatrix) -> Result<GlMatrix> {
        if self.n != other.n {
            return Err(Error::arg("matrix sizes differ"));
        }
        let mut out = self.clone();
        for (&(i, j), a) in &other.entries {
            out.add_entry(i, j, a.clone());
        }
        Ok(out)
    }

    pub fn mul(&self, other: &GlMatrix) -> Result<GlMatrix> {
        if self.n != other.n {
            return Err(Error::arg("matrix sizes differ"));
        }
        let mut out = GlMatrix::zero(self.n);
        for (&(i, k), a) in &self.entries {
            for (&(k2, j), b) in other.entries.range((k, 0)..(k + 1, 0)) {
                debug_assert_eq!(k, k2);
                out.add_entry(i, j, a * b);
            }
        }
        Ok(out)
    }

    /// The commutator `AB - BA`.
    pub fn bracket(&self, other: &GlMatrix) -> Result<GlMatrix> {
        self.mul(other)?.add(&other.mul(self)?.scale(&BigInt::from(-1)))
    }
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    i: usize,
    j: usize,
    a: String,
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    n: Option<usize>,
    entries: Vec<EntryJson>,
}

impl Serialize for GlMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson {
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|(&(i, j), a)| EntryJson {
                    i,
                    j,
                    a: a.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GlMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let m = MatrixJson::deserialize(d)?;
        let mut entries = Vec::new();
        for e in m.entries {
            let a: BigInt = e
                .a
                .parse()
                .map_err(|_| D::Error::custom(format!("bad matrix entry {:?}", e.a)))?;
            entries.push(((e.i, e.j), a));
        }
        GlMatrix::new(m.n, entries).map_err(D::Error::custom)
    }
}

/// `δ(A) x = sum a_ij E_ij x`.
pub fn act_matrix(a: &GlMatrix, x: &SchurExpansion, h: &HSequence) -> Result<SchurExpansion> {
    if let Some(n) = x.bound() {
        if a.size() != Some(n) {
            return Err(Error::arg(format!(
                "matrix size {:?} does not match the box bound {n}",
                a.size()
            )));
        }
    }
    let mut out = SchurExpansion::zero(x.rank(), x.bound())?;
    for (i, j, c) in a.entries() {
        out = out.add(&act_elementary(i, j, x, h)?.scale(c))?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn twisted_entries() {
        let h = HSequence::new(2);
        let tz = TwistedHSequence::new(&h).twist_z();
        let e = tz.entry(3);
        assert_eq!(e.len(), 2);
        assert_eq!(e.coeff(0, 0).unwrap(), h.h(3));
        assert_eq!(e.coeff(-1, 0).unwrap(), -h.h(2));
        assert_eq!(tz.entry(0), LaurentWindow::constant(RingElement::one(2)));
        let tw = TwistedHSequence::new(&h).twist_w();
        assert_eq!(tw.entry(3).len(), 4);
        assert_eq!(tw.entry(3).coeff(0, -2).unwrap(), h.h(1));
        let both = TwistedHSequence::new(&h).twist_z().twist_w();
        assert_eq!(both.entry(2).coeff(-1, -1).unwrap(), -RingElement::one(2));
    }

    #[test]
    fn twists_commute_entrywise() {
        for j in -1..8 {
            let a = HForm::h(j).twist_z().twist_w();
            let b = HForm::h(j).twist_w().twist_z();
            assert_eq!(a, b, "h_{j}");
        }
    }

    #[test]
    fn mixed_determinant_examples() {
        let h1 = HSequence::new(1);
        let tw = TwistedHSequence::new(&h1).twist_z();
        let d = mixed_determinant(&p(&[3]), &tw).unwrap();
        assert_eq!(d, LaurentWindow::monomial(0, -3, RingElement::one(1)));

        let h = HSequence::new(2);
        let tw = TwistedHSequence::new(&h).twist_z();
        let d = mixed_determinant(&p(&[2, 2]), &tw).unwrap();
        // w^{-2}(h_2 - h_1/z) - w^{-1}(h_3 - h_2/z)
        assert_eq!(d.coeff(0, -2).unwrap(), h.h(2));
        assert_eq!(d.coeff(-1, -2).unwrap(), -h.h(1));
        assert_eq!(d.coeff(0, -1).unwrap(), -h.h(3));
        assert_eq!(d.coeff(-1, -1).unwrap(), h.h(2));
        assert_eq!(d.len(), 4);
        assert!(mixed_determinant(&p(&[1, 1, 1]), &tw).is_err());
        assert!(mixed_determinant(&p(&[1]), &TwistedHSequence::new(&h)).is_err());
    }

    #[test]
    fn example_e42_on_e2() {
        let h = HSequence::new(2);
        let s = action_first_form(&p(&[1, 1]), &h, 6).unwrap();
        let c = s.coeff(4, -2).unwrap();
        assert_eq!(c, &(&h.h(1) * &h.h(3)) - &h.h(4));
        assert_eq!(c.to_string(), "e1^2*e2 - e2^2");
        assert!(s.coeff(7, -2).is_err());
        let x = SchurExpansion::basis(2, None, p(&[1, 1])).unwrap();
        let y = act_elementary(4, 2, &x, &h).unwrap();
        assert_eq!(y, SchurExpansion::basis(2, None, p(&[3, 1])).unwrap());
    }

    #[test]
    fn example_e12_in_b24() {
        let h = HSequence::new(2);
        let x = SchurExpansion::basis(2, Some(4), p(&[2, 2])).unwrap();
        let y = act_elementary(1, 2, &x, &h).unwrap();
        assert_eq!(y.to_string(), "{(2,1): 1}");
        assert_eq!(y.box_h_form().unwrap().display_with("h").to_string(), "h1*h2");
        assert!(act_elementary(4, 2, &x, &h).is_err());
    }

    #[test]
    fn second_form_matches_first_small() {
        let h = HSequence::new(1);
        for m in 0..4 {
            let a = action_first_form(&p(&[m]), &h, 5).unwrap();
            let b = action_second_form(&p(&[m]), &h, 5, -5).unwrap();
            assert!(a.agrees_with(&b), "m = {m}");
            assert!(b.coeff(5, -5).is_ok());
        }
    }

    #[test]
    fn gamma_star_examples() {
        let h1 = HSequence::new(1);
        let x = SchurExpansion::basis(2, None, Partition::empty()).unwrap();
        let g = gamma_star(&x, &h1).unwrap();
        assert_eq!(g.coeff(0, 0).unwrap(), RingElement::one(1));
        assert_eq!(g.coeff(0, 1).unwrap(), -h1.h(1));
        assert_eq!(g.len(), 2);
        let h0 = HSequence::new(0);
        let y = SchurExpansion::basis(1, None, p(&[4])).unwrap();
        let g = gamma_star(&y, &h0).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g.coeff(0, -4).unwrap(), RingElement::one(0));
        let z = SchurExpansion::zero(0, None).unwrap();
        assert!(gamma_star(&z, &h0).is_err());
    }

    #[test]
    fn gamma_of_vacuum() {
        let h1 = HSequence::new(1);
        let one = SchurExpansion::basis(0, None, Partition::empty()).unwrap();
        let g = gamma(&one, &h1, 5, GammaVariant::Barred).unwrap();
        for j in 0..=5 {
            assert_eq!(g.coeff(j, 0).unwrap(), h1.h(j));
        }
    }

    #[test]
    fn matrix_json_and_bracket() {
        let a = GlMatrix::new(Some(4), [((1, 2), BigInt::from(3)), ((0, 0), BigInt::from(-1))]).unwrap();
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(
            s,
            r#"{"n":4,"entries":[{"i":0,"j":0,"a":"-1"},{"i":1,"j":2,"a":"3"}]}"#
        );
        assert_eq!(serde_json::from_str::<GlMatrix>(&s).unwrap(), a);
        assert!(GlMatrix::new(Some(2), [((2, 0), BigInt::from(1))]).is_err());
        let e12 = GlMatrix::elementary(None, 1, 2).unwrap();
        let e21 = GlMatrix::elementary(None, 2, 1).unwrap();
        let b = e12.bracket(&e21).unwrap();
        let expect = GlMatrix::new(None, [((1, 1), BigInt::from(1)), ((2, 2), BigInt::from(-1))]).unwrap();
        assert_eq!(b, expect);
    }

    #[test]
    fn identity_scales_by_r() {
        let h = HSequence::new(2);
        let x = SchurExpansion::basis(2, Some(4), p(&[2, 1])).unwrap();
        let y = act_matrix(&GlMatrix::identity(4), &x, &h).unwrap();
        assert_eq!(y, x.scale(&BigInt::from(2)));
        let z = act_matrix(&GlMatrix::zero(Some(4)), &x, &h).unwrap();
        assert!(z.is_zero());
    }
}
