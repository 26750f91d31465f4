use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{leading_exps, monomial_partition, HSequence};
use crate::error::{Error, Result};
use crate::exactpoly::{determinant, LaurentWindow, RingElement};
use crate::partitions::Partition;

/// An element `sum c_λ Δ_λ(H_r)` of `B_r`, or of `B_{r,n}` when a box bound
/// `n` is attached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurExpansion {
    r: usize,
    n: Option<usize>,
    coeffs: BTreeMap<Partition, BigInt>,
}

impl SchurExpansion {
    pub fn zero(r: usize, n: Option<usize>) -> Result<Self> {
        if let Some(n) = n {
            if n < r {
                return Err(Error::arg(format!("box bound n = {n} is smaller than r = {r}")));
            }
        }
        Ok(SchurExpansion {
            r,
            n,
            coeffs: BTreeMap::new(),
        })
    }

    /// The single basis element `Δ_λ`.
    pub fn basis(r: usize, n: Option<usize>, lambda: Partition) -> Result<Self> {
        Self::from_terms(r, n, [(lambda, BigInt::from(1))])
    }

    pub fn from_terms<I>(r: usize, n: Option<usize>, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, BigInt)>,
    {
        let mut out = Self::zero(r, n)?;
        for (lambda, c) in terms {
            out.check(&lambda)?;
            out.add_term(lambda, c);
        }
        Ok(out)
    }

    fn check(&self, lambda: &Partition) -> Result<()> {
        if lambda.length() > self.r {
            return Err(Error::arg(format!("{lambda} has more than r = {} parts", self.r)));
        }
        if let Some(n) = self.n {
            if lambda.first() > n - self.r {
                return Err(Error::arg(format!(
                    "{lambda} does not fit the {} x {} box",
                    self.r,
                    n - self.r
                )));
            }
        }
        Ok(())
    }

    fn add_term(&mut self, lambda: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(lambda.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&lambda);
        }
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn bound(&self) -> Option<usize> {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    /// Terms in the canonical partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.coeffs.iter()
    }

    fn same_space(&self, other: &SchurExpansion) -> Result<()> {
        if self.r != other.r || self.n != other.n {
            return Err(Error::arg("expansions live in different rings"));
        }
        Ok(())
    }

    pub fn add(&self, other: &SchurExpansion) -> Result<SchurExpansion> {
        self.same_space(other)?;
        let mut out = self.clone();
        for (l, c) in &other.coeffs {
            out.add_term(l.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SchurExpansion) -> Result<SchurExpansion> {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> SchurExpansion {
        let mut out = SchurExpansion {
            r: self.r,
            n: self.n,
            coeffs: BTreeMap::new(),
        };
        for (l, v) in &self.coeffs {
            out.add_term(l.clone(), v * c);
        }
        out
    }

    /// Every term has weight `d` (vacuously true for zero).
    pub fn is_homogeneous_of(&self, d: usize) -> bool {
        self.coeffs.keys().all(|l| l.weight() == d)
    }

    /// The element of `B_r` represented, `sum c_λ Δ_λ(H_r)`. For a boxed
    /// expansion this is the canonical lift through the box basis.
    pub fn to_ring(&self, h: &HSequence) -> Result<RingElement> {
        if h.rank() != self.r {
            return Err(Error::arg("HSequence rank does not match the expansion"));
        }
        let mut acc = RingElement::zero(self.r);
        for (l, c) in &self.coeffs {
            acc = acc + h.schur(l)?.scale(c);
        }
        Ok(acc)
    }

    /// The representative in `h_1..h_{n-r}` obtained by expanding each
    /// `Δ_λ(H_{r,n})` with `h_j = 0` for `j > n - r`. Variable `k` of the
    /// result stands for `h_k`.
    pub fn box_h_form(&self) -> Result<RingElement> {
        let n = self
            .n
            .ok_or_else(|| Error::arg("h-form representatives need a box bound"))?;
        let c = n - self.r;
        let hvar = |j: i64| -> RingElement {
            match j {
                0 => RingElement::one(c),
                j if j < 0 || j as usize > c => RingElement::zero(c),
                j => RingElement::generator(c, j as usize),
            }
        };
        let mut acc = RingElement::zero(c);
        for (l, coeff) in &self.coeffs {
            let parts = l.padded(self.r);
            let r = self.r as i64;
            let m: Vec<Vec<RingElement>> = (1..=r)
                .map(|i| (1..=r).map(|j| hvar(parts[j as usize - 1] as i64 - j + i)).collect())
                .collect();
            acc = acc + determinant(&m, &RingElement::one(c)).scale(coeff);
        }
        Ok(acc)
    }

    /// [`Self::box_h_form`] rewritten in `e_1..e_r` by substituting the
    /// `h_j` of `B_r`.
    pub fn box_e_form(&self, h: &HSequence) -> Result<RingElement> {
        let hf = self.box_h_form()?;
        let c = hf.arity();
        let values: Vec<RingElement> = (1..=c as i64).map(|j| h.h(j)).collect();
        Ok(hf.eval(self.r, &values))
    }

    pub fn to_latex(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let ring = match self.n {
            Some(n) => format!("H_{{{},{}}}", self.r, n),
            None => format!("H_{{{}}}", self.r),
        };
        let mut out = String::new();
        for (k, (l, c)) in self.coeffs.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if k > 0 {
                out.push_str(&format!(" {sign} "));
            } else if c.is_negative() {
                out.push('-');
            }
            let abs = c.abs();
            if abs != BigInt::from(1) {
                out.push_str(&abs.to_string());
            }
            let label = if l.is_empty() { "0".to_string() } else { l.to_string() };
            out.push_str(&format!("\\Delta_{{{label}}}({ring})"));
        }
        out
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (l, c)) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            let label = if l.is_empty() { "()".to_string() } else { l.to_string() };
            write!(f, "{label}: {c}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: Partition,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct ExpansionJson {
    r: usize,
    n: Option<usize>,
    terms: Vec<TermJson>,
}

impl Serialize for SchurExpansion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ExpansionJson {
            r: self.r,
            n: self.n,
            terms: self
                .coeffs
                .iter()
                .map(|(l, c)| TermJson {
                    partition: l.clone(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SchurExpansion {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = ExpansionJson::deserialize(d)?;
        let mut terms = Vec::new();
        for t in j.terms {
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| D::Error::custom(format!("bad coefficient {:?}", t.coeff)))?;
            terms.push((t.partition, c));
        }
        SchurExpansion::from_terms(j.r, j.n, terms).map_err(D::Error::custom)
    }
}

/// Writes `p` in the Schur basis of `B_r`.
///
/// Works degree by degree. In each degree the matrix expressing the `Δ_λ`
/// in `e`-monomials is unitriangular once monomials `e_μ` are ordered
/// lexicographically by `μ`: the smallest monomial of `Δ_λ` is `e_{λ'}` with
/// coefficient 1. Back-substitution therefore repeatedly peels off the
/// smallest remaining monomial.
pub fn straighten(p: &RingElement, h: &HSequence) -> Result<SchurExpansion> {
    let r = h.rank();
    if p.arity() != r {
        return Err(Error::arg(format!(
            "element has arity {}, expected r = {r}",
            p.arity()
        )));
    }
    let mut out = SchurExpansion::zero(r, None)?;
    for d in p.degrees() {
        let mut rest = p.homogeneous_component(d);
        while !rest.is_zero() {
            let (exps, c) = rest
                .terms()
                .map(|(m, c)| (m.exps().to_vec(), c.clone()))
                .min_by(|a, b| monomial_partition(&a.0).cmp(&monomial_partition(&b.0)))
                .expect("nonzero");
            // λ_k = a_k + a_{k+1} + .. + a_r
            let mut parts = vec![0usize; r];
            let mut acc = 0usize;
            for k in (0..r).rev() {
                acc += exps[k] as usize;
                parts[k] = acc;
            }
            let lambda = Partition::new(parts).expect("suffix sums are decreasing");
            debug_assert_eq!(leading_exps(&lambda, r), exps);
            rest = rest - h.schur(&lambda)?.scale(&c);
            out.add_term(lambda, c);
        }
    }
    Ok(out)
}

/// The projection `π_{r,n}: B_r -> B_{r,n}`, which in the Schur basis drops
/// every `λ` with `λ_1 > n - r`.
pub fn project(x: &SchurExpansion, n: usize) -> Result<SchurExpansion> {
    if n < x.r {
        return Err(Error::arg(format!("n = {n} is smaller than r = {}", x.r)));
    }
    if let Some(m) = x.n {
        if m < n {
            return Err(Error::arg(format!(
                "cannot project an element of B_{{{},{m}}} to n = {n}",
                x.r
            )));
        }
    }
    let c = n - x.r;
    Ok(SchurExpansion {
        r: x.r,
        n: Some(n),
        coeffs: x
            .coeffs
            .iter()
            .filter(|(l, _)| l.first() <= c)
            .map(|(l, v)| (l.clone(), v.clone()))
            .collect(),
    })
}

/// Applies `π_{r,n}` coefficientwise to a series over `B_r`. Coefficients of
/// the result are the `e`-forms of [`SchurExpansion::box_h_form`], and the
/// window is cut down to exponents of absolute value below `n`.
pub fn project_series(x: &LaurentWindow, n: usize, h: &HSequence) -> Result<LaurentWindow> {
    let r = h.rank();
    if n < r {
        return Err(Error::arg(format!("n = {n} is smaller than r = {r}")));
    }
    let mapped = x.map_values(r, |v| {
        let s = project(&straighten(v, h)?, n)?;
        s.box_e_form(h)
    })?;
    let reach = n as i64 - 1;
    mapped.truncate(Some(reach), Some(-reach))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_box;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn sx(r: usize, n: Option<usize>, terms: &[(&[usize], i64)]) -> SchurExpansion {
        SchurExpansion::from_terms(r, n, terms.iter().map(|(l, c)| (p(l), BigInt::from(*c)))).unwrap()
    }

    #[test]
    fn straighten_examples() {
        let h = HSequence::new(2);
        assert_eq!(straighten(&h.e(2), &h).unwrap(), sx(2, None, &[(&[1, 1], 1)]));
        assert!(straighten(&RingElement::zero(2), &h).unwrap().is_zero());
        let e1sq = &h.e(1) * &h.e(1);
        assert_eq!(
            straighten(&e1sq, &h).unwrap(),
            sx(2, None, &[(&[2], 1), (&[1, 1], 1)])
        );
        // independent check: h2 + Δ_(1,1) expands back to e1^2
        assert_eq!(&h.h(2) + &h.schur(&p(&[1, 1])).unwrap(), e1sq);
        assert!(straighten(&RingElement::zero(3), &h).is_err());
    }

    #[test]
    fn straighten_round_trip_on_boxes() {
        for r in 1..=4 {
            let h = HSequence::new(r);
            for lam in enumerate_box(r, 4, None) {
                let d = h.schur(&lam).unwrap();
                let s = straighten(&d, &h).unwrap();
                assert_eq!(s, SchurExpansion::basis(r, None, lam.clone()).unwrap());
                assert_eq!(s.to_ring(&h).unwrap(), d);
            }
        }
    }

    #[test]
    fn straighten_inhomogeneous() {
        let h = HSequence::new(3);
        let p = &(&h.e(3) * &h.e(1)) + &RingElement::constant(3, 7);
        let s = straighten(&p, &h).unwrap();
        assert_eq!(s.to_ring(&h).unwrap(), p);
        assert_eq!(s.coeff(&Partition::empty()), BigInt::from(7));
    }

    #[test]
    fn project_examples() {
        let x = sx(2, None, &[(&[3, 1], 1)]);
        assert!(project(&x, 4).unwrap().is_zero());
        let x = sx(2, None, &[(&[2, 2], 1)]);
        assert_eq!(project(&x, 4).unwrap(), sx(2, Some(4), &[(&[2, 2], 1)]));
        let x = sx(2, None, &[(&[2, 1], 5), (&[3], -2)]);
        assert_eq!(project(&x, 4).unwrap(), sx(2, Some(4), &[(&[2, 1], 5)]));
        assert!(project(&x, 1).is_err());
        let boxed = sx(2, Some(4), &[(&[1], 1)]);
        assert!(project(&boxed, 5).is_err());
        assert_eq!(project(&boxed, 4).unwrap(), boxed);
    }

    #[test]
    fn boxed_terms_are_validated() {
        assert!(SchurExpansion::from_terms(2, Some(4), [(p(&[3]), BigInt::from(1))]).is_err());
        assert!(SchurExpansion::from_terms(2, None, [(p(&[1, 1, 1]), BigInt::from(1))]).is_err());
        assert!(SchurExpansion::zero(3, Some(2)).is_err());
    }

    #[test]
    fn h_form_of_box_representatives() {
        let h = HSequence::new(2);
        // Δ_(2,1)(H_{2,4}) = h1 h2 - h3 = h1 h2 in B_{2,4}
        let x = sx(2, Some(4), &[(&[2, 1], 1)]);
        assert_eq!(x.box_h_form().unwrap().display_with("h").to_string(), "h1*h2");
        assert_eq!(x.box_e_form(&h).unwrap().to_string(), "e1^3 - e1*e2");
        // every box representative straightens and projects back to itself
        for n in 2..=5 {
            for lam in enumerate_box(2, n - 2, None) {
                let b = SchurExpansion::basis(2, Some(n), lam).unwrap();
                let back = project(&straighten(&b.box_e_form(&h).unwrap(), &h).unwrap(), n).unwrap();
                assert_eq!(back, b);
            }
        }
    }

    #[test]
    fn vanishing_in_b24() {
        // h1 h3 - h4 is zero in B_{2,4}
        let h = HSequence::new(2);
        let v = &(&h.h(1) * &h.h(3)) - &h.h(4);
        assert!(project(&straighten(&v, &h).unwrap(), 4).unwrap().is_zero());
    }

    #[test]
    fn project_series_kills_h3_terms() {
        let h = HSequence::new(2);
        let v = &(&h.h(1) * &h.h(3)) - &h.h(4);
        let s = LaurentWindow::polynomial(2, [((4, -2), v), ((1, -2), h.h(1) * h.h(2))]);
        let out = project_series(&s, 4, &h).unwrap();
        assert_eq!(out.window().z_max, Some(3));
        assert!(out.coeff(4, -2).is_err());
        assert_eq!(out.coeff(1, -2).unwrap().to_string(), "e1^3 - e1*e2");
        let zero = LaurentWindow::polynomial(2, []);
        assert!(project_series(&zero, 4, &h).unwrap().is_zero());
    }

    #[test]
    fn display_and_json() {
        let x = sx(2, Some(4), &[(&[2, 1], 1), (&[], -3)]);
        assert_eq!(x.to_string(), "{(): -3, (2,1): 1}");
        assert_eq!(x.to_latex(), "-3\\Delta_{0}(H_{2,4}) + \\Delta_{(2,1)}(H_{2,4})");
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(
            s,
            r#"{"r":2,"n":4,"terms":[{"partition":[],"coeff":"-3"},{"partition":[2,1],"coeff":"1"}]}"#
        );
        let back: SchurExpansion = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
    }
}
