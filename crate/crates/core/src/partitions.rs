//! Integer partitions.
//!
//! A [`Partition`] is stored with trailing zeros trimmed, so structural
//! equality is partition equality. The total order on partitions is
//! "weight first, then reverse lexicographic", which is also the order in
//! which [`enumerate_box`] yields them.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition, rejecting sequences that are not weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::arg(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `k`-th part, 1-based, with absent parts read as zero.
    pub fn part(&self, k: usize) -> usize {
        if k == 0 {
            return 0;
        }
        self.parts.get(k - 1).copied().unwrap_or(0)
    }

    /// The largest part (zero for the empty partition).
    pub fn first(&self) -> usize {
        self.part(1)
    }

    /// The parts padded with zeros to exactly `len` entries.
    ///
    /// Panics if the partition has more than `len` nonzero parts.
    pub fn padded(&self, len: usize) -> Vec<usize> {
        assert!(self.length() <= len, "{self} has more than {len} parts");
        let mut v = self.parts.clone();
        v.resize(len, 0);
        v
    }

    /// The partition obtained by deleting the `i`-th part (1-based).
    ///
    /// Indices beyond the length delete a zero part and leave the partition
    /// unchanged.
    pub fn remove_part(&self, i: usize) -> Result<Self> {
        if i == 0 {
            return Err(Error::arg("part index must be at least 1"));
        }
        let mut parts = self.parts.clone();
        if i <= parts.len() {
            parts.remove(i - 1);
        }
        Ok(Partition { parts })
    }

    /// The partwise sum `self + (1^j)`.
    pub fn add_ones(&self, j: usize) -> Result<Self> {
        if self.length() > j {
            return Err(Error::arg(format!(
                "{self} has {} parts, cannot add (1^{j}) partwise",
                self.length()
            )));
        }
        let mut parts = self.padded(j);
        parts.iter_mut().for_each(|p| *p += 1);
        Ok(Partition { parts })
    }

    /// Conjugate (transposed Young diagram).
    pub fn conjugate(&self) -> Self {
        let parts = (1..=self.first())
            .map(|k| self.parts.iter().filter(|&&p| p >= k).count())
            .collect();
        Partition { parts }
    }

    pub fn fits_box(&self, rows: usize, cols: usize) -> bool {
        self.length() <= rows && self.first() <= cols
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `2,2`, `(2,2)`, `0`, `()` and the empty string.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(t)
            .trim();
        if t.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for (k, piece) in t.split(',').enumerate() {
            let piece = piece.trim();
            let v = piece
                .parse::<usize>()
                .map_err(|_| Error::parse(k, format!("bad partition part {piece:?}")))?;
            parts.push(v);
        }
        Partition::new(parts).map_err(|e| Error::parse(0, e.to_string()))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// All partitions with at most `rows` parts and largest part at most `cols`,
/// optionally restricted to one weight. Ordered by weight, then reverse
/// lexicographically.
pub fn enumerate_box(rows: usize, cols: usize, degree: Option<usize>) -> Vec<Partition> {
    let max_deg = rows * cols;
    let degrees: Vec<usize> = match degree {
        Some(d) if d > max_deg => return Vec::new(),
        Some(d) => vec![d],
        None => (0..=max_deg).collect(),
    };
    let mut out = Vec::new();
    for d in degrees {
        let mut prefix = Vec::new();
        fill(d, rows, cols, &mut prefix, &mut out);
    }
    out
}

/// Partitions of `d` into at most `rows` parts, none exceeding `cap`, in
/// reverse lexicographic order.
fn fill(d: usize, rows: usize, cap: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if d == 0 {
        out.push(Partition {
            parts: prefix.clone(),
        });
        return;
    }
    if rows == 0 {
        return;
    }
    for p in (1..=cap.min(d)).rev() {
        // remaining rows must be able to absorb the rest
        if p * rows < d {
            break;
        }
        prefix.push(p);
        fill(d - p, rows - 1, p, prefix, out);
        prefix.pop();
    }
}

/// Partitions of `d` with at most `rows` parts and no bound on the parts.
pub fn partitions_of(d: usize, rows: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    fill(d, rows, d, &mut Vec::new(), &mut out);
    out
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn remove_part_examples() {
        assert_eq!(p(&[2, 2]).remove_part(1).unwrap(), p(&[2]));
        assert_eq!(p(&[3, 1]).remove_part(2).unwrap(), p(&[3]));
        assert_eq!(p(&[5, 3, 3, 1]).remove_part(3).unwrap(), p(&[5, 3, 1]));
        assert_eq!(p(&[1]).remove_part(2).unwrap(), p(&[1]));
        assert!(p(&[1]).remove_part(0).is_err());
    }

    #[test]
    fn add_ones_examples() {
        assert_eq!(p(&[2, 1]).add_ones(2).unwrap(), p(&[3, 2]));
        assert_eq!(Partition::empty().add_ones(3).unwrap(), p(&[1, 1, 1]));
        assert_eq!(p(&[4, 4]).add_ones(4).unwrap(), p(&[5, 5, 1, 1]));
        assert!(p(&[1, 1, 1]).add_ones(2).is_err());
    }

    #[test]
    fn rejects_increasing() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(p(&[2, 0, 0]), p(&[2]));
    }

    #[test]
    fn box_two_by_two() {
        let all = enumerate_box(2, 2, None);
        let expect = vec![
            p(&[]),
            p(&[1]),
            p(&[2]),
            p(&[1, 1]),
            p(&[2, 1]),
            p(&[2, 2]),
        ];
        assert_eq!(all, expect);
        assert_eq!(enumerate_box(2, 2, Some(2)), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(enumerate_box(0, 5, None), vec![Partition::empty()]);
        assert_eq!(enumerate_box(3, 0, None), vec![Partition::empty()]);
    }

    /// Brute force: every weakly decreasing tuple in [0,c]^r.
    fn brute_box(r: usize, c: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let total = (c + 1).pow(r as u32);
        for code in 0..total {
            let mut x = code;
            let mut parts = Vec::new();
            for _ in 0..r {
                parts.push(x % (c + 1));
                x /= c + 1;
            }
            if let Ok(q) = Partition::new(parts) {
                out.push(q);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn box_matches_brute_force_and_binomial() {
        for r in 0..=4 {
            for c in 0..=4 {
                let got = enumerate_box(r, c, None);
                assert_eq!(got, brute_box(r, c), "r={r} c={c}");
                assert_eq!(got.len(), binomial(r + c, r));
                assert!(got.windows(2).all(|w| w[0] < w[1]));
                for lam in &got {
                    for i in 1..=r.max(1) {
                        let m = lam.remove_part(i).unwrap();
                        assert!(m.fits_box(r.saturating_sub(1), c));
                    }
                    if lam.length() <= r {
                        assert_eq!(lam.add_ones(r).unwrap().weight(), lam.weight() + r);
                    }
                }
            }
        }
    }

    #[test]
    fn text_and_json_forms() {
        assert_eq!(Partition::empty().to_string(), "0");
        assert_eq!(p(&[2, 2]).to_string(), "(2,2)");
        assert_eq!("2,2".parse::<Partition>().unwrap(), p(&[2, 2]));
        assert_eq!("(3,1)".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("0".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,x".parse::<Partition>().is_err());
        assert_eq!(serde_json::to_string(&p(&[2, 2])).unwrap(), "[2,2]");
        assert_eq!(serde_json::to_string(&Partition::empty()).unwrap(), "[]");
        let back: Partition = serde_json::from_str("[3,1,0]").unwrap();
        assert_eq!(back, p(&[3, 1]));
    }

    #[test]
    fn conjugate_involution() {
        for lam in enumerate_box(4, 4, None) {
            assert_eq!(lam.conjugate().conjugate(), lam);
            assert_eq!(lam.conjugate().weight(), lam.weight());
        }
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    }
}
