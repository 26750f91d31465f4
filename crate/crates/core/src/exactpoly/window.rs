//! Truncated series in `z` and `w^{-1}` with ring-element coefficients.
//!
//! Every series carries an explicit [`Window`]:
//!
//! - `z_min` bounds the `z`-support from below (the series genuinely has no
//!   terms with a smaller `z` exponent), and coefficients are exact for every
//!   `z` exponent up to `z_max` (`None` = exact everywhere).
//! - Dually, `w_max` bounds the `w`-support from above, and coefficients are
//!   exact down to `w_min` (`None` = exact everywhere).
//!
//! Products shrink the exact region so that every coefficient inside the
//! advertised window only depends on exactly known coefficients of the
//! factors.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::RingElement;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Window {
    pub z_min: i64,
    pub z_max: Option<i64>,
    pub w_min: Option<i64>,
    pub w_max: i64,
}

fn min_opt(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

fn max_opt(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.max(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl Window {
    /// Exact everywhere, with the given support bounds.
    pub fn exact(z_min: i64, w_max: i64) -> Self {
        Window {
            z_min,
            z_max: None,
            w_min: None,
            w_max,
        }
    }

    pub fn new(z_min: i64, z_max: Option<i64>, w_min: Option<i64>, w_max: i64) -> Self {
        Window {
            z_min,
            z_max,
            w_min,
            w_max,
        }
    }

    /// Whether `(z, w)` is a position where the coefficient is known.
    pub fn certifies(&self, z: i64, w: i64) -> bool {
        self.z_max.is_none_or(|m| z <= m) && self.w_min.is_none_or(|m| w >= m)
    }

    /// Whether `(z, w)` is inside the support bounds and certified.
    pub fn contains(&self, z: i64, w: i64) -> bool {
        z >= self.z_min && w <= self.w_max && self.certifies(z, w)
    }

    fn is_empty(&self) -> bool {
        self.z_max.is_some_and(|m| m < self.z_min) || self.w_min.is_some_and(|m| m > self.w_max)
    }

    /// Window of a sum.
    pub fn join(&self, other: &Window) -> Window {
        Window {
            z_min: self.z_min.min(other.z_min),
            z_max: min_opt(self.z_max, other.z_max),
            w_min: max_opt(self.w_min, other.w_min),
            w_max: self.w_max.max(other.w_max),
        }
    }

    /// Window of a product: the largest region whose coefficients only
    /// involve certified coefficients of both factors.
    pub fn product(&self, other: &Window) -> Window {
        let z_max = min_opt(
            self.z_max.map(|m| m + other.z_min),
            other.z_max.map(|m| m + self.z_min),
        );
        let w_min = max_opt(
            self.w_min.map(|m| m + other.w_max),
            other.w_min.map(|m| m + self.w_max),
        );
        Window {
            z_min: self.z_min + other.z_min,
            z_max,
            w_min,
            w_max: self.w_max + other.w_max,
        }
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |o: Option<i64>, inf: &str| o.map(|v| v.to_string()).unwrap_or(inf.into());
        write!(
            f,
            "z in [{}, {}], w in [{}, {}]",
            self.z_min,
            show(self.z_max, "inf"),
            show(self.w_min, "-inf"),
            self.w_max
        )
    }
}

impl Serialize for Window {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (self.z_min, self.z_max, self.w_min, self.w_max).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Window {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (z_min, z_max, w_min, w_max) = <(i64, Option<i64>, Option<i64>, i64)>::deserialize(d)?;
        Ok(Window {
            z_min,
            z_max,
            w_min,
            w_max,
        })
    }
}

/// A finitely supported map `(z exponent, w exponent) -> RingElement`
/// together with the [`Window`] in which it agrees with the series it
/// represents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentWindow {
    arity: usize,
    window: Window,
    entries: BTreeMap<(i64, i64), RingElement>,
}

impl LaurentWindow {
    pub fn zero(arity: usize, window: Window) -> Self {
        LaurentWindow {
            arity,
            window,
            entries: BTreeMap::new(),
        }
    }

    /// An exactly known Laurent polynomial. Support bounds are taken from the
    /// entries (zero for the empty polynomial).
    pub fn polynomial<I>(arity: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = ((i64, i64), RingElement)>,
    {
        let mut map: BTreeMap<(i64, i64), RingElement> = BTreeMap::new();
        for (k, v) in entries {
            assert_eq!(v.arity(), arity, "coefficient arity");
            let slot = map.entry(k).or_insert_with(|| RingElement::zero(arity));
            *slot = &*slot + &v;
        }
        map.retain(|_, v| !v.is_zero());
        let z_min = map.keys().map(|k| k.0).min().unwrap_or(0);
        let w_max = map.keys().map(|k| k.1).max().unwrap_or(0);
        LaurentWindow {
            arity,
            window: Window::exact(z_min, w_max),
            entries: map,
        }
    }

    pub fn monomial(z: i64, w: i64, value: RingElement) -> Self {
        let arity = value.arity();
        Self::polynomial(arity, [((z, w), value)])
    }

    pub fn constant(value: RingElement) -> Self {
        Self::monomial(0, 0, value)
    }

    /// Builds a series with an explicit window; fails if an entry lies
    /// outside it.
    pub fn from_parts<I>(arity: usize, window: Window, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((i64, i64), RingElement)>,
    {
        let mut map = BTreeMap::new();
        for ((z, w), v) in entries {
            if v.arity() != arity {
                return Err(Error::arg("coefficient arity does not match series"));
            }
            if !window.contains(z, w) {
                return Err(Error::arg(format!(
                    "entry z^{z} w^{w} lies outside the window {window}"
                )));
            }
            if !v.is_zero() {
                map.insert((z, w), v);
            }
        }
        Ok(LaurentWindow {
            arity,
            window,
            entries: map,
        })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(i64, i64), &RingElement)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The coefficient of `z^z w^w`, or an error if the window cannot
    /// certify it.
    pub fn coeff(&self, z: i64, w: i64) -> Result<RingElement> {
        if z < self.window.z_min || w > self.window.w_max {
            return Ok(RingElement::zero(self.arity));
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
            .unwrap_or_else(|| RingElement::zero(self.arity)))
    }

    fn with_window(&self, window: Window) -> Result<LaurentWindow> {
        if window.is_empty() {
            return Err(Error::EmptyWindow(window.to_string()));
        }
        Ok(LaurentWindow {
            arity: self.arity,
            window,
            entries: self
                .entries
                .iter()
                .filter(|((z, w), _)| window.contains(*z, *w))
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        })
    }

    fn combine(&self, other: &LaurentWindow, sign: i32) -> LaurentWindow {
        assert_eq!(self.arity, other.arity, "arity mismatch");
        let window = self.window.join(&other.window);
        let mut map = BTreeMap::new();
        for (k, v) in &self.entries {
            if window.contains(k.0, k.1) {
                map.insert(*k, v.clone());
            }
        }
        for (k, v) in &other.entries {
            if !window.contains(k.0, k.1) {
                continue;
            }
            let slot = map
                .entry(*k)
                .or_insert_with(|| RingElement::zero(self.arity));
            *slot = if sign > 0 { &*slot + v } else { &*slot - v };
        }
        map.retain(|_, v: &mut RingElement| !v.is_zero());
        LaurentWindow {
            arity: self.arity,
            window,
            entries: map,
        }
    }

    pub fn add(&self, other: &LaurentWindow) -> LaurentWindow {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &LaurentWindow) -> LaurentWindow {
        self.combine(other, -1)
    }

    pub fn neg(&self) -> LaurentWindow {
        self.scale(&RingElement::constant(self.arity, -1))
    }

    /// Exact product inside [`Window::product`]; fails when that window is
    /// empty.
    pub fn mul(&self, other: &LaurentWindow) -> Result<LaurentWindow> {
        if self.arity != other.arity {
            return Err(Error::arg("arity mismatch in series product"));
        }
        let window = self.window.product(&other.window);
        if window.is_empty() {
            return Err(Error::EmptyWindow(window.to_string()));
        }
        let mut map: BTreeMap<(i64, i64), RingElement> = BTreeMap::new();
        for ((z1, w1), a) in &self.entries {
            for ((z2, w2), b) in &other.entries {
                let (z, w) = (z1 + z2, w1 + w2);
                if !window.contains(z, w) {
                    continue;
                }
                let slot = map
                    .entry((z, w))
                    .or_insert_with(|| RingElement::zero(self.arity));
                *slot = &*slot + &(a * b);
            }
        }
        map.retain(|_, v| !v.is_zero());
        Ok(LaurentWindow {
            arity: self.arity,
            window,
            entries: map,
        })
    }

    /// Whether the two series agree at every position both windows
    /// certify.
    pub fn agrees_with(&self, other: &LaurentWindow) -> bool {
        self.arity == other.arity
            && self
                .entries
                .keys()
                .chain(other.entries.keys())
                .filter(|(z, w)| self.window.certifies(*z, *w) && other.window.certifies(*z, *w))
                .all(|&(z, w)| self.coeff(z, w).ok() == other.coeff(z, w).ok())
    }

    /// Multiplies every coefficient by a ring element.
    pub fn scale(&self, c: &RingElement) -> LaurentWindow {
        let mut out = self.clone();
        out.entries = self
            .entries
            .iter()
            .map(|(k, v)| (*k, v * c))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        out
    }

    /// Multiplication by the monomial `z^dz w^dw`.
    pub fn shift(&self, dz: i64, dw: i64) -> LaurentWindow {
        let w = self.window;
        LaurentWindow {
            arity: self.arity,
            window: Window {
                z_min: w.z_min + dz,
                z_max: w.z_max.map(|m| m + dz),
                w_min: w.w_min.map(|m| m + dw),
                w_max: w.w_max + dw,
            },
            entries: self
                .entries
                .iter()
                .map(|((z, ww), v)| ((z + dz, ww + dw), v.clone()))
                .collect(),
        }
    }

    /// Shrinks the certified region to `z <= z_max` and `w >= w_min`.
    pub fn truncate(&self, z_max: Option<i64>, w_min: Option<i64>) -> Result<LaurentWindow> {
        let mut window = self.window;
        window.z_max = min_opt(window.z_max, z_max);
        window.w_min = max_opt(window.w_min, w_min);
        self.with_window(window)
    }

    /// Applies `f` to every coefficient, producing a series over a ring of
    /// arity `arity`.
    pub fn map_values<F>(&self, arity: usize, mut f: F) -> Result<LaurentWindow>
    where
        F: FnMut(&RingElement) -> Result<RingElement>,
    {
        let mut entries = BTreeMap::new();
        for (k, v) in &self.entries {
            let image = f(v)?;
            if image.arity() != arity {
                return Err(Error::arg("mapped coefficient has the wrong arity"));
            }
            if !image.is_zero() {
                entries.insert(*k, image);
            }
        }
        Ok(LaurentWindow {
            arity,
            window: self.window,
            entries,
        })
    }

    /// Inverse of a series in `z` alone with constant term 1, certified for
    /// `z <= z_max`.
    pub fn geometric_inverse(&self, z_max: i64) -> Result<LaurentWindow> {
        if self.entries.keys().any(|&(z, w)| w != 0 || z < 0) {
            return Err(Error::NotInvertible(
                "only power series in z alone are inverted".into(),
            ));
        }
        if !self.coeff(0, 0)?.is_one() {
            return Err(Error::NotInvertible("constant term is not 1".into()));
        }
        if !self.window.certifies(z_max, 0) {
            return Err(Error::OutsideWindow {
                z: z_max,
                w: 0,
                window: self.window.to_string(),
            });
        }
        let a = self.arity;
        let coeffs: Vec<RingElement> = (0..=z_max)
            .map(|k| self.coeff(k, 0))
            .collect::<Result<_>>()?;
        let mut inv: Vec<RingElement> = vec![RingElement::one(a)];
        for k in 1..=z_max as usize {
            let mut acc = RingElement::zero(a);
            for i in 1..=k {
                if !coeffs[i].is_zero() && !inv[k - i].is_zero() {
                    acc = acc - &coeffs[i] * &inv[k - i];
                }
            }
            inv.push(acc);
        }
        LaurentWindow::from_parts(
            a,
            Window::new(0, Some(z_max), None, 0),
            inv.into_iter()
                .enumerate()
                .map(|(k, v)| ((k as i64, 0), v)),
        )
    }

    /// The geometric series `sum_{k=0..=order} (z/w)^k`, certified for
    /// `z <= order` and `w >= -order`. This is the expansion of `w/(w-z)` in
    /// ascending powers of `z/w`.
    pub fn geometric_zw(arity: usize, order: i64) -> LaurentWindow {
        LaurentWindow {
            arity,
            window: Window::new(0, Some(order), Some(-order), 0),
            entries: (0..=order)
                .map(|k| ((k, -k), RingElement::one(arity)))
                .collect(),
        }
    }

    pub fn to_latex(&self, symbol: &str) -> String {
        if self.entries.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for ((z, w), v) in &self.entries {
            let mut mono = String::new();
            if *z != 0 {
                mono.push_str(&format!(" z^{{{z}}}"));
            }
            if *w != 0 {
                mono.push_str(&format!(" w^{{{w}}}"));
            }
            if mono.is_empty() {
                parts.push(format!("\\left({}\\right)", v.to_latex(symbol)));
            } else {
                parts.push(format!("\\left({}\\right){mono}", v.to_latex(symbol)));
            }
        }
        parts.join(" + ")
    }
}

impl fmt::Display for LaurentWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        for (k, ((z, w), v)) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({v})*z^{z}*w^{w}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    z: i64,
    w: i64,
    value: RingElement,
}

#[derive(Serialize, Deserialize)]
struct LaurentJson {
    arity: usize,
    window: Window,
    entries: Vec<EntryJson>,
}

impl Serialize for LaurentWindow {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        LaurentJson {
            arity: self.arity,
            window: self.window,
            entries: self
                .entries
                .iter()
                .map(|(&(z, w), v)| EntryJson {
                    z,
                    w,
                    value: v.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentWindow {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = LaurentJson::deserialize(d)?;
        let entries = j
            .entries
            .into_iter()
            .map(|e| Ok(((e.z, e.w), e.value.with_arity(j.arity)?)))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        LaurentWindow::from_parts(j.arity, j.window, entries).map_err(D::Error::custom)
    }
}

/// The constant series 1.
pub fn unit(arity: usize) -> LaurentWindow {
    LaurentWindow::constant(RingElement::constant(arity, BigInt::one()))
}
