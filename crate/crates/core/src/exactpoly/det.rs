use super::poly::RingElement;
use super::window::LaurentWindow;

/// Entries of a square matrix whose determinant we expand.
pub trait DetEntry: Clone {
    fn is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
}

impl DetEntry for RingElement {
    fn is_zero(&self) -> bool {
        RingElement::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        RingElement::zero(self.arity())
    }
    fn one_like(&self) -> Self {
        RingElement::one(self.arity())
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

/// Only exactly known Laurent polynomials are expected as entries; products
/// of those never lose their window.
impl DetEntry for LaurentWindow {
    fn is_zero(&self) -> bool {
        LaurentWindow::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        LaurentWindow::polynomial(self.arity(), [])
    }
    fn one_like(&self) -> Self {
        LaurentWindow::constant(RingElement::one(self.arity()))
    }
    fn add(&self, other: &Self) -> Self {
        LaurentWindow::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        LaurentWindow::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        LaurentWindow::mul(self, other).expect("determinant entries must be exact")
    }
}

/// Laplace expansion along the first row, skipping zero entries.
///
/// `one` is returned for the empty matrix.
pub fn determinant<T: DetEntry>(m: &[Vec<T>], one: &T) -> T {
    let n = m.len();
    if n == 0 {
        return one.clone();
    }
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    let cols: Vec<usize> = (0..n).collect();
    expand(m, 0, &cols, one)
}

fn expand<T: DetEntry>(m: &[Vec<T>], row: usize, cols: &[usize], one: &T) -> T {
    if cols.is_empty() {
        return one.clone();
    }
    if cols.len() == 1 {
        return m[row][cols[0]].clone();
    }
    let mut acc = one.zero_like();
    for (k, &c) in cols.iter().enumerate() {
        let entry = &m[row][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = expand(m, row + 1, &rest, one);
        if minor.is_zero() {
            continue;
        }
        let term = entry.mul(&minor);
        acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: i64) -> RingElement {
        RingElement::constant(0, v)
    }

    #[test]
    fn integer_determinants() {
        let one = c(1);
        assert_eq!(determinant::<RingElement>(&[], &one), one);
        let m = vec![vec![c(2), c(3)], vec![c(5), c(7)]];
        assert_eq!(determinant(&m, &one), c(-1));
        let m = vec![
            vec![c(1), c(2), c(3)],
            vec![c(0), c(4), c(5)],
            vec![c(1), c(0), c(6)],
        ];
        assert_eq!(determinant(&m, &one), c(22));
    }
}
