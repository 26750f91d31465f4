//! Exact arithmetic kernel: sparse integer polynomials in graded
//! indeterminates, determinants, and windowed two-variable Laurent series.

mod det;
mod poly;
mod window;

pub use det::{determinant, DetEntry};
pub use poly::{poly_arith, Monomial, PolyOp, RingElement};
pub use window::{unit, LaurentWindow, Window};
