//! Exact computation of the `gl_n(Z)`-module structure on the cohomology ring
//! `B_{r,n}` of the Grassmannian `G(r,n)`.
//!
//! The crate is organised bottom-up:
//!
//! - [`partitions`]: partitions indexing Schur classes and wedge monomials.
//! - [`exactpoly`]: sparse polynomials over `BigInt` in `e_1..e_r`, and
//!   truncated two-variable Laurent series ([`LaurentWindow`]).
//! - [`symfunc`]: complete homogeneous sequences, Schur determinants,
//!   straightening into the Schur basis and the projection `B_r -> B_{r,n}`.
//! - [`schubert_ops`]: the two closed-form generating functions for the action
//!   of the elementary matrices, the vertex operators and the finite-`n`
//!   action of integer matrices.
//! - [`fermion_oracle`]: a brute-force model of the exterior powers of the
//!   free module, used as ground truth.
//! - [`verify`]: the verification harness that cross-checks everything.

pub mod error;
pub mod exactpoly;
pub mod fermion_oracle;
pub mod partitions;
pub mod schubert_ops;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
pub use exactpoly::{LaurentWindow, RingElement, Window};
pub use fermion_oracle::{WedgeElement, WedgeSeries};
pub use partitions::Partition;
pub use schubert_ops::{GlMatrix, TwistedHSequence};
pub use symfunc::{HSequence, SchurExpansion};
