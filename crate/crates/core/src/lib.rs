//! Exact computations around Matsuo algebras of 3-transposition groups.
//!
//! - [`permgroups`]: permutation groups, conjugation-closed involution sets and
//!   their non-commuting graphs, type `A` root systems.
//! - [`matsuo`]: the algebras `B_{α,β}(G, I)`, their forms, radicals,
//!   conformal vectors and central charges.
//! - [`virasoro`]: unitary-series central charges, highest weights and fusion.
//! - [`zhu`]: the quotient `T_{n+1}` of the group algebra of `S_{n+1}`.
//! - [`coeffs`]: triangular exponential systems and the word-polynomial
//!   recursion for Ising highest-weight vectors.
//!
//! All arithmetic is exact; see [`Rational`].

pub mod coeffs;
pub mod error;
pub mod linalg;
pub mod matsuo;
pub mod permgroups;
pub mod rational;
pub mod verify;
pub mod virasoro;
pub mod zhu;

pub use error::{Error, Result};
pub use rational::Rational;
