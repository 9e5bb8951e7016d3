//! The coefficient field `Q(t1, ..., tk)`, its supported automorphisms, and
//! the prime fields used by exhaustive searches.

mod automorphism;
mod fp;
mod mpoly;
mod scalar;

pub use automorphism::{AffineImage, FieldAutomorphism};
pub use fp::PrimeField;
pub use mpoly::{gcd, AffineSubst, MPoly, Monomial};
pub use scalar::Scalar;
