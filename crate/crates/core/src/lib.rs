//! Exact computation with finitely presented associative algebras over the
//! purely transcendental fields `Q(t1, ..., tk)`.
//!
//! The crate is `no_std` (it needs `alloc`). Text formats and the command
//! line front end live in the companion `fpalg` crate.
//!
//! Layout:
//!
//! * [`scalars`]: the coefficient field, its affine/permutation automorphisms
//!   and a small prime-field type used by brute-force searches.
//! * [`freealg`]: words and noncommutative polynomials under deglex.
//! * [`presentation`]: presentations, semilinear twists and descent of the
//!   coefficients onto `Q(t1, ..., tr)`.
//! * [`rewrite`]: degree-truncated Groebner bases, normal forms, graded
//!   dimensions and the generation test.
//! * [`aalpha`]: the one-relator family `x1^2 + x2^2 + a*x1*x2` and its
//!   isomorphism classification.
//! * [`morita`]: matrix-unit presentations of `M_n(B)`, idempotents, fullness
//!   certificates and corner dimensions.
#![no_std]

extern crate alloc;
#[cfg(feature = "std")]
extern crate std;

pub mod aalpha;
pub mod error;
pub mod freealg;
pub mod linalg;
pub mod morita;
pub mod presentation;
pub mod rewrite;
pub mod scalars;

pub use error::{Error, Result};
pub use freealg::{NCPoly, Word};
pub use presentation::{FieldSpec, Presentation};
pub use scalars::{FieldAutomorphism, MPoly, Scalar};
