//! Diagonal and Hermitian hypersurfaces over finite fields.
//!
//! The crate computes, constructs and cross-verifies:
//!
//! - exact affine and projective solution counts of diagonal equations
//!   `x_1^d + ... + x_s^d = b` over `F_{q^k}`, `q = p^{2r}`, `d | p^r + 1`,
//!   both in closed form ([`counts`]) and by independent brute force
//!   ([`enumerate`]);
//! - factored zeta functions of diagonal hypersurfaces and their exact
//!   power-series expansions ([`zeta`]);
//! - the Hermitian point-set matrices `H_s`, built directly and by the
//!   block recursion, with recursion certificates ([`hermitian`]);
//! - projective evaluation codes on those point sets and their exact
//!   weight distributions ([`codes`]).
//!
//! Every closed form is adjudicated by a brute-force oracle; [`verify`]
//! bundles the full cross-check suites.

pub mod codes;
pub mod counts;
pub mod enumerate;
pub mod error;
pub mod field;
pub mod hermitian;
pub mod points;
pub mod series;
pub mod verify;
pub mod zeta;

pub use error::{Error, Result};
pub use field::{build_field, build_field_bounded, FieldCtx, FieldElement, FieldSpec};
