//! Exact computer algebra for the invariants of O(2m+1, q), q = 2^s.
//!
//! Bottom-up: [`gf`] field arithmetic, [`ring`] sparse polynomials, [`steenrod`]
//! operations, [`xialg`] the abstract algebra generated by the xi's,
//! [`invariants`] the constructed tower, [`group`] the acting group and
//! [`relations`] the verification checks.

pub mod error;
pub mod gf;
pub mod group;
pub mod invariants;
pub mod relations;
pub mod ring;
pub mod steenrod;
pub mod xialg;

pub use error::{Error, Result};
