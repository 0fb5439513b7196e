//! Exact polars, prepolars and quasi-convex hulls.
//!
//! * [`angle`]: rational residues mod 1 and the closed arcs `T_m`.
//! * [`group`]: finite abelian groups, their characters, and exhaustive hulls.
//! * [`circleseq`]: standard representations along divisibility chains and
//!   hulls of `{0} ∪ {±1/b_n}` in the circle group, checked by truncation.
//! * [`classify`]: the 2G/3G finiteness criterion for bounded compact groups
//!   given symbolically.
//! * [`cli`]: the command-line front end.
//! * [`verify`]: seeded property suites run by `qconvex verify`.

pub mod angle;
pub mod circleseq;
pub mod classify;
pub mod cli;
pub mod error;
pub mod group;
pub mod verify;

pub use angle::{Angle, Rational, RoundingKind};
pub use error::{Error, Result};
pub use group::{Character, FiniteAbelianGroup, GroupElement, Homomorphism, Subgroup};
