//! Exact-arithmetic invariants of graded modules over current algebras.
//!
//! The crate computes dimensions, graded characters, Demazure flags, and
//! related combinatorial data for truncated Weyl modules, Chari-Venkatesh
//! modules, and Demazure modules, with an independent fusion-product
//! construction used to cross-check the closed-form results.
//!
//! Everything is exact: dimensions and multiplicities are arbitrary-precision
//! integers, graded data lives in Laurent polynomials over the integers.
//! There is no floating point anywhere in the crate.

pub mod charring;
pub mod checks;
pub mod cvengine;
pub mod error;
pub mod fusion;
pub mod laurent;
pub mod partitions;
pub mod poset;
pub mod rootsys;

pub use error::{Error, Result};

/// Re-exported so downstream crates can name multiplicities and dimensions
/// without depending on num-bigint directly.
pub use num_bigint::BigInt;
