//! Exact decision procedures for balanced weighted simplicial complexes
//! and the divisor classes they induce on the moduli space of stable
//! rational curves with marked points.
//!
//! All arithmetic is exact: rationals of arbitrary precision or prime
//! fields. Every search has an explicit budget; exceeding it is an error,
//! never a silent wrong answer.

pub mod budget;
pub mod complex;
pub mod cox;
pub mod error;
pub mod field;
pub mod graphs;
pub mod hypertree;
pub mod json;
pub mod picard;
pub mod solver;

#[cfg(test)]
pub(crate) mod testutil;

pub use budget::Budget;
pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
