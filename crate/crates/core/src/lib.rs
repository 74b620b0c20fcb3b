//! Constacyclic codes of length `p^s n` over the chain ring
//! `F_{p^m} + uF_{p^m}` with `u^2 = 0`.
//!
//! The crate builds the complete list of `(alpha + u beta)`-constacyclic
//! codes from the factorization of `x^n - alpha0`, attaches generators,
//! sizes and duals, computes minimum distances through the residue code,
//! and ships an independent brute-force oracle for small instances.

pub mod chainring;
pub mod code;
pub mod distance;
pub mod error;
pub mod gf;
pub mod linalg;
pub mod oracle;
pub mod poly;
pub mod serial;

pub use error::{Error, Result};
