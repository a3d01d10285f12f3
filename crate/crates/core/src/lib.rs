//! Certified enclosures and closed-form bounds for the Hong–Loewy numbers
//! `c_n`: the smallest eigenvalue of `X Xᵀ` over all nonsingular lower
//! triangular (0,1)-matrices `X` of size `n`.
//!
//! The spectral identity `c_n = ‖Z_n‖₂⁻¹` reduces the problem to the largest
//! root of the characteristic polynomial of a Fibonacci-structured integer
//! matrix `Z_n`. Everything here is exact or outward-rounded: integer
//! matrices, integer characteristic polynomials, Sturm-certified root
//! enclosures, and arbitrary-precision interval evaluation of the published
//! closed-form bounds, so every inequality the crate reports is certified.

pub mod bounds;
pub mod cache;
pub mod charpoly;
pub mod error;
pub mod fib;
pub mod interval;
pub mod lattice;
pub mod matrix;
pub mod oracle;
pub mod poly;
pub mod report;
pub mod roots;
pub mod sturm;

pub use error::{Error, Result};
