//! Exact coefficient rings and sparse matrix algebra.
//!
//! The universal coefficient ring of the whole crate is `Z[v, v^-1]` with the
//! convention `q = v^2`, so that the square-root scalars showing up in Euler
//! forms and Hecke coefficients stay polynomial.

mod laurent;
mod matrix;

pub use laurent::LaurentPoly;
pub use matrix::{MatError, SparseMat};

/// Exact rational scalar used for class functions and coend computations.
pub type Rational = num_rational::BigRational;
