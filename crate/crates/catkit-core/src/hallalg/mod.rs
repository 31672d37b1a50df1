//! Gaussian binomials and subspace enumeration over small finite fields,
//! the twisted Hall algebra of finite F_q-vector spaces, and Green's
//! class-function convolution on small GL_n(F_q) by brute force.

mod fq;
mod glconj;
mod green;
mod hall;
mod subspace;

pub use fq::{FqField, FqMat, HallError};
pub use glconj::{gl_order, GlClassTable};
pub use green::{green_convolution, GlClassFunction};
pub use hall::{gaussian_binomial, gaussian_binomial_count, hall_product, HallElement};
pub use subspace::{direct_sum_pairs, enumerate_subspaces, DirectSumPair, Subspace};
