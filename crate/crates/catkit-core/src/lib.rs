//! Exact-arithmetic toolkit for braided monoidal algebra.
//!
//! Everything is computed over exact coefficient rings: Laurent polynomials
//! in one variable `v` (with `q = v^2`) and arbitrary-precision rationals.
//! No floating point appears anywhere in this crate.
//!
//! The main subsystems:
//!
//! * [`exact_algebra`] — Laurent polynomials, sparse matrices, Kronecker
//!   products and partial traces.
//! * [`stringdiag`] — evaluation of progressive plane string diagrams as
//!   layered matrix composites, snake identities, categorical trace.
//! * [`braidknot`] — braid words, Markov closure into planar link diagrams,
//!   and a Kauffman-bracket skein oracle for Jones values.
//! * [`ybrep`] — Yang–Baxter / Hecke relation checkers, braid-group
//!   representations on tensor powers, enhanced Markov-trace link invariants.
//! * [`speciesring`] — class functions on symmetric groups under the
//!   Cauchy/Hadamard products, the characteristic map, power sums, plethysm.
//! * [`hallalg`] — Gaussian binomials, subspace enumeration over F_q, the
//!   twisted Hall algebra of finite vector spaces, Green's convolution on
//!   small GL_n(F_q).
//! * [`mackeyspan`] — finite groups, double cosets, spans of G-sets,
//!   Mackey/Green functor validation, Burnside multiplication, the Dress
//!   construction and a small-scale box product.
//! * [`duoidal`] — the two tensor products on derivation schemes over a
//!   finite category, the interchange map, and the duoid / 2-category
//!   correspondence.

pub mod exact_algebra;
pub mod stringdiag;
pub mod braidknot;
pub mod ybrep;
pub mod speciesring;
pub mod hallalg;
pub mod mackeyspan;
pub mod duoidal;

pub use exact_algebra::{LaurentPoly, MatError, Rational, SparseMat};
pub use braidknot::{BraidWord, Permutation, PlanarDiagram};
pub use ybrep::{EnhancedYb, YbOp};
