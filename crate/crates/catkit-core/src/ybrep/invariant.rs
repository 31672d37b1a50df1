//! Markov-trace enhancements of Yang–Baxter operators and the resulting
//! link invariants.
//!
//! An enhancement `(R, mu, alpha, beta)` must satisfy three matrix
//! identities, all checkable exactly:
//!
//! 1. `mu (x) mu` commutes with `R`;
//! 2. `ptr_2(R ∘ (mu (x) mu)) = alpha * beta * mu`;
//! 3. `ptr_2(R^-1 ∘ (mu (x) mu)) = alpha^-1 * beta * mu`;
//!
//! where `ptr_2` contracts the second tensor factor. For a braid `b` on `n`
//! strands the scalar
//!
//! ```text
//! T(b) = alpha^(-writhe b) * beta^(-n) * trace(rep(b) ∘ mu^(x)n)
//! ```
//!
//! is invariant under Markov conjugation and stabilization. `T` assigns the
//! unknot the quantum dimension `beta^-1 * trace(mu)`, which need not be 1;
//! [`eyb_invariant`] divides it out exactly, so the unknot maps to 1 and the
//! values agree with the skein oracle.

use super::ybop::{braid_rep, YbError, YbOp};
use crate::braidknot::BraidWord;
use crate::exact_algebra::{LaurentPoly, SparseMat};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EybError {
    #[error("mu must be a diagonal {dim}x{dim} matrix")]
    BadMu { dim: usize },
    #[error("alpha and beta must be units of Z[v, v^-1]")]
    NonUnitScalar,
    #[error("enhancement identity {name} fails")]
    EnhancementBroken { name: &'static str },
    #[error("unknot value {value} is zero or does not divide the trace")]
    BadNormalization { value: LaurentPoly },
    #[error(transparent)]
    Yb(#[from] YbError),
}

/// A Yang–Baxter operator with Markov-trace data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnhancedYb {
    yb: YbOp,
    mu: SparseMat,
    alpha: LaurentPoly,
    beta: LaurentPoly,
}

impl EnhancedYb {
    /// Builds and verifies all enhancement identities.
    pub fn new(
        yb: YbOp,
        mu: SparseMat,
        alpha: LaurentPoly,
        beta: LaurentPoly,
    ) -> Result<Self, EybError> {
        let d = yb.dim();
        if mu.nrows() != d || mu.ncols() != d || mu.iter().any(|(i, j, _)| i != j) {
            return Err(EybError::BadMu { dim: d });
        }
        if !alpha.is_unit() || !beta.is_unit() {
            return Err(EybError::NonUnitScalar);
        }
        let e = EnhancedYb { yb, mu, alpha, beta };
        e.check()?;
        Ok(e)
    }

    fn check(&self) -> Result<(), EybError> {
        let d = self.yb.dim();
        let mm = self.mu.kron(&self.mu);
        let r = self.yb.matrix();
        if r.compose(&mm) != mm.compose(r) {
            return Err(EybError::EnhancementBroken { name: "mu (x) mu commutes with R" });
        }
        let ab = &self.alpha * &self.beta;
        let lhs = r.compose(&mm).unwrap().partial_trace(1, &[d, d]).unwrap();
        if lhs != self.mu.scale(&ab) {
            return Err(EybError::EnhancementBroken { name: "ptr_2(R(mu x mu)) = alpha beta mu" });
        }
        let ainv_b = &self.alpha.unit_inverse().expect("checked unit") * &self.beta;
        let lhs = self
            .yb
            .inverse_matrix()
            .compose(&mm)
            .unwrap()
            .partial_trace(1, &[d, d])
            .unwrap();
        if lhs != self.mu.scale(&ainv_b) {
            return Err(EybError::EnhancementBroken {
                name: "ptr_2(R^-1(mu x mu)) = alpha^-1 beta mu",
            });
        }
        Ok(())
    }

    pub fn yb(&self) -> &YbOp {
        &self.yb
    }

    pub fn into_yb(self) -> YbOp {
        self.yb
    }

    pub fn mu(&self) -> &SparseMat {
        &self.mu
    }

    pub fn alpha(&self) -> &LaurentPoly {
        &self.alpha
    }

    pub fn beta(&self) -> &LaurentPoly {
        &self.beta
    }

    /// `beta^-1 * trace(mu)`: the value `T` assigns to the unknot.
    pub fn unknot_value(&self) -> LaurentPoly {
        let beta_inv = self.beta.unit_inverse().expect("beta is a unit");
        &beta_inv * &self.mu.trace().expect("mu is square")
    }
}

/// The raw Markov trace `alpha^(-w) beta^(-n) trace(rep(b) mu^(x)n)`.
pub fn eyb_trace(braid: &BraidWord, e: &EnhancedYb) -> Result<LaurentPoly, EybError> {
    let n = braid.strands();
    let rep = braid_rep(braid, e.yb())?;
    let mut mu_n = SparseMat::identity(1);
    for _ in 0..n {
        mu_n = mu_n.kron(e.mu());
    }
    let tr = rep.compose(&mu_n).expect("shapes match").trace().expect("square");
    let alpha_pow = e.alpha().pow(-braid.writhe()).expect("alpha is a unit");
    let beta_pow = e.beta().pow(-(n as i64)).expect("beta is a unit");
    Ok(&(&alpha_pow * &beta_pow) * &tr)
}

/// The Markov-trace link invariant of the closure of `b`, normalized so that
/// the unknot maps to 1 (exact division by the operator's unknot value).
pub fn eyb_invariant(braid: &BraidWord, e: &EnhancedYb) -> Result<LaurentPoly, EybError> {
    let raw = eyb_trace(braid, e)?;
    let unknot = e.unknot_value();
    raw.div_exact(&unknot)
        .ok_or(EybError::BadNormalization { value: unknot })
}

/// The two-dimensional enhanced operator computing the Jones polynomial.
///
/// `R` has eigenvalues `q` and `-1`, so it satisfies `R^2 = (q-1) R + q` —
/// the degree-one instance of the cuspidal Hecke relation — and the
/// enhancement is `mu = diag(1, q)`, `alpha = -v^3`, `beta = -v`.
pub fn builtin_jones() -> EnhancedYb {
    let q = LaurentPoly::q();
    let v = LaurentPoly::v();
    let qm1 = &q - &LaurentPoly::one();
    // basis order: e1 (x) e1, e1 (x) e2, e2 (x) e1, e2 (x) e2
    let r = SparseMat::from_entries(
        4,
        4,
        [
            (0, 0, q.clone()),
            (1, 1, qm1),
            (1, 2, v.clone()),
            (2, 1, v),
            (3, 3, q.clone()),
        ],
    );
    let mu = SparseMat::diagonal(&[LaurentPoly::one(), q]);
    let alpha = LaurentPoly::monomial(-1, 3);
    let beta = LaurentPoly::monomial(-1, 1);
    EnhancedYb::new(YbOp::new(r).expect("R is invertible"), mu, alpha, beta)
        .expect("builtin enhancement identities hold")
}
