//! Yang–Baxter operators and the induced braid-group representations.

use crate::braidknot::BraidWord;
use crate::exact_algebra::{LaurentPoly, MatError, SparseMat};
use thiserror::Error;

/// Representation spaces grow as `d^n`; refuse anything bigger than this.
pub const MAX_REP_DIMENSION: usize = 1 << 14;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum YbError {
    #[error("operator must act on d^2: got {nrows}x{ncols}")]
    NotSquareOnTensorSquare { nrows: usize, ncols: usize },
    #[error("matrix error: {0}")]
    Mat(#[from] MatError),
    #[error("representation space d^n = {dim} exceeds cap {MAX_REP_DIMENSION}")]
    RepTooLarge { dim: usize },
}

/// An invertible operator `R : V (x) V -> V (x) V` over `Z[v, v^-1]`.
/// Invertibility is verified at construction by computing the inverse.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct YbOp {
    dim: usize,
    r: SparseMat,
    r_inv: SparseMat,
}

impl YbOp {
    pub fn new(r: SparseMat) -> Result<Self, YbError> {
        let n = r.nrows();
        if !r.is_square() {
            return Err(YbError::NotSquareOnTensorSquare { nrows: r.nrows(), ncols: r.ncols() });
        }
        let dim = (1..=n).find(|d| d * d == n).ok_or(YbError::NotSquareOnTensorSquare {
            nrows: r.nrows(),
            ncols: r.ncols(),
        })?;
        let r_inv = r.inverse()?;
        Ok(YbOp { dim, r, r_inv })
    }

    /// The flip `x (x) y -> y (x) x` at dimension `d` (a Yang–Baxter
    /// operator squaring to the identity).
    pub fn flip(d: usize) -> Self {
        YbOp::new(SparseMat::flip(d, d)).expect("flip is invertible")
    }

    pub fn identity(d: usize) -> Self {
        YbOp::new(SparseMat::identity(d * d)).expect("identity is invertible")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &SparseMat {
        &self.r
    }

    pub fn inverse_matrix(&self) -> &SparseMat {
        &self.r_inv
    }
}

/// Exact check of `(R (x) 1)(1 (x) R)(R (x) 1) = (1 (x) R)(R (x) 1)(1 (x) R)`
/// on `V^(x)3`.
pub fn check_ybe(op: &YbOp) -> bool {
    let d = op.dim();
    let id = SparseMat::identity(d);
    let r1 = op.matrix().kron(&id);
    let r2 = id.kron(op.matrix());
    let lhs = r1.compose(&r2).and_then(|m| m.compose(&r1));
    let rhs = r2.compose(&r1).and_then(|m| m.compose(&r2));
    lhs == rhs
}

/// The representation of a braid word on `V^(x)n`: letter `±i` acts by
/// `1^(i-1) (x) R^(±1) (x) 1^(n-i-1)` and words compose like the underlying
/// braids (`compose(a, b)` means `b` first).
pub fn braid_rep(braid: &BraidWord, op: &YbOp) -> Result<SparseMat, YbError> {
    let d = op.dim();
    let n = braid.strands();
    let total = d
        .checked_pow(n as u32)
        .ok_or(YbError::RepTooLarge { dim: usize::MAX })?;
    if total > MAX_REP_DIMENSION {
        return Err(YbError::RepTooLarge { dim: total });
    }
    let mut acc = SparseMat::identity(total);
    for &w in braid.word() {
        let i = w.unsigned_abs() as usize - 1;
        let left = SparseMat::identity(d.pow(i as u32));
        let right = SparseMat::identity(d.pow((n - i - 2) as u32));
        let mid = if w > 0 { op.matrix() } else { op.inverse_matrix() };
        let layer = left.kron(&mid.kron(&right));
        acc = layer.compose(&acc)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ybrep::builtin_jones;

    fn bw(n: usize, w: &[i32]) -> BraidWord {
        BraidWord::new(n, w.to_vec()).unwrap()
    }

    #[test]
    fn identity_and_flip_satisfy_ybe() {
        assert!(check_ybe(&YbOp::identity(2)));
        assert!(check_ybe(&YbOp::flip(3)));
    }

    #[test]
    fn perturbed_flip_fails_ybe() {
        // an off-diagonal perturbation keeps the determinant a unit but
        // breaks the hexagon (diagonal twists of the flip would not)
        let mut m = SparseMat::flip(3, 3);
        m.set(0, 1, LaurentPoly::one());
        let op = YbOp::new(m).unwrap();
        assert!(!check_ybe(&op));
    }

    #[test]
    fn non_square_rejected() {
        assert!(matches!(
            YbOp::new(SparseMat::zero(4, 2)),
            Err(YbError::NotSquareOnTensorSquare { .. })
        ));
        // square but not a perfect square dimension
        assert!(matches!(
            YbOp::new(SparseMat::identity(3)),
            Err(YbError::NotSquareOnTensorSquare { .. })
        ));
    }

    #[test]
    fn empty_word_represents_identity() {
        let op = YbOp::flip(2);
        let rep = braid_rep(&BraidWord::identity(3), &op).unwrap();
        assert_eq!(rep, SparseMat::identity(8));
    }

    #[test]
    fn braid_relation_holds_for_yb_operators() {
        for op in [YbOp::flip(2), builtin_jones().into_yb()] {
            let lhs = braid_rep(&bw(3, &[1, 2, 1]), &op).unwrap();
            let rhs = braid_rep(&bw(3, &[2, 1, 2]), &op).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn rep_is_homomorphism() {
        let op = builtin_jones().into_yb();
        let a = bw(3, &[1, -2, 1]);
        let b = bw(3, &[2, 1]);
        let ab = a.compose(&b).unwrap();
        let lhs = braid_rep(&ab, &op).unwrap();
        let rhs = braid_rep(&a, &op)
            .unwrap()
            .compose(&braid_rep(&b, &op).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_letters_cancel() {
        let op = builtin_jones().into_yb();
        let rep = braid_rep(&bw(2, &[1]), &op).unwrap();
        let rep_inv = braid_rep(&bw(2, &[-1]), &op).unwrap();
        assert_eq!(rep.compose(&rep_inv).unwrap(), SparseMat::identity(4));
    }
}
