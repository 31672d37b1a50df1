//! Sparse matrices over `Z[v, v^-1]`.
//!
//! A morphism `X -> Y` between spaces of dimensions `m` and `n` is an `n x m`
//! matrix. `compose(a, b)` is the product `a * b`, i.e. `b` is applied first.
//! Kronecker products use the row-major index convention: basis vector
//! `e_i (x) e_j` of `X (x) Y` has flat index `i * dim(Y) + j`.

use super::laurent::LaurentPoly;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatError {
    #[error("dimension mismatch: left is {left_rows}x{left_cols}, right is {right_rows}x{right_cols}")]
    DimMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },
    #[error("matrix is not square ({nrows}x{ncols})")]
    NotSquare { nrows: usize, ncols: usize },
    #[error("tensor factor dimensions {dims:?} do not multiply to matrix dimension {dim}")]
    BadFactorDims { dims: Vec<usize>, dim: usize },
    #[error("tensor site {site} out of range for {nsites} factors")]
    BadSite { site: usize, nsites: usize },
    #[error("matrix is not invertible over Z[v, v^-1] (determinant {det})")]
    NotInvertible { det: LaurentPoly },
}

/// Sparse matrix with exact Laurent entries. Zero entries are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SparseMat {
    nrows: usize,
    ncols: usize,
    entries: BTreeMap<(usize, usize), LaurentPoly>,
}

impl SparseMat {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        SparseMat { nrows, ncols, entries: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = SparseMat::zero(n, n);
        for i in 0..n {
            m.entries.insert((i, i), LaurentPoly::one());
        }
        m
    }

    /// Diagonal matrix from the given entries.
    pub fn diagonal(diag: &[LaurentPoly]) -> Self {
        let mut m = SparseMat::zero(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }

    pub fn from_entries<I>(nrows: usize, ncols: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, LaurentPoly)>,
    {
        let mut m = SparseMat::zero(nrows, ncols);
        for (i, j, val) in entries {
            let cur = m.get(i, j);
            m.set(i, j, &cur + &val);
        }
        m
    }

    /// Dense row-major integer constructor, convenient in tests.
    pub fn from_rows_i64(rows: &[&[i64]]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut m = SparseMat::zero(nrows, ncols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged rows");
            for (j, &c) in row.iter().enumerate() {
                m.set(i, j, LaurentPoly::from_int(c));
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_square(&self) -> bool {
        self.nrows == self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> LaurentPoly {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, val: LaurentPoly) {
        assert!(i < self.nrows && j < self.ncols, "index out of range");
        if val.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), val);
        }
    }

    /// Iterate stored entries as `(row, col, value)` in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &LaurentPoly)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn transpose(&self) -> SparseMat {
        SparseMat::from_entries(
            self.ncols,
            self.nrows,
            self.iter().map(|(i, j, v)| (j, i, v.clone())),
        )
    }

    pub fn scale(&self, s: &LaurentPoly) -> SparseMat {
        SparseMat::from_entries(
            self.nrows,
            self.ncols,
            self.iter().map(|(i, j, v)| (i, j, v * s)),
        )
    }

    pub fn add(&self, rhs: &SparseMat) -> Result<SparseMat, MatError> {
        if self.nrows != rhs.nrows || self.ncols != rhs.ncols {
            return Err(MatError::DimMismatch {
                left_rows: self.nrows,
                left_cols: self.ncols,
                right_rows: rhs.nrows,
                right_cols: rhs.ncols,
            });
        }
        let mut out = self.clone();
        for (i, j, v) in rhs.iter() {
            let cur = out.get(i, j);
            out.set(i, j, &cur + v);
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &SparseMat) -> Result<SparseMat, MatError> {
        self.add(&rhs.scale(&LaurentPoly::from_int(-1)))
    }

    /// Matrix product `self * rhs` (`rhs` applied first).
    pub fn compose(&self, rhs: &SparseMat) -> Result<SparseMat, MatError> {
        if self.ncols != rhs.nrows {
            return Err(MatError::DimMismatch {
                left_rows: self.nrows,
                left_cols: self.ncols,
                right_rows: rhs.nrows,
                right_cols: rhs.ncols,
            });
        }
        // Group rhs by row so each left entry touches only matching entries.
        let mut rhs_rows: BTreeMap<usize, Vec<(usize, &LaurentPoly)>> = BTreeMap::new();
        for (k, j, v) in rhs.iter() {
            rhs_rows.entry(k).or_default().push((j, v));
        }
        let mut out: BTreeMap<(usize, usize), LaurentPoly> = BTreeMap::new();
        for (i, k, a) in self.iter() {
            if let Some(row) = rhs_rows.get(&k) {
                for &(j, b) in row {
                    let entry = out.entry((i, j)).or_insert_with(LaurentPoly::zero);
                    *entry += &(a * b);
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        Ok(SparseMat { nrows: self.nrows, ncols: rhs.ncols, entries: out })
    }

    /// Kronecker product with the row-major flat index convention.
    pub fn kron(&self, rhs: &SparseMat) -> SparseMat {
        let mut out = SparseMat::zero(self.nrows * rhs.nrows, self.ncols * rhs.ncols);
        for (i, j, a) in self.iter() {
            for (k, l, b) in rhs.iter() {
                out.entries
                    .insert((i * rhs.nrows + k, j * rhs.ncols + l), a * b);
            }
        }
        out
    }

    pub fn trace(&self) -> Result<LaurentPoly, MatError> {
        if !self.is_square() {
            return Err(MatError::NotSquare { nrows: self.nrows, ncols: self.ncols });
        }
        let mut t = LaurentPoly::zero();
        for i in 0..self.nrows {
            t += &self.get(i, i);
        }
        Ok(t)
    }

    /// Contract the tensor factor at `site` (0-based) of a square matrix on a
    /// tensor-product space with the given factor dimensions.
    ///
    /// For `a (x) b` on factors `[da, db]`, contracting site 1 yields
    /// `trace(b) * a` and contracting site 0 yields `trace(a) * b`.
    pub fn partial_trace(&self, site: usize, dims: &[usize]) -> Result<SparseMat, MatError> {
        if !self.is_square() {
            return Err(MatError::NotSquare { nrows: self.nrows, ncols: self.ncols });
        }
        let total: usize = dims.iter().product();
        if total != self.nrows || dims.iter().any(|&d| d == 0) {
            return Err(MatError::BadFactorDims { dims: dims.to_vec(), dim: self.nrows });
        }
        if site >= dims.len() {
            return Err(MatError::BadSite { site, nsites: dims.len() });
        }
        // Row-major strides: index = sum_k idx_k * stride_k.
        let mut strides = vec![1usize; dims.len()];
        for k in (0..dims.len().saturating_sub(1)).rev() {
            strides[k] = strides[k + 1] * dims[k + 1];
        }
        let keep: Vec<usize> = (0..dims.len()).filter(|&k| k != site).collect();
        let out_dim: usize = keep.iter().map(|&k| dims[k]).product();
        let mut out_strides = vec![1usize; keep.len()];
        for k in (0..keep.len().saturating_sub(1)).rev() {
            out_strides[k] = out_strides[k + 1] * dims[keep[k + 1]];
        }
        let decompose = |mut idx: usize| -> Vec<usize> {
            let mut parts = vec![0usize; dims.len()];
            for k in 0..dims.len() {
                parts[k] = idx / strides[k];
                idx %= strides[k];
            }
            parts
        };
        let mut out = SparseMat::zero(out_dim, out_dim);
        for (i, j, v) in self.iter() {
            let pi = decompose(i);
            let pj = decompose(j);
            if pi[site] != pj[site] {
                continue;
            }
            let oi: usize = keep.iter().enumerate().map(|(t, &k)| pi[k] * out_strides[t]).sum();
            let oj: usize = keep.iter().enumerate().map(|(t, &k)| pj[k] * out_strides[t]).sum();
            let cur = out.get(oi, oj);
            out.set(oi, oj, &cur + v);
        }
        Ok(out)
    }

    /// The swap `X (x) Y -> Y (x) X` on spaces of dimensions `m`, `n`.
    pub fn flip(m: usize, n: usize) -> SparseMat {
        let mut out = SparseMat::zero(m * n, m * n);
        for i in 0..m {
            for j in 0..n {
                out.entries.insert((j * m + i, i * n + j), LaurentPoly::one());
            }
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination; exact over the ring.
    pub fn det(&self) -> Result<LaurentPoly, MatError> {
        if !self.is_square() {
            return Err(MatError::NotSquare { nrows: self.nrows, ncols: self.ncols });
        }
        let n = self.nrows;
        if n == 0 {
            return Ok(LaurentPoly::one());
        }
        let mut a: Vec<Vec<LaurentPoly>> =
            (0..n).map(|i| (0..n).map(|j| self.get(i, j)).collect()).collect();
        let mut sign = 1i64;
        let mut prev = LaurentPoly::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return Ok(LaurentPoly::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                    // Bareiss: entries stay minors of the input, so this
                    // division is exact.
                    a[i][j] = num.div_exact(&prev).expect("bareiss division is exact");
                }
            }
            for i in k + 1..n {
                a[i][k] = LaurentPoly::zero();
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if sign < 0 { -d } else { d })
    }

    /// Inverse over `Z[v, v^-1]`; exists iff the determinant is a unit `±v^k`.
    /// Computed as adjugate / det via cofactor solves on the augmented system.
    pub fn inverse(&self) -> Result<SparseMat, MatError> {
        if !self.is_square() {
            return Err(MatError::NotSquare { nrows: self.nrows, ncols: self.ncols });
        }
        let det = self.det()?;
        let det_inv = det
            .unit_inverse()
            .ok_or(MatError::NotInvertible { det: det.clone() })?;
        let n = self.nrows;
        // Fraction-free Gaussian elimination on [A | I], then exact back
        // substitution; the final division by the determinant is by a unit.
        let mut a: Vec<Vec<LaurentPoly>> = (0..n)
            .map(|i| {
                (0..2 * n)
                    .map(|j| {
                        if j < n {
                            self.get(i, j)
                        } else if j - n == i {
                            LaurentPoly::one()
                        } else {
                            LaurentPoly::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        let mut prev = LaurentPoly::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                let r = (k + 1..n)
                    .find(|&r| !a[r][k].is_zero())
                    .expect("unit determinant implies full rank");
                a.swap(k, r);
            }
            for i in 0..n {
                if i == k {
                    continue;
                }
                for j in 0..2 * n {
                    if j == k {
                        continue;
                    }
                    let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.div_exact(&prev).expect("bareiss division is exact");
                }
                a[i][k] = LaurentPoly::zero();
            }
            prev = a[k][k].clone();
        }
        // Left block is now diag(det, ..., det) up to the pivot bookkeeping:
        // each row i solves det * x_i = rhs_i with pivot a[i][i].
        let mut out = SparseMat::zero(n, n);
        for i in 0..n {
            let piv_inv = match a[i][i].unit_inverse() {
                Some(inv) => inv,
                None => {
                    // Pivot equals det up to sign; divide exactly then invert.
                    let ratio = a[i][i].div_exact(&det).expect("pivot divides det");
                    let ratio_inv = ratio.unit_inverse().expect("pivot/det is a unit");
                    &ratio_inv * &det_inv
                }
            };
            for j in 0..n {
                let v = &a[i][n + j] * &piv_inv;
                out.set(i, j, v);
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for SparseMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SparseMat {}x{} [", self.nrows, self.ncols)?;
        for (i, j, v) in self.iter() {
            writeln!(f, "  ({i},{j}): {v}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    pub(crate) fn random_mat(rng: &mut StdRng, nrows: usize, ncols: usize) -> SparseMat {
        let mut m = SparseMat::zero(nrows, ncols);
        for i in 0..nrows {
            for j in 0..ncols {
                if rng.gen_bool(0.7) {
                    let c = rng.gen_range(-4i64..=4);
                    let e = rng.gen_range(-2i64..=2);
                    m.set(i, j, LaurentPoly::monomial(c, e));
                }
            }
        }
        m
    }

    #[test]
    fn identity_composition() {
        let i3 = SparseMat::identity(3);
        assert_eq!(i3.compose(&i3).unwrap(), i3);
        let mut rng = StdRng::seed_from_u64(1);
        let a = random_mat(&mut rng, 3, 3);
        assert_eq!(a.compose(&SparseMat::identity(3)).unwrap(), a);
        assert_eq!(SparseMat::identity(3).compose(&a).unwrap(), a);
    }

    #[test]
    fn composition_associative() {
        let mut rng = StdRng::seed_from_u64(2);
        for _ in 0..10 {
            let a = random_mat(&mut rng, 3, 3);
            let b = random_mat(&mut rng, 3, 3);
            let c = random_mat(&mut rng, 3, 3);
            let lhs = a.compose(&b).unwrap().compose(&c).unwrap();
            let rhs = a.compose(&b.compose(&c).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn compose_dimension_error() {
        let a = SparseMat::zero(2, 3);
        let b = SparseMat::zero(2, 3);
        assert!(matches!(a.compose(&b), Err(MatError::DimMismatch { .. })));
    }

    #[test]
    fn kron_identities() {
        assert_eq!(
            SparseMat::identity(2).kron(&SparseMat::identity(3)),
            SparseMat::identity(6)
        );
        let mut rng = StdRng::seed_from_u64(3);
        let a = random_mat(&mut rng, 2, 2);
        let scalar = SparseMat::from_entries(1, 1, [(0, 0, LaurentPoly::monomial(3, 1))]);
        assert_eq!(scalar.kron(&a), a.scale(&LaurentPoly::monomial(3, 1)));
    }

    #[test]
    fn kron_interchange() {
        // (A (x) B)(C (x) D) = (AC) (x) (BD)
        let mut rng = StdRng::seed_from_u64(4);
        for _ in 0..10 {
            let a = random_mat(&mut rng, 2, 2);
            let b = random_mat(&mut rng, 2, 2);
            let c = random_mat(&mut rng, 2, 2);
            let d = random_mat(&mut rng, 2, 2);
            let lhs = a.kron(&b).compose(&c.kron(&d)).unwrap();
            let rhs = a.compose(&c).unwrap().kron(&b.compose(&d).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn kron_associative() {
        let mut rng = StdRng::seed_from_u64(5);
        let a = random_mat(&mut rng, 2, 3);
        let b = random_mat(&mut rng, 2, 2);
        let c = random_mat(&mut rng, 3, 2);
        assert_eq!(a.kron(&b).kron(&c), a.kron(&b.kron(&c)));
    }

    #[test]
    fn trace_basics() {
        assert_eq!(
            SparseMat::identity(5).trace().unwrap(),
            LaurentPoly::from_int(5)
        );
        assert_eq!(SparseMat::zero(4, 4).trace().unwrap(), LaurentPoly::zero());
        assert!(SparseMat::zero(2, 3).trace().is_err());
    }

    #[test]
    fn trace_cyclic() {
        let mut rng = StdRng::seed_from_u64(6);
        for _ in 0..10 {
            let a = random_mat(&mut rng, 3, 3);
            let b = random_mat(&mut rng, 3, 3);
            let ab = a.compose(&b).unwrap().trace().unwrap();
            let ba = b.compose(&a).unwrap().trace().unwrap();
            assert_eq!(ab, ba);
        }
    }

    #[test]
    fn partial_trace_of_identity() {
        let got = SparseMat::identity(4).partial_trace(1, &[2, 2]).unwrap();
        assert_eq!(got, SparseMat::identity(2).scale(&LaurentPoly::from_int(2)));
    }

    #[test]
    fn partial_trace_of_kron_factors() {
        let mut rng = StdRng::seed_from_u64(7);
        let a = random_mat(&mut rng, 2, 2);
        let b = random_mat(&mut rng, 3, 3);
        let m = a.kron(&b);
        // site 1 contracts the second factor
        assert_eq!(
            m.partial_trace(1, &[2, 3]).unwrap(),
            a.scale(&b.trace().unwrap())
        );
        assert_eq!(
            m.partial_trace(0, &[2, 3]).unwrap(),
            b.scale(&a.trace().unwrap())
        );
    }

    #[test]
    fn sequential_partial_traces_equal_full_trace() {
        let mut rng = StdRng::seed_from_u64(8);
        let m = random_mat(&mut rng, 4, 4);
        let once = m.partial_trace(1, &[2, 2]).unwrap();
        let twice = once.partial_trace(0, &[2]).unwrap();
        assert_eq!(twice.get(0, 0), m.trace().unwrap());
    }

    #[test]
    fn partial_trace_bad_dims() {
        let m = SparseMat::identity(4);
        assert!(matches!(
            m.partial_trace(0, &[3, 2]),
            Err(MatError::BadFactorDims { .. })
        ));
        assert!(matches!(
            m.partial_trace(2, &[2, 2]),
            Err(MatError::BadSite { .. })
        ));
    }

    #[test]
    fn flip_swaps_factors() {
        let mut rng = StdRng::seed_from_u64(9);
        let a = random_mat(&mut rng, 2, 2);
        let b = random_mat(&mut rng, 3, 3);
        let f = SparseMat::flip(2, 3);
        let lhs = f.compose(&a.kron(&b)).unwrap();
        let rhs = b.kron(&a).compose(&f).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(
            f.compose(&SparseMat::flip(3, 2)).unwrap(),
            SparseMat::identity(6)
        );
    }

    #[test]
    fn det_and_inverse() {
        // permutation-like unit-determinant matrix
        let mut m = SparseMat::zero(3, 3);
        m.set(0, 1, LaurentPoly::v());
        m.set(1, 0, LaurentPoly::monomial(1, -1));
        m.set(2, 2, LaurentPoly::monomial(-1, 2));
        let det = m.det().unwrap();
        assert_eq!(det, LaurentPoly::monomial(1, 2));
        let inv = m.inverse().unwrap();
        assert_eq!(m.compose(&inv).unwrap(), SparseMat::identity(3));
        assert_eq!(inv.compose(&m).unwrap(), SparseMat::identity(3));
    }

    #[test]
    fn inverse_rejects_non_unit_det() {
        let m = SparseMat::from_rows_i64(&[&[2, 0], &[0, 1]]);
        assert!(matches!(m.inverse(), Err(MatError::NotInvertible { .. })));
        let singular = SparseMat::from_rows_i64(&[&[1, 1], &[1, 1]]);
        assert!(matches!(singular.inverse(), Err(MatError::NotInvertible { .. })));
    }

    #[test]
    fn inverse_with_pivot_search() {
        let mut m = SparseMat::zero(2, 2);
        m.set(0, 1, LaurentPoly::one());
        m.set(1, 0, LaurentPoly::one());
        let inv = m.inverse().unwrap();
        assert_eq!(m.compose(&inv).unwrap(), SparseMat::identity(2));
    }
}
