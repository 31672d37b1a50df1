//! Small finite fields by explicit operation tables, and dense matrices
//! over them.
//!
//! Supported orders: 2, 3, 5 (prime residues) and 4 (as F_2[x]/(x^2+x+1)
//! with elements 0, 1, x = 2, x+1 = 3). Field axioms are verified at
//! construction.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HallError {
    #[error("unsupported field order {0}; expected one of 2, 3, 4, 5")]
    UnsupportedOrder(u8),
    #[error("field axiom violated: {0}")]
    AxiomViolation(&'static str),
    #[error("enumeration cap exceeded: n = {n}, q = {q}")]
    CapExceeded { n: usize, q: u8 },
    #[error("binomial arguments out of range: n = {n}, k = {k}")]
    BinomialRange { n: u32, k: u32 },
    #[error("degree mismatch between class tables")]
    DegreeMismatch,
    #[error("matrix is singular")]
    Singular,
}

/// A finite field of order 2, 3, 4 or 5 with full addition/multiplication
/// tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FqField {
    q: u8,
    add: Vec<Vec<u8>>,
    mul: Vec<Vec<u8>>,
    neg: Vec<u8>,
    inv: Vec<u8>, // inv[0] unused
}

impl FqField {
    pub fn new(q: u8) -> Result<Self, HallError> {
        if ![2, 3, 4, 5].contains(&q) {
            return Err(HallError::UnsupportedOrder(q));
        }
        let n = q as usize;
        let (add, mul): (Vec<Vec<u8>>, Vec<Vec<u8>>) = if q == 4 {
            // F_2[x]/(x^2 + x + 1), elements as bit pairs (b1 b0)
            let mul_poly = |a: u8, b: u8| -> u8 {
                let mut r = 0u8;
                for i in 0..2 {
                    if b & (1 << i) != 0 {
                        r ^= a << i;
                    }
                }
                // reduce modulo x^2 + x + 1
                for bit in (2..4).rev() {
                    if r & (1 << bit) != 0 {
                        r ^= (0b111) << (bit - 2);
                    }
                }
                r & 0b11
            };
            let add = (0..n).map(|a| (0..n).map(|b| (a ^ b) as u8).collect()).collect();
            let mul = (0..n)
                .map(|a| (0..n).map(|b| mul_poly(a as u8, b as u8)).collect())
                .collect();
            (add, mul)
        } else {
            let add = (0..n).map(|a| (0..n).map(|b| ((a + b) % n) as u8).collect()).collect();
            let mul = (0..n).map(|a| (0..n).map(|b| ((a * b) % n) as u8).collect()).collect();
            (add, mul)
        };
        let mut neg = vec![0u8; n];
        for a in 0..n {
            neg[a] = (0..n as u8).find(|&b| add[a][b as usize] == 0).unwrap();
        }
        let mut inv = vec![0u8; n];
        for a in 1..n {
            inv[a] = (1..n as u8)
                .find(|&b| mul[a][b as usize] == 1)
                .ok_or(HallError::AxiomViolation("missing multiplicative inverse"))?;
        }
        let field = FqField { q, add, mul, neg, inv };
        field.check_axioms()?;
        Ok(field)
    }

    fn check_axioms(&self) -> Result<(), HallError> {
        let n = self.q as usize;
        for a in 0..n as u8 {
            for b in 0..n as u8 {
                if self.add(a, b) != self.add(b, a) {
                    return Err(HallError::AxiomViolation("addition commutativity"));
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return Err(HallError::AxiomViolation("multiplication commutativity"));
                }
                for c in 0..n as u8 {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return Err(HallError::AxiomViolation("addition associativity"));
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return Err(HallError::AxiomViolation("multiplication associativity"));
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return Err(HallError::AxiomViolation("distributivity"));
                    }
                }
            }
            if self.add(a, 0) != a || self.mul(a, 1) != a {
                return Err(HallError::AxiomViolation("identity elements"));
            }
        }
        Ok(())
    }

    pub fn order(&self) -> u8 {
        self.q
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize][b as usize]
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize][b as usize]
    }

    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: u8) -> u8 {
        debug_assert!(a != 0, "division by zero");
        self.inv[a as usize]
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        0..self.q
    }

    pub fn units(&self) -> impl Iterator<Item = u8> {
        1..self.q
    }
}

/// Dense row-major matrix over an [`FqField`]. Operations take the field
/// explicitly; entries are field elements.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FqMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u8>,
}

impl FqMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        FqMat { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = FqMat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<u8>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        FqMat { rows: r, cols: c, data }
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, field: &FqField, rhs: &FqMat) -> FqMat {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = FqMat::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = field.mul(a, rhs[(k, j)]);
                    out[(i, j)] = field.add(out[(i, j)], prod);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, field: &FqField, v: &[u8]) -> Vec<u8> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = 0u8;
                for j in 0..self.cols {
                    acc = field.add(acc, field.mul(self[(i, j)], v[j]));
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form; returns (rref, pivot columns).
    pub fn rref(&self, field: &FqField) -> (FqMat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m[(i, c)] != 0) else { continue };
            m.swap_rows(r, pr);
            let inv = field.inv(m[(r, c)]);
            for j in 0..m.cols {
                m[(r, j)] = field.mul(m[(r, j)], inv);
            }
            for i in 0..m.rows {
                if i != r && m[(i, c)] != 0 {
                    let factor = m[(i, c)];
                    for j in 0..m.cols {
                        let sub = field.mul(factor, m[(r, j)]);
                        m[(i, j)] = field.sub(m[(i, j)], sub);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self, field: &FqField) -> usize {
        self.rref(field).1.len()
    }

    pub fn is_invertible(&self, field: &FqField) -> bool {
        self.rows == self.cols && self.rank(field) == self.rows
    }

    pub fn inverse(&self, field: &FqField) -> Result<FqMat, HallError> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = FqMat::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)];
            }
            aug[(i, n + i)] = 1;
        }
        let (r, pivots) = aug.rref(field);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(HallError::Singular);
        }
        let mut out = FqMat::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = r[(i, n + j)];
            }
        }
        Ok(out)
    }

    /// Solve `x * self = rhs` for a row vector `x` (`rhs` has `self.cols`
    /// entries); `None` when inconsistent.
    pub fn solve_left(&self, field: &FqField, rhs: &[u8]) -> Option<Vec<u8>> {
        // transpose to solve (self^T) x^T = rhs^T
        let mut aug = FqMat::zero(self.cols, self.rows + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(j, i)] = self[(i, j)];
            }
        }
        for (j, &b) in rhs.iter().enumerate() {
            aug[(j, self.rows)] = b;
        }
        let (r, pivots) = aug.rref(field);
        if pivots.contains(&self.rows) {
            return None; // pivot in the constant column
        }
        let mut x = vec![0u8; self.rows];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r[(row, self.rows)];
        }
        Some(x)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for FqMat {
    type Output = u8;
    fn index(&self, (i, j): (usize, usize)) -> &u8 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for FqMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut u8 {
        &mut self.data[i * self.cols + j]
    }
}
