//! Subspaces of F_q^n in reduced row echelon form, enumeration, and
//! internal direct sums with their canonical quotient isomorphisms.

use super::fq::{FqField, FqMat, HallError};
use itertools::Itertools;

/// A subspace of the ambient space `F_q^n`, held as its unique RREF basis
/// (one row per dimension).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: FqMat,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Canonicalize a spanning set into RREF.
    pub fn from_spanning(field: &FqField, ambient: usize, rows: Vec<Vec<u8>>) -> Subspace {
        let m = if rows.is_empty() {
            FqMat::zero(0, ambient)
        } else {
            FqMat::from_rows(rows)
        };
        let (r, pivots) = m.rref(field);
        let mut basis = FqMat::zero(pivots.len(), ambient);
        for i in 0..pivots.len() {
            for j in 0..ambient {
                basis[(i, j)] = r[(i, j)];
            }
        }
        Subspace { ambient, basis, pivots }
    }

    pub fn zero(ambient: usize) -> Subspace {
        Subspace { ambient, basis: FqMat::zero(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Subspace {
        Subspace {
            ambient,
            basis: FqMat::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn basis(&self) -> &FqMat {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Non-pivot coordinates; the classes of their standard vectors form a
    /// basis of the quotient.
    pub fn copivots(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Reduce a vector modulo the subspace. The result is supported on the
    /// non-pivot coordinates; it is zero iff the vector lies in the subspace.
    pub fn reduce(&self, field: &FqField, v: &[u8]) -> Vec<u8> {
        let mut v = v.to_vec();
        for (row, &pc) in self.pivots.iter().enumerate() {
            let c = v[pc];
            if c != 0 {
                for j in 0..self.ambient {
                    let sub = field.mul(c, self.basis[(row, j)]);
                    v[j] = field.sub(v[j], sub);
                }
            }
        }
        v
    }

    pub fn contains(&self, field: &FqField, v: &[u8]) -> bool {
        self.reduce(field, v).iter().all(|&x| x == 0)
    }

    /// Coordinates of a vector of the subspace in the RREF basis.
    pub fn coordinates(&self, field: &FqField, v: &[u8]) -> Option<Vec<u8>> {
        let coords: Vec<u8> = self.pivots.iter().map(|&pc| v[pc]).collect();
        // verify: v - sum coords_i basis_i = 0
        let mut check = v.to_vec();
        for (i, &c) in coords.iter().enumerate() {
            for j in 0..self.ambient {
                let sub = field.mul(c, self.basis[(i, j)]);
                check[j] = field.sub(check[j], sub);
            }
        }
        check.iter().all(|&x| x == 0).then_some(coords)
    }

    /// Quotient coordinates of an arbitrary ambient vector: reduce modulo the
    /// subspace, then read off the non-pivot entries.
    pub fn quotient_coords(&self, field: &FqField, v: &[u8]) -> Vec<u8> {
        let reduced = self.reduce(field, v);
        self.copivots().iter().map(|&c| reduced[c]).collect()
    }
}

fn check_cap(n: usize, q: u8) -> Result<(), HallError> {
    let ok = (n <= 4 && q <= 3) || (n <= 3 && q <= 5);
    if ok {
        Ok(())
    } else {
        Err(HallError::CapExceeded { n, q })
    }
}

/// All `k`-dimensional subspaces of `F_q^n`, each exactly once, generated
/// directly in RREF canonical order.
pub fn enumerate_subspaces(
    n: usize,
    k: usize,
    field: &FqField,
) -> Result<Vec<Subspace>, HallError> {
    check_cap(n, field.order())?;
    if k > n {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for pivot_cols in (0..n).combinations(k) {
        // free positions: to the right of the row's pivot, not a pivot column
        let mut free: Vec<(usize, usize)> = Vec::new();
        for (r, &pc) in pivot_cols.iter().enumerate() {
            for c in pc + 1..n {
                if !pivot_cols.contains(&c) {
                    free.push((r, c));
                }
            }
        }
        let q = field.order() as usize;
        let total = q.pow(free.len() as u32);
        for code in 0..total {
            let mut basis = FqMat::zero(k, n);
            for (r, &pc) in pivot_cols.iter().enumerate() {
                basis[(r, pc)] = 1;
            }
            let mut rem = code;
            for &(r, c) in &free {
                basis[(r, c)] = (rem % q) as u8;
                rem /= q;
            }
            out.push(Subspace { ambient: n, basis, pivots: pivot_cols.clone() });
        }
    }
    out.sort();
    Ok(out)
}

/// An internal direct sum `C = U (+) V` together with the canonical
/// isomorphisms `r : U ~ C/V` and `s : C/U ~ V` (as coordinate matrices in
/// the RREF bases and non-pivot quotient coordinates).
#[derive(Clone, Debug)]
pub struct DirectSumPair {
    pub u: Subspace,
    pub v: Subspace,
    /// `dim U x dim U`: column `i` holds the quotient coordinates modulo `V`
    /// of the `i`-th basis vector of `U`.
    pub r: FqMat,
    /// `dim V x dim V`: column `j` holds the `V`-coordinates of the unique
    /// `v in V` congruent to the `j`-th quotient basis vector modulo `U`.
    pub s: FqMat,
}

/// All ordered pairs `(U, V)` of subspaces with `U (+) V = F_q^n`, with
/// their canonical isomorphisms.
pub fn direct_sum_pairs(n: usize, field: &FqField) -> Result<Vec<DirectSumPair>, HallError> {
    check_cap(n, field.order())?;
    let mut out = Vec::new();
    for a in 0..=n {
        let us = enumerate_subspaces(n, a, field)?;
        let vs = enumerate_subspaces(n, n - a, field)?;
        for u in &us {
            for v in &vs {
                let mut stacked: Vec<Vec<u8>> = Vec::with_capacity(n);
                for i in 0..u.dim() {
                    stacked.push(u.basis().row(i).to_vec());
                }
                for i in 0..v.dim() {
                    stacked.push(v.basis().row(i).to_vec());
                }
                let m = if stacked.is_empty() {
                    FqMat::zero(0, n)
                } else {
                    FqMat::from_rows(stacked.clone())
                };
                if m.rank(field) != n {
                    continue;
                }
                // r: U -> C/V on basis vectors
                let mut r = FqMat::zero(u.dim(), u.dim());
                for i in 0..u.dim() {
                    let qc = v.quotient_coords(field, u.basis().row(i));
                    for (row, &x) in qc.iter().enumerate() {
                        r[(row, i)] = x;
                    }
                }
                // s: C/U -> V; solve e_j = (part in U) + (part in V)
                let mut s = FqMat::zero(v.dim(), v.dim());
                let full = FqMat::from_rows(stacked);
                for (j, &cop) in u.copivots().iter().enumerate() {
                    let mut e = vec![0u8; n];
                    e[cop] = 1;
                    let x = full
                        .solve_left(field, &e)
                        .expect("stacked bases span the ambient space");
                    for row in 0..v.dim() {
                        s[(row, j)] = x[u.dim() + row];
                    }
                }
                out.push(DirectSumPair { u: u.clone(), v: v.clone(), r, s });
            }
        }
    }
    Ok(out)
}
