//! Conjugacy classes of small general linear groups by brute-force orbit
//! partition.
//!
//! Feasible for `|GL_n(F_q)|` up to roughly 12000, i.e. `n <= 3` with
//! `q in {2, 3}` (and anything smaller). Classes are computed by orbit BFS
//! under conjugation by a generating set (all transvections and invertible
//! diagonals), which keeps the work proportional to `|GL| * #generators`.

use super::fq::{FqField, FqMat, HallError};
use num_bigint::BigInt;
use num_traits::One;
use std::collections::BTreeMap;

fn check_gl_cap(n: usize, q: u8) -> Result<(), HallError> {
    let order = gl_order(n, q as u64);
    if order <= BigInt::from(12_000) {
        Ok(())
    } else {
        Err(HallError::CapExceeded { n, q })
    }
}

/// `|GL_n(F_q)| = prod_{i=0}^{n-1} (q^n - q^i)`.
pub fn gl_order(n: usize, q: u64) -> BigInt {
    let q = BigInt::from(q);
    let qn = q.pow(n as u32);
    let mut acc = BigInt::one();
    for i in 0..n {
        acc *= &qn - q.pow(i as u32);
    }
    acc
}

/// Conjugacy data for `GL_n(F_q)`: canonical representatives, class sizes,
/// and a total membership map.
#[derive(Debug, Clone)]
pub struct GlClassTable {
    n: usize,
    q: u8,
    reps: Vec<FqMat>,
    sizes: Vec<usize>,
    class_of: BTreeMap<FqMat, usize>,
}

impl GlClassTable {
    pub fn new(n: usize, field: &FqField) -> Result<Self, HallError> {
        let q = field.order();
        check_gl_cap(n, q)?;
        let elements = enumerate_gl(n, field);
        let gens = conjugation_generators(n, field);
        let mut class_of: BTreeMap<FqMat, usize> = BTreeMap::new();
        let mut reps = Vec::new();
        let mut sizes = Vec::new();
        for e in &elements {
            if class_of.contains_key(e) {
                continue;
            }
            let id = reps.len();
            reps.push(e.clone());
            let mut queue = vec![e.clone()];
            class_of.insert(e.clone(), id);
            let mut size = 0usize;
            while let Some(x) = queue.pop() {
                size += 1;
                for (g, g_inv) in &gens {
                    let y = g.mul(field, &x).mul(field, g_inv);
                    if !class_of.contains_key(&y) {
                        class_of.insert(y.clone(), id);
                        queue.push(y);
                    }
                }
            }
            sizes.push(size);
        }
        Ok(GlClassTable { n, q, reps, sizes, class_of })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn field_order(&self) -> u8 {
        self.q
    }

    pub fn class_count(&self) -> usize {
        self.reps.len()
    }

    pub fn representative(&self, class: usize) -> &FqMat {
        &self.reps[class]
    }

    pub fn class_size(&self, class: usize) -> usize {
        self.sizes[class]
    }

    pub fn class_of(&self, m: &FqMat) -> Option<usize> {
        self.class_of.get(m).copied()
    }

    pub fn group_order(&self) -> usize {
        self.sizes.iter().sum()
    }
}

/// All invertible `n x n` matrices, in deterministic lexicographic order.
fn enumerate_gl(n: usize, field: &FqField) -> Vec<FqMat> {
    let q = field.order() as usize;
    let cells = n * n;
    let total = q.pow(cells as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut m = FqMat::zero(n, n);
        let mut rem = code;
        for idx in 0..cells {
            m.data[idx] = (rem % q) as u8;
            rem /= q;
        }
        if m.is_invertible(field) {
            out.push(m);
        }
    }
    out
}

/// Transvections `I + c E_ij` and invertible diagonal matrices, with their
/// inverses. These generate the group, which is all orbit BFS needs.
fn conjugation_generators(n: usize, field: &FqField) -> Vec<(FqMat, FqMat)> {
    let mut gens = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            for c in field.units() {
                let mut g = FqMat::identity(n);
                g[(i, j)] = c;
                let mut g_inv = FqMat::identity(n);
                g_inv[(i, j)] = field.neg(c);
                gens.push((g, g_inv));
            }
        }
    }
    // diagonals: iterate unit tuples
    let units: Vec<u8> = field.units().collect();
    let mut stack = vec![0usize; n];
    loop {
        let mut g = FqMat::identity(n);
        let mut g_inv = FqMat::identity(n);
        for (i, &u) in stack.iter().enumerate() {
            g[(i, i)] = units[u];
            g_inv[(i, i)] = field.inv(units[u]);
        }
        gens.push((g, g_inv));
        // increment
        let mut k = 0;
        loop {
            if k == n {
                return gens;
            }
            stack[k] += 1;
            if stack[k] < units.len() {
                break;
            }
            stack[k] = 0;
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl1_f2_has_one_class() {
        let f = FqField::new(2).unwrap();
        let t = GlClassTable::new(1, &f).unwrap();
        assert_eq!(t.class_count(), 1);
        assert_eq!(t.group_order(), 1);
    }

    #[test]
    fn gl2_f2_classes() {
        let f = FqField::new(2).unwrap();
        let t = GlClassTable::new(2, &f).unwrap();
        assert_eq!(t.group_order(), 6);
        assert_eq!(t.class_count(), 3);
        let mut sizes: Vec<usize> = (0..3).map(|c| t.class_size(c)).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
    }

    #[test]
    fn sizes_sum_to_group_order() {
        for (n, q) in [(1usize, 2u8), (1, 3), (2, 2), (2, 3), (3, 2)] {
            let f = FqField::new(q).unwrap();
            let t = GlClassTable::new(n, &f).unwrap();
            let expected = gl_order(n, q as u64);
            assert_eq!(BigInt::from(t.group_order()), expected, "n={n} q={q}");
        }
    }

    #[test]
    fn membership_is_conjugation_invariant() {
        let f = FqField::new(3).unwrap();
        let t = GlClassTable::new(2, &f).unwrap();
        let a = FqMat::from_rows(vec![vec![1, 1], vec![0, 1]]);
        let g = FqMat::from_rows(vec![vec![2, 1], vec![1, 1]]);
        let g_inv = g.inverse(&f).unwrap();
        let conj = g.mul(&f, &a).mul(&f, &g_inv);
        assert_eq!(t.class_of(&a), t.class_of(&conj));
        // scalar matrices are singletons
        let scalar = FqMat::from_rows(vec![vec![2, 0], vec![0, 2]]);
        let c = t.class_of(&scalar).unwrap();
        assert_eq!(t.class_size(c), 1);
    }

    #[test]
    fn cap_enforced() {
        let f = FqField::new(5).unwrap();
        assert!(matches!(
            GlClassTable::new(3, &f),
            Err(HallError::CapExceeded { .. })
        ));
    }

    #[test]
    fn gl0_is_trivial() {
        let f = FqField::new(2).unwrap();
        let t = GlClassTable::new(0, &f).unwrap();
        assert_eq!(t.class_count(), 1);
        assert_eq!(t.group_order(), 1);
    }
}
