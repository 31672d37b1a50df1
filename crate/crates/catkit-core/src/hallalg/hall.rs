//! Gaussian binomials and the twisted Hall algebra of finite F_q-vector
//! spaces.
//!
//! For vector spaces all higher extensions vanish, so the multiplicative
//! Euler form collapses to `<A, B> = v^(dim A * dim B)` (the positive square
//! root) and the Hall product of finitely supported functions on dimensions
//! is
//!
//! ```text
//! (f • g)[n] = sum_{a+b=n} v^(a b) [n choose a]_q f(a) g(b),  q = v^2.
//! ```

use super::fq::HallError;
use crate::exact_algebra::LaurentPoly;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// The q-binomial `[n choose k]_q` as a polynomial in `q = v^2`, via the
/// q-Pascal recursion `[n,k] = [n-1,k-1] + q^k [n-1,k]`.
pub fn gaussian_binomial(n: u32, k: u32) -> Result<LaurentPoly, HallError> {
    if k > n {
        return Err(HallError::BinomialRange { n, k });
    }
    let mut row = vec![LaurentPoly::one()]; // row for n = 0
    for m in 1..=n {
        let mut next = Vec::with_capacity(m as usize + 1);
        next.push(LaurentPoly::one());
        for j in 1..m {
            let qj = LaurentPoly::q_pow(j as i64);
            next.push(&row[j as usize - 1] + &(&qj * &row[j as usize]));
        }
        next.push(LaurentPoly::one());
        row = next;
    }
    Ok(row[k as usize].clone())
}

/// Integer value of the q-binomial at a concrete field order, by the exact
/// product formula.
pub fn gaussian_binomial_count(n: u32, k: u32, q: u64) -> Result<BigInt, HallError> {
    if k > n {
        return Err(HallError::BinomialRange { n, k });
    }
    let q = BigInt::from(q);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 1..=k {
        num *= q.pow(n - k + i) - BigInt::one();
        den *= q.pow(i) - BigInt::one();
    }
    Ok(num / den)
}

/// A finitely supported function from dimensions to scalars.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct HallElement {
    values: BTreeMap<usize, LaurentPoly>,
}

impl HallElement {
    pub fn zero() -> Self {
        HallElement::default()
    }

    /// Indicator of a single dimension.
    pub fn delta(dim: usize) -> Self {
        let mut values = BTreeMap::new();
        values.insert(dim, LaurentPoly::one());
        HallElement { values }
    }

    pub fn from_values(values: impl IntoIterator<Item = (usize, LaurentPoly)>) -> Self {
        let mut map = BTreeMap::new();
        for (d, p) in values {
            if !p.is_zero() {
                let entry: &mut LaurentPoly = map.entry(d).or_insert_with(LaurentPoly::zero);
                *entry += &p;
                if entry.is_zero() {
                    map.remove(&d);
                }
            }
        }
        HallElement { values: map }
    }

    pub fn value(&self, dim: usize) -> LaurentPoly {
        self.values.get(&dim).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, &LaurentPoly)> {
        self.values.iter().map(|(&d, p)| (d, p))
    }

    pub fn max_dim(&self) -> Option<usize> {
        self.values.keys().next_back().copied()
    }
}

/// Ringel's twisted product for the category of finite F_q-vector spaces.
pub fn hall_product(f: &HallElement, g: &HallElement) -> HallElement {
    let mut out: BTreeMap<usize, LaurentPoly> = BTreeMap::new();
    for (a, fa) in f.support() {
        for (b, gb) in g.support() {
            let n = a + b;
            let binom = gaussian_binomial(n as u32, a as u32).expect("0 <= a <= n");
            let twist = LaurentPoly::monomial(1, (a * b) as i64);
            let term = &(&twist * &binom) * &(fa * gb);
            let entry = out.entry(n).or_insert_with(LaurentPoly::zero);
            *entry += &term;
            if entry.is_zero() {
                out.remove(&n);
            }
        }
    }
    HallElement { values: out }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn small_binomials() {
        // [2 1]_q = 1 + q
        assert_eq!(gaussian_binomial(2, 1).unwrap(), p(&[(0, 1), (2, 1)]));
        assert_eq!(gaussian_binomial(5, 0).unwrap(), LaurentPoly::one());
        assert_eq!(gaussian_binomial(5, 5).unwrap(), LaurentPoly::one());
        assert!(gaussian_binomial(2, 3).is_err());
    }

    #[test]
    fn binomial_at_concrete_q() {
        assert_eq!(gaussian_binomial_count(2, 1, 2).unwrap(), BigInt::from(3));
        assert_eq!(gaussian_binomial_count(4, 2, 2).unwrap(), BigInt::from(35));
        // symbolic evaluation agrees with the product formula
        for n in 0..=5u32 {
            for k in 0..=n {
                for q in [2u64, 3, 5] {
                    let sym = gaussian_binomial(n, k)
                        .unwrap()
                        .eval_q(&BigInt::from(q))
                        .expect("even support");
                    assert_eq!(sym, gaussian_binomial_count(n, k, q).unwrap());
                }
            }
        }
    }

    #[test]
    fn symmetry() {
        for n in 0..=6u32 {
            for k in 0..=n {
                assert_eq!(
                    gaussian_binomial(n, k).unwrap(),
                    gaussian_binomial(n, n - k).unwrap()
                );
            }
        }
    }

    #[test]
    fn product_of_two_lines() {
        // 1_1 • 1_1 at n = 2: v * (1 + q) = v + v^3
        let one1 = HallElement::delta(1);
        let prod = hall_product(&one1, &one1);
        assert_eq!(prod.value(2), p(&[(1, 1), (3, 1)]));
    }

    #[test]
    fn delta_zero_is_unit() {
        let f = HallElement::from_values([
            (0, LaurentPoly::from_int(2)),
            (1, LaurentPoly::v()),
            (3, p(&[(0, 1), (-2, -1)])),
        ]);
        let unit = HallElement::delta(0);
        assert_eq!(hall_product(&f, &unit), f);
        assert_eq!(hall_product(&unit, &f), f);
    }

    fn pseudo_random_element(seed: i64, max_dim: usize) -> HallElement {
        HallElement::from_values((0..=max_dim).map(|d| {
            let c = (seed * 17 + d as i64 * 7) % 5 - 2;
            let e = (seed + d as i64) % 3 - 1;
            (d, LaurentPoly::monomial(c, e))
        }))
    }

    #[test]
    fn associative_and_commutative_up_to_dim_six() {
        let f = pseudo_random_element(1, 2);
        let g = pseudo_random_element(2, 2);
        let h = pseudo_random_element(3, 2);
        assert_eq!(hall_product(&f, &g), hall_product(&g, &f));
        assert_eq!(
            hall_product(&hall_product(&f, &g), &h),
            hall_product(&f, &hall_product(&g, &h))
        );
        // triple product of lines reaches total dimension 6
        let line = HallElement::delta(2);
        assert_eq!(
            hall_product(&hall_product(&line, &line), &line),
            hall_product(&line, &hall_product(&line, &line))
        );
    }
}
