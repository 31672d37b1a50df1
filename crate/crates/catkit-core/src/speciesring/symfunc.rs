//! Truncated symmetric functions in the power-sum basis.
//!
//! An element is a rational linear combination of monomials `p_lambda`
//! with `|lambda| <= N` for a fixed truncation degree `N`. Multiplication
//! merges indices (`p_lambda * p_mu = p_(lambda u mu)`), discarding terms
//! beyond the truncation. Substitution (plethysm) acts on power sums by
//! `p_k o G = G[p_i -> p_(k i)]`, extended multiplicatively and linearly.

use super::classfn::{ClassFunction, SpeciesError};
use super::partition::{partitions_of, z_lambda, Partition};
use crate::exact_algebra::Rational;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

pub const DEFAULT_TRUNCATION: u32 = 8;

/// A symmetric function truncated above total degree `maxdeg`, written in
/// the power-sum monomial basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymFunc {
    maxdeg: u32,
    terms: BTreeMap<Partition, Rational>,
}

impl SymFunc {
    pub fn zero(maxdeg: u32) -> Self {
        SymFunc { maxdeg, terms: BTreeMap::new() }
    }

    pub fn one(maxdeg: u32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Partition::empty(), Rational::one());
        SymFunc { maxdeg, terms }
    }

    /// The power sum `p_k` (`k >= 1`).
    pub fn power_sum(k: u32, maxdeg: u32) -> Self {
        assert!(k >= 1);
        let mut f = SymFunc::zero(maxdeg);
        f.add_term(Partition::single(k), Rational::one());
        f
    }

    /// The exponential series `E = sum_lambda p_lambda / z_lambda`, whose
    /// coefficient extraction counts one structure per finite set.
    pub fn exp_series(maxdeg: u32) -> Self {
        let mut f = SymFunc::zero(maxdeg);
        for n in 0..=maxdeg {
            for lambda in partitions_of(n) {
                f.add_term(lambda.clone(), Rational::new(BigInt::one(), z_lambda(&lambda)));
            }
        }
        f
    }

    /// `E - 1`: the exponential series restricted to nonempty sets.
    pub fn exp_series_positive(maxdeg: u32) -> Self {
        let mut f = SymFunc::exp_series(maxdeg);
        f.add_term(Partition::empty(), -Rational::one());
        f
    }

    pub fn from_terms(
        maxdeg: u32,
        terms: impl IntoIterator<Item = (Partition, Rational)>,
    ) -> Self {
        let mut f = SymFunc::zero(maxdeg);
        for (l, c) in terms {
            f.add_term(l, c);
        }
        f
    }

    pub fn maxdeg(&self) -> u32 {
        self.maxdeg
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Rational> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, lambda: Partition, coeff: Rational) {
        if coeff.is_zero() || lambda.sum() > self.maxdeg {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(lambda) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &SymFunc) -> SymFunc {
        let maxdeg = self.maxdeg.min(other.maxdeg);
        let mut out = SymFunc::zero(maxdeg);
        for (l, c) in &self.terms {
            out.add_term(l.clone(), c.clone());
        }
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }
}

/// Graded product, truncated at the smaller of the two truncation degrees.
pub fn sym_mul(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let maxdeg = f.maxdeg.min(g.maxdeg);
    let mut out = SymFunc::zero(maxdeg);
    for (l, a) in f.terms() {
        for (m, b) in g.terms() {
            if l.sum() + m.sum() > maxdeg {
                continue;
            }
            out.add_term(l.merge(m), a * b);
        }
    }
    out
}

/// The characteristic map `ch(f) = sum over lambda of f(lambda) p_lambda /
/// z_lambda`, a ring morphism from class functions under the Cauchy product.
pub fn char_map(f: &ClassFunction, truncation: u32) -> Result<SymFunc, SpeciesError> {
    if f.degree() > truncation {
        return Err(SpeciesError::DegreeExceedsTruncation {
            degree: f.degree(),
            truncation,
        });
    }
    let mut out = SymFunc::zero(truncation);
    for (lambda, value) in f.values() {
        out.add_term(
            lambda.clone(),
            value / Rational::from(z_lambda(lambda)),
        );
    }
    Ok(out)
}

/// Substitution `F o G`. Requires `G` to have zero constant term.
pub fn plethysm(f: &SymFunc, g: &SymFunc) -> Result<SymFunc, SpeciesError> {
    if !g.coeff(&Partition::empty()).is_zero() {
        return Err(SpeciesError::NonzeroConstantTerm);
    }
    let maxdeg = f.maxdeg.min(g.maxdeg);
    // cache p_k o G
    let mut pk_cache: BTreeMap<u32, SymFunc> = BTreeMap::new();
    let mut pk_of_g = |k: u32| -> SymFunc {
        pk_cache
            .entry(k)
            .or_insert_with(|| {
                let mut out = SymFunc::zero(maxdeg);
                for (l, c) in g.terms() {
                    out.add_term(l.scale(k), c.clone());
                }
                out
            })
            .clone()
    };
    let mut acc = SymFunc::zero(maxdeg);
    for (lambda, coeff) in f.terms() {
        let mut term = SymFunc::one(maxdeg);
        for &part in lambda.parts() {
            term = sym_mul(&term, &pk_of_g(part));
            if term.is_zero() {
                break;
            }
        }
        let mut scaled = SymFunc::zero(maxdeg);
        for (l, c) in term.terms() {
            scaled.add_term(l.clone(), c * coeff);
        }
        acc = acc.add(&scaled);
    }
    Ok(acc)
}

/// Structure counts per degree under the exponential specialization
/// `p_1 -> x, p_k -> 0 (k >= 2)`: the count at degree `n` is
/// `n! * [p_1^n] F`. Errors when a count is not an integer.
pub fn species_counts(f: &SymFunc) -> Result<Vec<BigInt>, SpeciesError> {
    let mut out = Vec::new();
    let mut factorial = BigInt::one();
    for n in 0..=f.maxdeg {
        if n > 0 {
            factorial *= BigInt::from(n);
        }
        let ones = Partition::new(vec![1; n as usize]).unwrap_or_default();
        let count = f.coeff(&ones) * Rational::from(factorial.clone());
        if !count.is_integer() {
            return Err(SpeciesError::NonIntegralCount { degree: n as usize, value: count });
        }
        out.push(count.to_integer());
    }
    Ok(out)
}

/// Formatting helper: `p` monomials with rational coefficients, degree-major
/// order, deterministic.
pub fn render_symfunc(f: &SymFunc) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut items: Vec<(&Partition, &Rational)> = f.terms().iter().collect();
    items.sort_by_key(|(l, _)| (l.sum(), (*l).clone()));
    let mut out = String::new();
    for (i, (l, c)) in items.iter().enumerate() {
        let neg = c.is_negative();
        let mag = if neg { -(*c).clone() } else { (*c).clone() };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = if l.is_empty() {
            "1".to_string()
        } else {
            format!("p{l}")
        };
        if mag.is_one() && !l.is_empty() {
            out.push_str(&mono);
        } else if l.is_empty() {
            out.push_str(&format!("{mag}"));
        } else {
            out.push_str(&format!("{mag}*{mono}"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::speciesring::classfn::cauchy_product;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn ch_of_degree_two_characters() {
        // trivial character of S_2 -> (p_11 + p_2)/2
        let triv = ClassFunction::constant(2, Rational::one());
        let ch = char_map(&triv, 4).unwrap();
        assert_eq!(ch.coeff(&Partition::new(vec![1, 1]).unwrap()), rat(1, 2));
        assert_eq!(ch.coeff(&Partition::new(vec![2]).unwrap()), rat(1, 2));
        // sign character of S_2 -> (p_11 - p_2)/2
        let sign = ClassFunction::sign(2);
        let ch = char_map(&sign, 4).unwrap();
        assert_eq!(ch.coeff(&Partition::new(vec![1, 1]).unwrap()), rat(1, 2));
        assert_eq!(ch.coeff(&Partition::new(vec![2]).unwrap()), rat(-1, 2));
    }

    #[test]
    fn ch_of_unit_is_one() {
        let ch = char_map(&ClassFunction::unit(), 3).unwrap();
        assert_eq!(ch, SymFunc::one(3));
    }

    #[test]
    fn truncation_guard() {
        let f = ClassFunction::constant(5, Rational::one());
        assert!(matches!(
            char_map(&f, 3),
            Err(SpeciesError::DegreeExceedsTruncation { .. })
        ));
    }

    fn pseudo_random_cf(n: u32, seed: i64) -> ClassFunction {
        let values = partitions_of(n)
            .into_iter()
            .enumerate()
            .map(|(i, l)| (l, Rational::from(BigInt::from((seed + 31 * i as i64) % 7 - 3))))
            .collect();
        ClassFunction::new(n, values).unwrap()
    }

    #[test]
    fn ch_is_ring_morphism() {
        for (a, b, seed) in [(1u32, 1u32, 2i64), (2, 2, 5), (2, 3, 9), (1, 4, 11)] {
            let f = pseudo_random_cf(a, seed);
            let g = pseudo_random_cf(b, seed + 1);
            let lhs = char_map(&cauchy_product(&f, &g), 8).unwrap();
            let rhs = sym_mul(&char_map(&f, 8).unwrap(), &char_map(&g, 8).unwrap());
            assert_eq!(lhs, rhs, "degrees {a}+{b}");
        }
    }

    #[test]
    fn plethysm_identity() {
        let g = SymFunc::exp_series_positive(6);
        assert_eq!(plethysm(&SymFunc::power_sum(1, 6), &g).unwrap(), g);
    }

    #[test]
    fn plethysm_rejects_constant_term() {
        let e = SymFunc::exp_series(5);
        assert!(matches!(
            plethysm(&e, &e),
            Err(SpeciesError::NonzeroConstantTerm)
        ));
    }

    #[test]
    fn set_partitions_via_plethysm() {
        // E o E+ counts set partitions: Bell numbers 1, 1, 2, 5, 15, ...
        let e = SymFunc::exp_series(5);
        let ep = SymFunc::exp_series_positive(5);
        let composed = plethysm(&e, &ep).unwrap();
        let counts = species_counts(&composed).unwrap();
        let bell: Vec<BigInt> = [1, 1, 2, 5, 15, 52].iter().map(|&n| BigInt::from(n)).collect();
        assert_eq!(counts, bell);
        // cross-check Bell numbers by brute-force enumeration of set partitions
        for n in 0..=5usize {
            assert_eq!(counts[n], BigInt::from(count_set_partitions(n)));
        }
    }

    /// Literal enumeration of the set partitions of an n-element set.
    fn count_set_partitions(n: usize) -> u64 {
        fn rec(assignments: &mut Vec<usize>, next: usize, n: usize) -> u64 {
            if next == n {
                return 1;
            }
            let max_block = assignments.iter().copied().max().map_or(0, |m| m + 1);
            let mut total = 0;
            for b in 0..=max_block {
                assignments.push(b);
                total += rec(assignments, next + 1, n);
                assignments.pop();
            }
            total
        }
        rec(&mut Vec::new(), 0, n)
    }

    #[test]
    fn exp_counts_single_structures() {
        let counts = species_counts(&SymFunc::exp_series(6)).unwrap();
        assert!(counts.iter().all(|c| c == &BigInt::one()));
        let zero_counts = species_counts(&SymFunc::zero(4)).unwrap();
        assert!(zero_counts.iter().all(Zero::is_zero));
    }

    #[test]
    fn plethysm_associative() {
        let f = SymFunc::from_terms(
            5,
            [
                (Partition::single(1), rat(2, 1)),
                (Partition::single(2), rat(1, 3)),
                (Partition::new(vec![1, 1]).unwrap(), rat(-1, 2)),
            ],
        );
        let g = SymFunc::from_terms(
            5,
            [
                (Partition::single(1), rat(1, 1)),
                (Partition::new(vec![2, 1]).unwrap(), rat(1, 2)),
            ],
        );
        let h = SymFunc::from_terms(
            5,
            [
                (Partition::single(1), rat(-1, 1)),
                (Partition::single(3), rat(2, 1)),
            ],
        );
        let lhs = plethysm(&plethysm(&f, &g).unwrap(), &h).unwrap();
        let rhs = plethysm(&f, &plethysm(&g, &h).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rendering() {
        let f = SymFunc::from_terms(
            4,
            [
                (Partition::empty(), rat(1, 1)),
                (Partition::single(2), rat(-1, 2)),
            ],
        );
        assert_eq!(render_symfunc(&f), "1 - 1/2*p[2]");
        assert_eq!(render_symfunc(&SymFunc::zero(2)), "0");
    }
}
