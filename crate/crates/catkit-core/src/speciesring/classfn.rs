//! Class functions on symmetric groups, keyed by cycle type.
//!
//! The product of the Grothendieck ring is the convolution
//! `(f · g)(A, sigma) = sum over sigma-invariant subsets S of A of
//! f(S, sigma|S) * g(A\S, sigma|complement)`. An invariant subset is a union
//! of cycles, so the sum collapses to a cycle-multiset formula; both the
//! formula and the literal subset sum are implemented, the latter serving as
//! an independent oracle.

use super::partition::{partitions_of, Partition};
use crate::exact_algebra::Rational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpeciesError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: u32, right: u32 },
    #[error("value table must cover exactly the partitions of {n}")]
    BadSupport { n: u32 },
    #[error("degree {degree} exceeds truncation {truncation}")]
    DegreeExceedsTruncation { degree: u32, truncation: u32 },
    #[error("plethysm argument must have zero constant term")]
    NonzeroConstantTerm,
    #[error("count at degree {degree} is not an integer: {value}")]
    NonIntegralCount { degree: usize, value: Rational },
}

/// A rational-valued class function of a fixed degree `n`; its value table is
/// keyed by all partitions of `n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassFunction {
    n: u32,
    values: BTreeMap<Partition, Rational>,
}

impl ClassFunction {
    /// `values` must assign a value to every partition of `n` (missing keys
    /// are rejected rather than defaulted).
    pub fn new(n: u32, values: BTreeMap<Partition, Rational>) -> Result<Self, SpeciesError> {
        let expected = partitions_of(n);
        if values.len() != expected.len() || expected.iter().any(|l| !values.contains_key(l)) {
            return Err(SpeciesError::BadSupport { n });
        }
        Ok(ClassFunction { n, values })
    }

    /// Constant class function of degree `n`.
    pub fn constant(n: u32, value: Rational) -> Self {
        let values = partitions_of(n).into_iter().map(|l| (l, value.clone())).collect();
        ClassFunction { n, values }
    }

    /// The unit: degree 0 with value 1.
    pub fn unit() -> Self {
        ClassFunction::constant(0, Rational::one())
    }

    /// Sign character (degree n): `(-1)^(n - #cycles)`.
    pub fn sign(n: u32) -> Self {
        let values = partitions_of(n)
            .into_iter()
            .map(|l| {
                let exp = (n as i64) - (l.len() as i64);
                let v = if exp % 2 == 0 { Rational::one() } else { -Rational::one() };
                (l, v)
            })
            .collect();
        ClassFunction { n, values }
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn value(&self, lambda: &Partition) -> Rational {
        self.values.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn values(&self) -> &BTreeMap<Partition, Rational> {
        &self.values
    }
}

fn binomial(n: u32, k: u32) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let mut acc = Rational::one();
    for i in 0..k {
        acc *= Rational::new((n - i).into(), (i + 1).into());
    }
    acc
}

/// Cauchy product via the cycle-multiset formula: the value at `lambda` sums
/// over sub-multisets `mu` of `lambda` of size `f.n`, weighting by the number
/// of ways to choose which cycles form `mu`.
pub fn cauchy_product(f: &ClassFunction, g: &ClassFunction) -> ClassFunction {
    let n = f.n + g.n;
    let mut values = BTreeMap::new();
    for lambda in partitions_of(n) {
        let mut acc = Rational::zero();
        for mu in sub_multisets(&lambda, f.n) {
            let nu = lambda.subtract(&mu).expect("mu is a sub-multiset");
            let mut ways = Rational::one();
            for (part, m_mu) in mu.multiplicities() {
                ways *= binomial(lambda.multiplicity(part), m_mu);
            }
            acc += ways * f.value(&mu) * g.value(&nu);
        }
        values.insert(lambda, acc);
    }
    ClassFunction { n, values }
}

/// All sub-multisets of `lambda`'s parts summing to `target`.
fn sub_multisets(lambda: &Partition, target: u32) -> Vec<Partition> {
    let mults = lambda.multiplicities();
    let mut out = Vec::new();
    let mut chosen: Vec<u32> = Vec::new();
    fn rec(
        mults: &[(u32, u32)],
        idx: usize,
        remaining: u32,
        chosen: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition::new(chosen.clone()).expect("positive parts"));
            return;
        }
        if idx >= mults.len() {
            return;
        }
        let (part, mult) = mults[idx];
        let max_take = (remaining / part).min(mult);
        for take in 0..=max_take {
            for _ in 0..take {
                chosen.push(part);
            }
            rec(mults, idx + 1, remaining - take * part, chosen, out);
            for _ in 0..take {
                chosen.pop();
            }
        }
    }
    rec(&mults, 0, target, &mut chosen, &mut out);
    out
}

/// Literal evaluation of the convolution as a sum over invariant subsets of
/// an `n`-element set: build a permutation of cycle type `lambda`, enumerate
/// all `2^n` subsets, keep the invariant ones. Exponential; used as the
/// independent oracle for [`cauchy_product`].
pub fn cauchy_product_subset_oracle(f: &ClassFunction, g: &ClassFunction) -> ClassFunction {
    let n = f.n + g.n;
    assert!(n <= 16, "subset oracle is 2^n");
    let mut values = BTreeMap::new();
    for lambda in partitions_of(n) {
        // a concrete permutation with this cycle type
        let mut perm = vec![0usize; n as usize];
        let mut start = 0usize;
        for &part in lambda.parts() {
            let part = part as usize;
            for k in 0..part {
                perm[start + k] = start + (k + 1) % part;
            }
            start += part;
        }
        let mut acc = Rational::zero();
        for mask in 0u32..(1u32 << n) {
            let invariant = (0..n as usize)
                .all(|i| (mask >> i) & 1 == 0 || (mask >> perm[i]) & 1 == 1);
            if !invariant {
                continue;
            }
            if mask.count_ones() != f.n {
                continue;
            }
            let inside = cycle_type_on_subset(&perm, mask, true);
            let outside = cycle_type_on_subset(&perm, mask, false);
            acc += f.value(&inside) * g.value(&outside);
        }
        values.insert(lambda, acc);
    }
    ClassFunction { n, values }
}

fn cycle_type_on_subset(perm: &[usize], mask: u32, inside: bool) -> Partition {
    let member = |i: usize| ((mask >> i) & 1 == 1) == inside;
    let mut seen = vec![false; perm.len()];
    let mut parts = Vec::new();
    for i in 0..perm.len() {
        if !member(i) || seen[i] {
            continue;
        }
        let mut len = 0u32;
        let mut j = i;
        while !seen[j] {
            seen[j] = true;
            len += 1;
            j = perm[j];
        }
        parts.push(len);
    }
    Partition::new(parts).expect("cycle lengths are positive")
}

/// Pointwise product of two class functions of equal degree.
pub fn hadamard_product(
    f: &ClassFunction,
    g: &ClassFunction,
) -> Result<ClassFunction, SpeciesError> {
    if f.n != g.n {
        return Err(SpeciesError::DegreeMismatch { left: f.n, right: g.n });
    }
    let values = f
        .values
        .iter()
        .map(|(l, v)| (l.clone(), v * g.value(l)))
        .collect();
    Ok(ClassFunction { n: f.n, values })
}
