//! Laurent polynomials in one variable `v` with big-integer coefficients.
//!
//! Convention used throughout the crate: `q = v^2`. Polynomials "in q" are
//! the Laurent polynomials supported on even exponents of `v`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

/// An element of `Z[v, v^-1]`, stored as a map from exponent to nonzero
/// coefficient. Equality is coefficient-map equality; all arithmetic is exact.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(1, 0)
    }

    /// The variable `v`.
    pub fn v() -> Self {
        LaurentPoly::monomial(1, 1)
    }

    /// The scalar `q = v^2`.
    pub fn q() -> Self {
        LaurentPoly::monomial(1, 2)
    }

    /// `q^k = v^(2k)` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        LaurentPoly::monomial(1, 2 * k)
    }

    /// `c * v^exp`.
    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let c: BigInt = coeff.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        LaurentPoly { coeffs }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        LaurentPoly::monomial(n, 0)
    }

    /// Build from (exponent, coefficient) pairs; repeated exponents are summed.
    pub fn from_pairs<I, C>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = LaurentPoly::zero();
        for (e, c) in pairs {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).map_or(false, |c| c.is_one())
    }

    /// Iterate (exponent, coefficient) in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(exp) {
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

    /// Multiply by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitute `v -> v^-1`.
    pub fn invert_variable(&self) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// A unit of `Z[v, v^-1]` is `±v^k`. Returns the inverse if `self` is one.
    pub fn unit_inverse(&self) -> Option<LaurentPoly> {
        if self.coeffs.len() != 1 {
            return None;
        }
        let (e, c) = self.coeffs.iter().next().unwrap();
        if c.is_one() {
            Some(LaurentPoly::monomial(1, -e))
        } else if (-c).is_one() {
            Some(LaurentPoly::monomial(-1, -e))
        } else {
            None
        }
    }

    pub fn is_unit(&self) -> bool {
        self.unit_inverse().is_some()
    }

    /// Integer power. Negative exponents require `self` to be a unit.
    pub fn pow(&self, n: i64) -> Option<LaurentPoly> {
        let base = if n < 0 { self.unit_inverse()? } else { self.clone() };
        let mut acc = LaurentPoly::one();
        for _ in 0..n.unsigned_abs() {
            acc = &acc * &base;
        }
        Some(acc)
    }

    /// Exact division: returns `q` with `self = q * divisor`, or `None` when
    /// no such Laurent polynomial exists.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        // Shift both to ordinary polynomials; the monomial shift of the
        // quotient is the difference of the shifts.
        let sa = self.min_exp().unwrap();
        let sb = divisor.min_exp().unwrap();
        let mut rem: BTreeMap<i64, BigInt> =
            self.coeffs.iter().map(|(e, c)| (e - sa, c.clone())).collect();
        let div: BTreeMap<i64, BigInt> =
            divisor.coeffs.iter().map(|(e, c)| (e - sb, c.clone())).collect();
        let (&ddeg, dlead) = div.iter().next_back().unwrap();
        let mut quot: BTreeMap<i64, BigInt> = BTreeMap::new();
        while let Some((&rdeg, rlead)) = rem.iter().next_back() {
            if rdeg < ddeg {
                return None;
            }
            // If the division is exact, every leading-coefficient division
            // along the way is exact as well.
            let (qc, qr) = num_integer::Integer::div_rem(rlead, dlead);
            if !qr.is_zero() {
                return None;
            }
            let qe = rdeg - ddeg;
            for (e, c) in &div {
                let prod = &qc * c;
                let entry = rem.entry(e + qe).or_insert_with(BigInt::zero);
                *entry -= prod;
                if entry.is_zero() {
                    rem.remove(&(e + qe));
                }
            }
            quot.insert(qe, qc);
        }
        Some(LaurentPoly { coeffs: quot }.shift(sa - sb))
    }

    /// Substitute `q = v^2 -> n` for an integer `n`; defined only for
    /// polynomials supported on even exponents.
    pub fn eval_q(&self, n: &BigInt) -> Option<BigInt> {
        let mut acc = BigInt::zero();
        for (e, c) in self.terms() {
            if e % 2 != 0 {
                return None;
            }
            let k = e / 2;
            if k < 0 {
                return None;
            }
            acc += c * n.pow(k as u32);
        }
        Some(acc)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in self.terms() {
            for (eb, cb) in rhs.terms() {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                $trait::$method(&self, rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.terms() {
            self.add_term(e, -c.clone());
        }
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self * rhs;
    }
}

impl From<i64> for LaurentPoly {
    fn from(n: i64) -> Self {
        LaurentPoly::from_int(n)
    }
}

/// Pinned printing format: terms in descending exponent order with explicit
/// signs, e.g. `v^2 - 2 + v^-2`. The zero polynomial prints as `0`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.coeffs.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (*e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "v")?,
                (1, false) => write!(f, "{mag}*v")?,
                (_, true) => write!(f, "v^{e}")?,
                (_, false) => write!(f, "{mag}*v^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn difference_of_squares() {
        let a = p(&[(1, 1), (0, 1)]); // v + 1
        let b = p(&[(1, 1), (0, -1)]); // v - 1
        assert_eq!(&a * &b, p(&[(2, 1), (0, -1)]));
    }

    #[test]
    fn one_is_multiplicative_identity() {
        let a = p(&[(3, 2), (-1, -5)]);
        assert_eq!(&a * &LaurentPoly::one(), a);
    }

    #[test]
    fn factored_equals_expanded() {
        // (v^3 + v) == v * (v^2 + 1)
        let lhs = p(&[(3, 1), (1, 1)]);
        let rhs = &LaurentPoly::v() * &p(&[(2, 1), (0, 1)]);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn no_zero_coefficients_stored() {
        let a = p(&[(2, 1), (0, 3)]);
        let b = p(&[(2, -1), (0, -3)]);
        assert!((&a + &b).is_zero());
        assert_eq!((&a + &b).terms().count(), 0);
    }

    #[test]
    fn units_and_inverses() {
        assert_eq!(
            LaurentPoly::monomial(-1, 3).unit_inverse(),
            Some(LaurentPoly::monomial(-1, -3))
        );
        assert!(p(&[(1, 1), (0, 1)]).unit_inverse().is_none());
        assert!(p(&[(0, 2)]).unit_inverse().is_none());
        let u = LaurentPoly::monomial(-1, 5);
        assert!((&u * &u.unit_inverse().unwrap()).is_one());
    }

    #[test]
    fn pow_negative_of_unit() {
        let u = LaurentPoly::monomial(-1, 1); // -v
        assert_eq!(u.pow(-3).unwrap(), LaurentPoly::monomial(-1, -3));
        assert_eq!(u.pow(0).unwrap(), LaurentPoly::one());
        assert!(p(&[(1, 1), (0, 1)]).pow(-1).is_none());
    }

    #[test]
    fn exact_division() {
        let a = p(&[(2, 1), (0, -1)]); // v^2 - 1
        let b = p(&[(1, 1), (0, 1)]); // v + 1
        assert_eq!(a.div_exact(&b), Some(p(&[(1, 1), (0, -1)])));
        assert_eq!(a.div_exact(&p(&[(1, 1), (0, 2)])), None);
        // Laurent shift: (v + v^-1) / v^-1 = v^2 + 1
        let c = p(&[(1, 1), (-1, 1)]);
        assert_eq!(
            c.div_exact(&LaurentPoly::monomial(1, -1)),
            Some(p(&[(2, 1), (0, 1)]))
        );
        assert_eq!(LaurentPoly::zero().div_exact(&b), Some(LaurentPoly::zero()));
    }

    #[test]
    fn eval_q_even_support_only() {
        let q2 = p(&[(4, 1), (2, 1), (0, 1)]); // q^2 + q + 1
        assert_eq!(q2.eval_q(&BigInt::from(2)), Some(BigInt::from(7)));
        assert_eq!(LaurentPoly::v().eval_q(&BigInt::from(2)), None);
    }

    #[test]
    fn display_format() {
        assert_eq!(p(&[]).to_string(), "0");
        assert_eq!(
            p(&[(-8, -1), (-6, 1), (-2, 1)]).to_string(),
            "v^-2 + v^-6 - v^-8"
        );
        assert_eq!(p(&[(1, -2), (0, 1)]).to_string(), "-2*v + 1");
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec(((-6i64..=6), (-9i64..=9)), 0..6)
            .prop_map(|pairs| LaurentPoly::from_pairs(pairs))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &LaurentPoly::zero(), a.clone());
            prop_assert_eq!(&(&a - &a), &LaurentPoly::zero());
        }

        #[test]
        fn division_inverts_multiplication(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.div_exact(&b), Some(a));
        }
    }
}
