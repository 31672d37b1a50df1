//! Quadratic Hecke relations for braiding operators on cuspidal degrees.
//!
//! For cuspidal degrees `r` and `s` the braiding satisfies, exactly in
//! `Z[v, v^-1]` with `q = v^2`:
//!
//! * distinct objects: `y_ts ∘ y_st = q^(r*s) * 1`;
//! * equal objects:    `y^2 = q^(r(r-1)/2) (q^r - 1) * y + q^(r^2) * 1`.

use super::ybop::YbOp;
use crate::exact_algebra::{LaurentPoly, SparseMat};
use std::collections::BTreeMap;

/// Cuspidal degrees entering the Hecke coefficients. The scalar `q` is the
/// global `v^2`. For the `Equal` case only `r` is consulted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HeckeParams {
    pub r: u32,
    pub s: u32,
}

impl HeckeParams {
    pub fn equal(r: u32) -> Self {
        HeckeParams { r, s: r }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HeckeCase {
    /// `R^2 = q^(rs) * 1` (two non-isomorphic cuspidals carried by one space).
    Distinct,
    /// `R^2 = q^(r(r-1)/2)(q^r - 1) * R + q^(r^2) * 1`.
    Equal,
}

/// Coefficient of the linear term in the equal case.
pub fn hecke_linear_coeff(r: u32) -> LaurentPoly {
    let qr = LaurentPoly::q_pow(r as i64);
    let factor = &qr - &LaurentPoly::one();
    &LaurentPoly::q_pow((r as i64 * (r as i64 - 1)) / 2) * &factor
}

/// Exact verification of the quadratic relation for the given case.
pub fn check_hecke(op: &YbOp, params: HeckeParams, case: HeckeCase) -> bool {
    let r = op.matrix();
    let n = r.nrows();
    let r2 = r.compose(r).expect("square");
    match case {
        HeckeCase::Distinct => {
            let rhs = SparseMat::identity(n)
                .scale(&LaurentPoly::q_pow(params.r as i64 * params.s as i64));
            r2 == rhs
        }
        HeckeCase::Equal => {
            let lin = r.scale(&hecke_linear_coeff(params.r));
            let const_term = SparseMat::identity(n)
                .scale(&LaurentPoly::q_pow((params.r as i64) * (params.r as i64)));
            match lin.add(&const_term) {
                Ok(rhs) => r2 == rhs,
                Err(_) => false,
            }
        }
    }
}

/// A family of objects `X_s` with operators `y_{s,t} : X_s (x) X_t ->
/// X_t (x) X_s` and scalar tables `d` (symmetric, nonzero) and `e`.
#[derive(Debug, Clone)]
pub struct HeckeFamily {
    pub dims: Vec<usize>,
    /// `y[(s, t)]` must be a `dims[t]*dims[s]`-square matrix.
    pub y: BTreeMap<(usize, usize), SparseMat>,
    pub d: BTreeMap<(usize, usize), LaurentPoly>,
    pub e: Vec<LaurentPoly>,
}

impl HeckeFamily {
    /// Family of flips, satisfying the relations with `d ≡ 1`, `e ≡ 0`.
    pub fn flips(dims: &[usize]) -> Self {
        let mut y = BTreeMap::new();
        let mut d = BTreeMap::new();
        for (s, &ds) in dims.iter().enumerate() {
            for (t, &dt) in dims.iter().enumerate() {
                y.insert((s, t), SparseMat::flip(ds, dt));
                d.insert((s, t), LaurentPoly::one());
            }
        }
        HeckeFamily {
            dims: dims.to_vec(),
            y,
            d,
            e: vec![LaurentPoly::zero(); dims.len()],
        }
    }
}

/// Verifies the algebroid relations
/// `y_ts ∘ y_st = d(s,t) * 1` for `s != t` and
/// `y_ss^2 = e(s) * y_ss + d(s,s) * 1`, exactly.
pub fn check_hecke_algebroid(family: &HeckeFamily) -> bool {
    let k = family.dims.len();
    for s in 0..k {
        for t in 0..k {
            let (Some(d_st), Some(y_st)) = (family.d.get(&(s, t)), family.y.get(&(s, t))) else {
                return false;
            };
            if family.d.get(&(t, s)) != Some(d_st) {
                return false;
            }
            let n = family.dims[s] * family.dims[t];
            if y_st.nrows() != n || y_st.ncols() != n {
                return false;
            }
            if s != t {
                let Some(y_ts) = family.y.get(&(t, s)) else { return false };
                let Ok(prod) = y_ts.compose(y_st) else { return false };
                if prod != SparseMat::identity(n).scale(d_st) {
                    return false;
                }
            } else {
                let sq = y_st.compose(y_st).expect("square");
                let rhs = y_st
                    .scale(&family.e[s])
                    .add(&SparseMat::identity(n).scale(d_st))
                    .expect("same shape");
                if sq != rhs {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ybrep::builtin_jones;

    #[test]
    fn builtin_jones_satisfies_hecke_r1() {
        // R^2 = (q - 1) R + q at r = 1
        let op = builtin_jones().into_yb();
        assert!(check_hecke(&op, HeckeParams::equal(1), HeckeCase::Equal));
        assert_eq!(
            hecke_linear_coeff(1),
            LaurentPoly::from_pairs([(2i64, 1i64), (0, -1)])
        );
    }

    #[test]
    fn identity_is_distinct_case_at_rs_zero() {
        let op = YbOp::identity(2);
        assert!(check_hecke(&op, HeckeParams { r: 0, s: 0 }, HeckeCase::Distinct));
    }

    #[test]
    fn flip_squares_to_identity() {
        let op = YbOp::flip(3);
        assert!(check_hecke(&op, HeckeParams { r: 0, s: 0 }, HeckeCase::Distinct));
        // but the equal case at r = 1 fails for the flip
        assert!(!check_hecke(&op, HeckeParams::equal(1), HeckeCase::Equal));
    }

    #[test]
    fn single_object_jones_algebroid() {
        let op = builtin_jones().into_yb();
        let mut y = BTreeMap::new();
        y.insert((0, 0), op.matrix().clone());
        let mut d = BTreeMap::new();
        d.insert((0, 0), LaurentPoly::q());
        let family = HeckeFamily {
            dims: vec![2],
            y,
            d,
            e: vec![hecke_linear_coeff(1)],
        };
        assert!(check_hecke_algebroid(&family));
    }

    #[test]
    fn flip_family_passes() {
        assert!(check_hecke_algebroid(&HeckeFamily::flips(&[2, 3])));
    }

    #[test]
    fn wrong_e_fails() {
        let mut family = HeckeFamily::flips(&[2, 2]);
        family.e[0] = LaurentPoly::one();
        assert!(!check_hecke_algebroid(&family));
    }
}
