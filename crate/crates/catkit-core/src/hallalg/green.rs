//! Green's convolution product on class functions of general linear groups,
//! evaluated by literal brute force:
//!
//! ```text
//! (f • g)(C, sigma) = sum over sigma-invariant subspaces V of dim f.n of
//!                     f(V, sigma|V) * g(C/V, sigma/V)
//! ```
//!
//! For each class representative `sigma` of `GL_n(F_q)` the invariant
//! subspaces are enumerated outright; `sigma|V` is written in the RREF basis
//! of `V` and `sigma/V` in the non-pivot quotient coordinates. The resulting
//! classes are basis-independent, so lookups in the smaller class tables are
//! well defined.

use super::fq::{FqField, FqMat, HallError};
use super::glconj::GlClassTable;
use super::subspace::enumerate_subspaces;
use crate::exact_algebra::Rational;
use num_traits::Zero;

/// A rational class function on `GL_n(F_q)`, stored by class id of the
/// accompanying table.
#[derive(Debug, Clone, PartialEq)]
pub struct GlClassFunction {
    n: usize,
    q: u8,
    values: Vec<Rational>,
}

impl GlClassFunction {
    pub fn new(table: &GlClassTable, values: Vec<Rational>) -> Result<Self, HallError> {
        if values.len() != table.class_count() {
            return Err(HallError::DegreeMismatch);
        }
        Ok(GlClassFunction { n: table.degree(), q: table.field_order(), values })
    }

    pub fn constant(table: &GlClassTable, value: Rational) -> Self {
        GlClassFunction {
            n: table.degree(),
            q: table.field_order(),
            values: vec![value; table.class_count()],
        }
    }

    /// Indicator of a single class.
    pub fn delta(table: &GlClassTable, class: usize) -> Self {
        let mut values = vec![Rational::zero(); table.class_count()];
        values[class] = Rational::from_integer(1.into());
        GlClassFunction { n: table.degree(), q: table.field_order(), values }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn field_order(&self) -> u8 {
        self.q
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Rational {
        &self.values[class]
    }
}

/// The matrix of `sigma` restricted to an invariant subspace, in the RREF
/// basis; `None` when the subspace is not invariant.
fn restrict_to_subspace(
    field: &FqField,
    sigma: &FqMat,
    v: &super::subspace::Subspace,
) -> Option<FqMat> {
    let k = v.dim();
    let mut out = FqMat::zero(k, k);
    for i in 0..k {
        // sigma acts on column vectors; basis rows are vectors
        let image = sigma_apply(field, sigma, v.basis().row(i));
        let coords = v.coordinates(field, &image)?;
        for (r, &c) in coords.iter().enumerate() {
            out[(r, i)] = c;
        }
    }
    Some(out)
}

/// The induced map on the quotient, in non-pivot coordinates.
fn quotient_action(
    field: &FqField,
    sigma: &FqMat,
    v: &super::subspace::Subspace,
) -> FqMat {
    let cop = v.copivots();
    let b = cop.len();
    let mut out = FqMat::zero(b, b);
    for (j, &c) in cop.iter().enumerate() {
        let mut e = vec![0u8; v.ambient()];
        e[c] = 1;
        let image = sigma_apply(field, sigma, &e);
        let qc = v.quotient_coords(field, &image);
        for (r, &x) in qc.iter().enumerate() {
            out[(r, j)] = x;
        }
    }
    out
}

fn sigma_apply(field: &FqField, sigma: &FqMat, v: &[u8]) -> Vec<u8> {
    sigma.mul_vec(field, v)
}

/// Green's convolution. The degrees add; both inputs must share the field.
pub fn green_convolution(
    f: &GlClassFunction,
    g: &GlClassFunction,
    field: &FqField,
) -> Result<GlClassFunction, HallError> {
    if f.field_order() != field.order() || g.field_order() != field.order() {
        return Err(HallError::DegreeMismatch);
    }
    let n = f.degree() + g.degree();
    let table_n = GlClassTable::new(n, field)?;
    let table_f = GlClassTable::new(f.degree(), field)?;
    let table_g = GlClassTable::new(g.degree(), field)?;
    let subspaces = enumerate_subspaces(n, f.degree(), field)?;
    let mut values = Vec::with_capacity(table_n.class_count());
    for class in 0..table_n.class_count() {
        let sigma = table_n.representative(class);
        let mut acc = Rational::zero();
        for v in &subspaces {
            let Some(restricted) = restrict_to_subspace(field, sigma, v) else {
                continue;
            };
            let qaction = quotient_action(field, sigma, v);
            let cf = table_f.class_of(&restricted).expect("restriction is invertible");
            let cg = table_g.class_of(&qaction).expect("quotient action is invertible");
            acc += f.value(cf) * g.value(cg);
        }
        values.push(acc);
    }
    GlClassFunction::new(&table_n, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    #[test]
    fn unit_law() {
        let field = FqField::new(2).unwrap();
        let t0 = GlClassTable::new(0, &field).unwrap();
        let t1 = GlClassTable::new(1, &field).unwrap();
        let unit = GlClassFunction::constant(&t0, rat(1));
        let f = GlClassFunction::new(&t1, vec![rat(5)]).unwrap();
        assert_eq!(green_convolution(&unit, &f, &field).unwrap(), f);
        assert_eq!(green_convolution(&f, &unit, &field).unwrap(), f);
    }

    #[test]
    fn ones_product_counts_invariant_lines() {
        // both factors constant 1 of degree 1 over F_2: at the identity of
        // GL_2(F_2) every one of the 3 lines is invariant
        let field = FqField::new(2).unwrap();
        let t1 = GlClassTable::new(1, &field).unwrap();
        let t2 = GlClassTable::new(2, &field).unwrap();
        let one = GlClassFunction::constant(&t1, rat(1));
        let prod = green_convolution(&one, &one, &field).unwrap();
        let id_class = t2.class_of(&FqMat::identity(2)).unwrap();
        assert_eq!(prod.value(id_class), &rat(3));
    }

    #[test]
    fn commutative_over_f2_and_f3() {
        for q in [2u8, 3] {
            let field = FqField::new(q).unwrap();
            let t1 = GlClassTable::new(1, &field).unwrap();
            for i in 0..t1.class_count() {
                for j in 0..t1.class_count() {
                    let f = GlClassFunction::delta(&t1, i);
                    let g = GlClassFunction::delta(&t1, j);
                    let fg = green_convolution(&f, &g, &field).unwrap();
                    let gf = green_convolution(&g, &f, &field).unwrap();
                    assert_eq!(fg, gf, "q={q} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn restriction_class_is_basis_independent() {
        // restrict sigma to an invariant plane using two different bases and
        // compare classes
        let field = FqField::new(2).unwrap();
        let t2 = GlClassTable::new(2, &field).unwrap();
        let sigma = FqMat::from_rows(vec![vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        let v1 = super::super::subspace::Subspace::from_spanning(
            &field,
            3,
            vec![vec![1, 0, 0], vec![0, 1, 0]],
        );
        let r1 = restrict_to_subspace(&field, &sigma, &v1).unwrap();
        // same plane; restriction computed through a conjugated copy
        let g = FqMat::from_rows(vec![vec![1, 1], vec![0, 1]]);
        let g_inv = g.inverse(&field).unwrap();
        let r2 = g.mul(&field, &r1).mul(&field, &g_inv);
        assert_eq!(t2.class_of(&r1), t2.class_of(&r2));
    }
}
