//! Kauffman-bracket state sum, normalized to the Jones polynomial.
//!
//! Pinned conventions, chosen once so that the closure of `[1, 1, 1]` is the
//! right-handed trefoil with Jones value `q^-1 + q^-3 - q^-4`:
//!
//! * a positive crossing expands as `A * <vertical> + A^-1 * <cup-cap>`,
//!   a negative crossing as the mirror;
//! * loops carry `delta = -A^2 - A^-2`, a diagram with `k` loops contributes
//!   `delta^(k-1)` (so the unknot is 1);
//! * the raw bracket is multiplied by the writhe factor `(-A^3)^(-w)`;
//! * the bracket variable is eliminated by `v = A^2` (every exponent of the
//!   normalized bracket is even), with `q = v^2` as everywhere else.

use super::pd::{PlanarDiagram, UnionFind};
use crate::exact_algebra::LaurentPoly;
use thiserror::Error;

/// State expansion is `2^c`; larger diagrams are refused.
pub const MAX_BRACKET_CROSSINGS: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BracketError {
    #[error("diagram has {0} crossings; the skein oracle handles at most {MAX_BRACKET_CROSSINGS}")]
    TooManyCrossings(usize),
    #[error("diagram has no components")]
    EmptyDiagram,
}

/// Jones polynomial of an oriented link diagram via the Kauffman bracket,
/// as a Laurent polynomial in `v` (`q = v^2`).
pub fn kauffman_bracket(pd: &PlanarDiagram) -> Result<LaurentPoly, BracketError> {
    let c = pd.crossing_count();
    if c > MAX_BRACKET_CROSSINGS {
        return Err(BracketError::TooManyCrossings(c));
    }
    if pd.arc_count() == 0 && pd.free_loops() == 0 {
        return Err(BracketError::EmptyDiagram);
    }
    let delta = LaurentPoly::from_pairs([(2i64, -1i64), (-2, -1)]);
    let mut bracket = LaurentPoly::zero(); // polynomial in A
    for state in 0u32..(1u32 << c) {
        let mut uf = UnionFind::new(pd.arc_count());
        let mut a_exp: i64 = 0;
        for (k, cr) in pd.crossings().iter().enumerate() {
            // bit set = A-smoothing
            let a_smooth = state & (1 << k) != 0;
            a_exp += if a_smooth { 1 } else { -1 };
            let vertical = if cr.sign > 0 { a_smooth } else { !a_smooth };
            if vertical {
                uf.union(cr.nw, cr.sw);
                uf.union(cr.ne, cr.se);
            } else {
                uf.union(cr.nw, cr.ne);
                uf.union(cr.sw, cr.se);
            }
        }
        let loops = uf.class_count() + pd.free_loops();
        let term = delta.pow((loops - 1) as i64).expect("delta power");
        bracket += &term.shift(a_exp);
    }
    if c == 0 {
        bracket = delta.pow((pd.free_loops() - 1) as i64).expect("delta power");
    }
    // writhe normalization: (-A^3)^(-w)
    let w = pd.writhe();
    let normalized = bracket.shift(-3 * w);
    let normalized = if w % 2 == 0 { normalized } else { -normalized };
    // v = A^2; parity of exponents is guaranteed by the writhe correction
    Ok(LaurentPoly::from_pairs(normalized.terms().map(|(e, c)| {
        debug_assert!(e % 2 == 0, "normalized bracket has odd exponent {e}");
        (e / 2, c.clone())
    })))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braidknot::BraidWord;

    fn jones(n: usize, w: &[i32]) -> LaurentPoly {
        let b = BraidWord::new(n, w.to_vec()).unwrap();
        kauffman_bracket(&PlanarDiagram::markov_closure(&b)).unwrap()
    }

    fn p(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn unknot_is_one() {
        assert!(jones(1, &[]).is_one());
        assert!(jones(2, &[1]).is_one());
        assert!(jones(2, &[-1]).is_one());
    }

    #[test]
    fn two_component_unlink() {
        // delta in v
        assert_eq!(jones(2, &[]), p(&[(1, -1), (-1, -1)]));
    }

    #[test]
    fn right_trefoil() {
        // -q^-4 + q^-3 + q^-1
        assert_eq!(jones(2, &[1, 1, 1]), p(&[(-2, 1), (-6, 1), (-8, -1)]));
    }

    #[test]
    fn left_trefoil() {
        assert_eq!(jones(2, &[-1, -1, -1]), p(&[(2, 1), (6, 1), (8, -1)]));
    }

    #[test]
    fn positive_hopf_link() {
        assert_eq!(jones(2, &[1, 1]), p(&[(-1, -1), (-5, -1)]));
    }

    #[test]
    fn figure_eight() {
        // q^-2 - q^-1 + 1 - q + q^2, symmetric under mirroring
        let expected = p(&[(-4, 1), (-2, -1), (0, 1), (2, -1), (4, 1)]);
        assert_eq!(jones(3, &[1, -2, 1, -2]), expected);
        assert_eq!(jones(3, &[-1, 2, -1, 2]), expected);
    }

    #[test]
    fn reidemeister_one_changes_raw_bracket_by_writhe_factor_only() {
        // The normalized invariant is already writhe-corrected, so a kink
        // (stabilization) leaves it unchanged.
        let base = BraidWord::new(2, vec![1, 1, 1]).unwrap();
        let kinked = base.stabilize(true);
        let kinked_neg = base.stabilize(false);
        let v = kauffman_bracket(&PlanarDiagram::markov_closure(&base)).unwrap();
        assert_eq!(
            kauffman_bracket(&PlanarDiagram::markov_closure(&kinked)).unwrap(),
            v
        );
        assert_eq!(
            kauffman_bracket(&PlanarDiagram::markov_closure(&kinked_neg)).unwrap(),
            v
        );
    }

    #[test]
    fn reidemeister_two_invariance() {
        // inserting s_i s_i^-1 anywhere is an R2 move on the closure
        let with = jones(3, &[1, 2, -2, 1, 1]);
        let without = jones(3, &[1, 1, 1]);
        assert_eq!(with, without);
        assert_eq!(jones(2, &[1, -1]), jones(2, &[]));
    }

    #[test]
    fn reidemeister_three_invariance() {
        // s1 s2 s1 ~ s2 s1 s2 under the closure
        let lhs = jones(3, &[1, 2, 1, -2, 2, 2]);
        let rhs = jones(3, &[2, 1, 2, -2, 2, 2]);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn too_many_crossings_rejected() {
        let word = vec![1i32; MAX_BRACKET_CROSSINGS + 1];
        let b = BraidWord::new(2, word).unwrap();
        assert!(matches!(
            kauffman_bracket(&PlanarDiagram::markov_closure(&b)),
            Err(BracketError::TooManyCrossings(_))
        ));
    }
}
