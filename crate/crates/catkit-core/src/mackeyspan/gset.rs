//! Finite G-sets as explicit action tables, orbit analysis, and Burnside
//! multiplication with a table-of-marks cross-check.

use super::group::{FiniteGroup, GroupError, SubgroupLattice};
use std::collections::BTreeMap;

/// A finite left G-set: `action[g][x]` is `g · x`. Action axioms are checked
/// at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GSet {
    size: usize,
    action: Vec<Vec<usize>>,
}

impl GSet {
    pub fn new(group: &FiniteGroup, action: Vec<Vec<usize>>) -> Result<GSet, GroupError> {
        if action.len() != group.order() {
            return Err(GroupError::MalformedTable);
        }
        let size = action.first().map_or(0, |row| row.len());
        if action.iter().any(|row| row.len() != size || row.iter().any(|&x| x >= size)) {
            return Err(GroupError::MalformedTable);
        }
        for x in 0..size {
            if action[group.identity()][x] != x {
                return Err(GroupError::AxiomViolation("identity must act trivially"));
            }
        }
        for g in group.elements() {
            for h in group.elements() {
                let gh = group.mul(g, h);
                for x in 0..size {
                    if action[gh][x] != action[g][action[h][x]] {
                        return Err(GroupError::AxiomViolation("action compatibility"));
                    }
                }
            }
        }
        Ok(GSet { size, action })
    }

    /// The empty G-set.
    pub fn empty(group: &FiniteGroup) -> GSet {
        GSet { size: 0, action: vec![Vec::new(); group.order()] }
    }

    /// One fixed point.
    pub fn point(group: &FiniteGroup) -> GSet {
        GSet { size: 1, action: vec![vec![0]; group.order()] }
    }

    /// Left cosets of a subgroup under left translation. Points are cosets
    /// ordered by their minimal element; the identity coset is point 0.
    pub fn coset_space(group: &FiniteGroup, subgroup: &[usize]) -> GSet {
        let mut coset_of = vec![usize::MAX; group.order()];
        let mut reps: Vec<usize> = Vec::new();
        for g in group.elements() {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(g);
            for &h in subgroup {
                coset_of[group.mul(g, h)] = id;
            }
        }
        let size = reps.len();
        let mut action = vec![vec![0usize; size]; group.order()];
        for g in group.elements() {
            for (i, &rep) in reps.iter().enumerate() {
                action[g][i] = coset_of[group.mul(g, rep)];
            }
        }
        GSet { size, action }
    }

    pub fn regular(group: &FiniteGroup) -> GSet {
        GSet::coset_space(group, &[group.identity()])
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn apply(&self, g: usize, x: usize) -> usize {
        self.action[g][x]
    }

    pub fn action(&self) -> &Vec<Vec<usize>> {
        &self.action
    }

    /// Product with diagonal action; point `(x, y)` has index
    /// `x * other.size + y`.
    pub fn product(&self, group: &FiniteGroup, other: &GSet) -> GSet {
        let size = self.size * other.size;
        let mut action = vec![vec![0usize; size]; group.order()];
        for g in group.elements() {
            for x in 0..self.size {
                for y in 0..other.size {
                    action[g][x * other.size + y] =
                        self.apply(g, x) * other.size + other.apply(g, y);
                }
            }
        }
        GSet { size, action }
    }

    /// Disjoint union; `other`'s points are shifted by `self.size`.
    pub fn disjoint_union(&self, group: &FiniteGroup, other: &GSet) -> GSet {
        let size = self.size + other.size;
        let mut action = vec![vec![0usize; size]; group.order()];
        for g in group.elements() {
            for x in 0..self.size {
                action[g][x] = self.apply(g, x);
            }
            for y in 0..other.size {
                action[g][self.size + y] = self.size + other.apply(g, y);
            }
        }
        GSet { size, action }
    }

    /// Orbits as sorted point lists, ordered by minimal point.
    pub fn orbits(&self, group: &FiniteGroup) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.size];
        let mut out = Vec::new();
        for x in 0..self.size {
            if seen[x] {
                continue;
            }
            let mut orbit: Vec<usize> = group.elements().map(|g| self.apply(g, x)).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &y in &orbit {
                seen[y] = true;
            }
            out.push(orbit);
        }
        out
    }

    /// Sorted stabilizer elements of a point.
    pub fn stabilizer(&self, group: &FiniteGroup, x: usize) -> Vec<usize> {
        group.elements().filter(|&g| self.apply(g, x) == x).collect()
    }

    /// Fixed points of a subgroup.
    pub fn fixed_points(&self, subgroup: &[usize]) -> Vec<usize> {
        (0..self.size)
            .filter(|&x| subgroup.iter().all(|&g| self.action[g][x] == x))
            .collect()
    }
}

/// A multiset of transitive G-set types `[G/H]`, keyed by subgroup
/// conjugacy class id in a [`SubgroupLattice`].
pub type OrbitTypeMultiset = BTreeMap<usize, usize>;

/// Decompose a G-set into orbit types by computing stabilizers directly.
pub fn orbit_type_decomposition(
    group: &FiniteGroup,
    lattice: &SubgroupLattice,
    x: &GSet,
) -> OrbitTypeMultiset {
    let mut out = OrbitTypeMultiset::new();
    for orbit in x.orbits(group) {
        let stab = x.stabilizer(group, orbit[0]);
        let id = lattice.id_of(&stab).expect("stabilizer is a subgroup");
        *out.entry(lattice.class_of(id)).or_insert(0) += 1;
    }
    out
}

/// Burnside multiplication: the orbit-type multiset of the product with
/// diagonal action.
pub fn burnside_mul(
    group: &FiniteGroup,
    lattice: &SubgroupLattice,
    x: &GSet,
    y: &GSet,
) -> OrbitTypeMultiset {
    orbit_type_decomposition(group, lattice, &x.product(group, y))
}

/// The table of marks: `marks[i][j] = #fixed points of H_j on G/H_i`, with
/// classes in lattice order (increasing subgroup size).
pub fn table_of_marks(group: &FiniteGroup, lattice: &SubgroupLattice) -> Vec<Vec<usize>> {
    let classes = lattice.class_count();
    let mut table = vec![vec![0usize; classes]; classes];
    for i in 0..classes {
        let gh = GSet::coset_space(group, lattice.elements_of(lattice.class_rep(i)));
        for j in 0..classes {
            table[i][j] = gh.fixed_points(lattice.elements_of(lattice.class_rep(j))).len();
        }
    }
    table
}

/// Independent route to the orbit-type multiset: count fixed points of every
/// subgroup class, then invert the (triangular) table of marks.
pub fn decompose_via_marks(
    group: &FiniteGroup,
    lattice: &SubgroupLattice,
    x: &GSet,
) -> OrbitTypeMultiset {
    let classes = lattice.class_count();
    let table = table_of_marks(group, lattice);
    let marks: Vec<usize> = (0..classes)
        .map(|j| x.fixed_points(lattice.elements_of(lattice.class_rep(j))).len())
        .collect();
    // process classes by decreasing subgroup order: marks of G/H vanish on
    // subgroups not subconjugate to H
    let mut order: Vec<usize> = (0..classes).collect();
    order.sort_by_key(|&c| std::cmp::Reverse(lattice.elements_of(lattice.class_rep(c)).len()));
    let mut mult = vec![0usize; classes];
    let mut residual = marks;
    for &c in &order {
        let diag = table[c][c];
        debug_assert!(diag > 0);
        let m = residual[c] / diag;
        debug_assert_eq!(residual[c] % diag, 0, "marks inversion must be exact");
        mult[c] = m;
        if m > 0 {
            for j in 0..classes {
                residual[j] -= m * table[c][j];
            }
        }
    }
    mult.into_iter()
        .enumerate()
        .filter(|&(_, m)| m > 0)
        .map(|(c, m)| (c, m))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> (FiniteGroup, SubgroupLattice) {
        let g = FiniteGroup::symmetric(3);
        let lat = SubgroupLattice::new(&g);
        (g, lat)
    }

    #[test]
    fn coset_space_sizes() {
        let (g, lat) = s3();
        for id in 0..lat.len() {
            let x = GSet::coset_space(&g, lat.elements_of(id));
            assert_eq!(x.size(), g.order() / lat.elements_of(id).len());
        }
    }

    #[test]
    fn bad_action_rejected() {
        let g = FiniteGroup::cyclic(2);
        // non-identity action of the identity element
        assert!(GSet::new(&g, vec![vec![1, 0], vec![0, 1]]).is_err());
    }

    #[test]
    fn regular_action_is_free_and_transitive() {
        let g = FiniteGroup::dihedral(3);
        let r = GSet::regular(&g);
        assert_eq!(r.orbits(&g).len(), 1);
        for x in 0..r.size() {
            assert_eq!(r.stabilizer(&g, x), vec![g.identity()]);
        }
    }

    #[test]
    fn free_orbits_of_c2_squared() {
        // [C2/e] * [C2/e] = 2 [C2/e]
        let g = FiniteGroup::cyclic(2);
        let lat = SubgroupLattice::new(&g);
        let free = GSet::regular(&g);
        let prod = burnside_mul(&g, &lat, &free, &free);
        let trivial_class = lat.class_of(lat.id_of(&[0]).unwrap());
        assert_eq!(prod.get(&trivial_class), Some(&2));
        assert_eq!(prod.len(), 1);
    }

    #[test]
    fn point_is_the_unit() {
        let (g, lat) = s3();
        for id in 0..lat.len() {
            let x = GSet::coset_space(&g, lat.elements_of(id));
            let lhs = burnside_mul(&g, &lat, &x, &GSet::point(&g));
            assert_eq!(lhs, orbit_type_decomposition(&g, &lat, &x));
        }
    }

    #[test]
    fn transversal_times_sylow_is_free_in_s3() {
        // [S3/C2] * [S3/C3] = [S3/e]
        let (g, lat) = s3();
        let c2 = (0..lat.len()).find(|&i| lat.elements_of(i).len() == 2).unwrap();
        let c3 = (0..lat.len()).find(|&i| lat.elements_of(i).len() == 3).unwrap();
        let x = GSet::coset_space(&g, lat.elements_of(c2));
        let y = GSet::coset_space(&g, lat.elements_of(c3));
        let prod = burnside_mul(&g, &lat, &x, &y);
        let trivial_class = lat.class_of(lat.id_of(&[g.identity()]).unwrap());
        assert_eq!(prod.get(&trivial_class), Some(&1));
        assert_eq!(prod.values().sum::<usize>(), 1);
    }

    #[test]
    fn burnside_mul_is_commutative_and_unital() {
        let (g, lat) = s3();
        let a = GSet::coset_space(&g, lat.elements_of(1));
        let b = GSet::coset_space(&g, lat.elements_of(4));
        assert_eq!(burnside_mul(&g, &lat, &a, &b), burnside_mul(&g, &lat, &b, &a));
    }

    #[test]
    fn marks_route_agrees_with_direct_decomposition() {
        for (name, g) in FiniteGroup::catalog_up_to_order_8() {
            let lat = SubgroupLattice::new(&g);
            for i in 0..lat.len() {
                for j in 0..lat.len() {
                    let x = GSet::coset_space(&g, lat.elements_of(i));
                    let y = GSet::coset_space(&g, lat.elements_of(j));
                    let prod = x.product(&g, &y);
                    assert_eq!(
                        orbit_type_decomposition(&g, &lat, &prod),
                        decompose_via_marks(&g, &lat, &prod),
                        "{name}: G/H{i} x G/H{j}"
                    );
                }
            }
        }
    }

    #[test]
    fn disjoint_union_adds_decompositions() {
        let (g, lat) = s3();
        let a = GSet::coset_space(&g, lat.elements_of(2));
        let b = GSet::coset_space(&g, lat.elements_of(0));
        let u = a.disjoint_union(&g, &b);
        let mut expected = orbit_type_decomposition(&g, &lat, &a);
        for (c, m) in orbit_type_decomposition(&g, &lat, &b) {
            *expected.entry(c).or_insert(0) += m;
        }
        assert_eq!(orbit_type_decomposition(&g, &lat, &u), expected);
    }
}
