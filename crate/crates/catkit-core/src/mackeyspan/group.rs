//! Finite groups as multiplication tables, their subgroup lattices, and
//! double cosets.

use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

/// Everything here enumerates subgroups; keep groups small.
pub const MAX_GROUP_ORDER: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("multiplication table is not square or references out-of-range elements")]
    MalformedTable,
    #[error("group axiom violated: {0}")]
    AxiomViolation(&'static str),
    #[error("group order {0} exceeds cap {MAX_GROUP_ORDER}")]
    TooLarge(usize),
    #[error("the given elements do not form a subgroup")]
    NotASubgroup,
}

/// A finite group given by its full multiplication table. Axioms are checked
/// at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
    identity: usize,
}

impl FiniteGroup {
    pub fn new(mul: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let order = mul.len();
        if order == 0 || order > MAX_GROUP_ORDER {
            return Err(if order == 0 {
                GroupError::MalformedTable
            } else {
                GroupError::TooLarge(order)
            });
        }
        if mul.iter().any(|row| row.len() != order || row.iter().any(|&x| x >= order)) {
            return Err(GroupError::MalformedTable);
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|a| mul[e][a] == a && mul[a][e] == a))
            .ok_or(GroupError::AxiomViolation("no identity element"))?;
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(GroupError::AxiomViolation("associativity"));
                    }
                }
            }
        }
        let mut inv = vec![usize::MAX; order];
        for a in 0..order {
            inv[a] = (0..order)
                .find(|&b| mul[a][b] == identity && mul[b][a] == identity)
                .ok_or(GroupError::AxiomViolation("missing inverse"))?;
        }
        Ok(FiniteGroup { order, mul, inv, identity })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn conj(&self, g: usize, h: usize) -> usize {
        // g h g^-1
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.order
    }

    pub fn table(&self) -> &Vec<Vec<usize>> {
        &self.mul
    }

    /// The cyclic group of order `n`.
    pub fn cyclic(n: usize) -> FiniteGroup {
        let mul = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::new(mul).expect("cyclic table is a group")
    }

    /// Direct product, elements indexed `a * |H| + b`.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
        let n = g.order * h.order;
        let mut mul = vec![vec![0usize; n]; n];
        for a1 in 0..g.order {
            for b1 in 0..h.order {
                for a2 in 0..g.order {
                    for b2 in 0..h.order {
                        let x = a1 * h.order + b1;
                        let y = a2 * h.order + b2;
                        mul[x][y] = g.mul(a1, a2) * h.order + h.mul(b1, b2);
                    }
                }
            }
        }
        FiniteGroup::new(mul).expect("product table is a group")
    }

    pub fn klein_four() -> FiniteGroup {
        let c2 = FiniteGroup::cyclic(2);
        FiniteGroup::direct_product(&c2, &c2)
    }

    /// Symmetric group on `n <= 4` letters, elements in lexicographic order
    /// of their image tuples.
    pub fn symmetric(n: usize) -> FiniteGroup {
        assert!(n <= 4, "table grows as n!");
        let perms = all_permutations(n);
        let index: BTreeMap<Vec<usize>, usize> =
            perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let order = perms.len();
        let mut mul = vec![vec![0usize; order]; order];
        for (i, p) in perms.iter().enumerate() {
            for (j, q) in perms.iter().enumerate() {
                // (p * q)(x) = p(q(x))
                let comp: Vec<usize> = (0..n).map(|x| p[q[x]]).collect();
                mul[i][j] = index[&comp];
            }
        }
        FiniteGroup::new(mul).expect("symmetric group table")
    }

    /// Dihedral group of order `2n` (symmetries of the regular n-gon),
    /// element `k` a rotation for `k < n`, a reflection for `k >= n`.
    pub fn dihedral(n: usize) -> FiniteGroup {
        assert!(n >= 1);
        let order = 2 * n;
        let mut mul = vec![vec![0usize; order]; order];
        for i in 0..order {
            for j in 0..order {
                let (ri, si) = (i % n, i / n);
                let (rj, sj) = (j % n, j / n);
                // r^a s^e * r^b s^f = r^(a + b or a - b) s^(e xor f)
                let rot = if si == 0 { (ri + rj) % n } else { (ri + n - rj % n) % n };
                mul[i][j] = rot + n * (si ^ sj);
            }
        }
        FiniteGroup::new(mul).expect("dihedral table")
    }

    /// The quaternion group of order 8: elements 1, -1, i, -i, j, -j, k, -k.
    pub fn quaternion() -> FiniteGroup {
        // encode as pairs (sign, axis) with axis in {1, i, j, k}
        let idx = |sign: usize, axis: usize| axis * 2 + sign;
        let mut mul = vec![vec![0usize; 8]; 8];
        // multiplication of units: table over axes with result sign
        // axes: 0=1, 1=i, 2=j, 3=k
        let axis_mul = |a: usize, b: usize| -> (usize, usize) {
            match (a, b) {
                (0, x) => (0, x),
                (x, 0) => (0, x),
                (1, 1) | (2, 2) | (3, 3) => (1, 0),
                (1, 2) => (0, 3),
                (2, 1) => (1, 3),
                (2, 3) => (0, 1),
                (3, 2) => (1, 1),
                (3, 1) => (0, 2),
                (1, 3) => (1, 2),
                _ => unreachable!(),
            }
        };
        for s1 in 0..2 {
            for a1 in 0..4 {
                for s2 in 0..2 {
                    for a2 in 0..4 {
                        let (s, a) = axis_mul(a1, a2);
                        mul[idx(s1, a1)][idx(s2, a2)] = idx((s1 + s2 + s) % 2, a);
                    }
                }
            }
        }
        FiniteGroup::new(mul).expect("quaternion table")
    }

    /// All groups of order at most 8, one per isomorphism class.
    pub fn catalog_up_to_order_8() -> Vec<(String, FiniteGroup)> {
        let c = FiniteGroup::cyclic;
        vec![
            ("C1".into(), c(1)),
            ("C2".into(), c(2)),
            ("C3".into(), c(3)),
            ("C4".into(), c(4)),
            ("V4".into(), FiniteGroup::klein_four()),
            ("C5".into(), c(5)),
            ("C6".into(), c(6)),
            ("S3".into(), FiniteGroup::symmetric(3)),
            ("C7".into(), c(7)),
            ("C8".into(), c(8)),
            ("C4xC2".into(), FiniteGroup::direct_product(&c(4), &c(2))),
            ("C2xC2xC2".into(), {
                let v4 = FiniteGroup::klein_four();
                FiniteGroup::direct_product(&v4, &c(2))
            }),
            ("D4".into(), FiniteGroup::dihedral(4)),
            ("Q8".into(), FiniteGroup::quaternion()),
        ]
    }

    /// Closure of a generating set, as a sorted element list.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut set: BTreeSet<usize> = BTreeSet::new();
        set.insert(self.identity);
        let mut queue: Vec<usize> = gens.to_vec();
        while let Some(x) = queue.pop() {
            if set.contains(&x) {
                continue;
            }
            set.insert(x);
            let snapshot: Vec<usize> = set.iter().copied().collect();
            for &y in &snapshot {
                for z in [self.mul(x, y), self.mul(y, x), self.inv(x)] {
                    if !set.contains(&z) {
                        queue.push(z);
                    }
                }
            }
        }
        set.into_iter().collect()
    }

    pub fn is_subgroup(&self, elements: &[usize]) -> bool {
        let set: BTreeSet<usize> = elements.iter().copied().collect();
        set.contains(&self.identity)
            && set.iter().all(|&a| {
                set.contains(&self.inv(a)) && set.iter().all(|&b| set.contains(&self.mul(a, b)))
            })
    }
}

/// All subgroups of a group, with their conjugacy classes. Subgroups are
/// canonically ordered by (order, element list) and referenced by index.
#[derive(Debug, Clone)]
pub struct SubgroupLattice {
    subgroups: Vec<Vec<usize>>,
    index: BTreeMap<Vec<usize>, usize>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl SubgroupLattice {
    pub fn new(group: &FiniteGroup) -> SubgroupLattice {
        // grow subgroups by adjoining generators to known ones
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        let trivial = vec![group.identity()];
        found.insert(trivial.clone());
        let mut queue = vec![trivial];
        while let Some(h) = queue.pop() {
            for g in group.elements() {
                if h.binary_search(&g).is_ok() {
                    continue;
                }
                let mut gens = h.clone();
                gens.push(g);
                let bigger = group.closure(&gens);
                if found.insert(bigger.clone()) {
                    queue.push(bigger);
                }
            }
        }
        let mut subgroups: Vec<Vec<usize>> = found.into_iter().collect();
        subgroups.sort_by_key(|s| (s.len(), s.clone()));
        let index: BTreeMap<Vec<usize>, usize> =
            subgroups.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        // conjugacy classes
        let mut class_of = vec![usize::MAX; subgroups.len()];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for i in 0..subgroups.len() {
            if class_of[i] != usize::MAX {
                continue;
            }
            let cid = classes.len();
            let mut members = BTreeSet::new();
            for g in group.elements() {
                let conj: Vec<usize> = {
                    let mut v: Vec<usize> =
                        subgroups[i].iter().map(|&h| group.conj(g, h)).collect();
                    v.sort_unstable();
                    v
                };
                members.insert(index[&conj]);
            }
            let members: Vec<usize> = members.into_iter().collect();
            for &m in &members {
                class_of[m] = cid;
            }
            classes.push(members);
        }
        SubgroupLattice { subgroups, index, classes, class_of }
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn elements_of(&self, id: usize) -> &[usize] {
        &self.subgroups[id]
    }

    pub fn id_of(&self, elements: &[usize]) -> Option<usize> {
        let mut key = elements.to_vec();
        key.sort_unstable();
        key.dedup();
        self.index.get(&key).copied()
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, id: usize) -> usize {
        self.class_of[id]
    }

    pub fn class_members(&self, class: usize) -> &[usize] {
        &self.classes[class]
    }

    /// Smallest subgroup id in the class, used as its representative.
    pub fn class_rep(&self, class: usize) -> usize {
        self.classes[class][0]
    }

    pub fn contains(&self, inner: usize, outer: usize) -> bool {
        let big = &self.subgroups[outer];
        self.subgroups[inner].iter().all(|e| big.binary_search(e).is_ok())
    }

    pub fn conjugate_id(&self, group: &FiniteGroup, id: usize, g: usize) -> usize {
        let mut conj: Vec<usize> =
            self.subgroups[id].iter().map(|&h| group.conj(g, h)).collect();
        conj.sort_unstable();
        self.index[&conj]
    }

    /// Intersection of two subgroups, as an id.
    pub fn intersection_id(&self, a: usize, b: usize) -> usize {
        let sb = &self.subgroups[b];
        let inter: Vec<usize> = self.subgroups[a]
            .iter()
            .copied()
            .filter(|e| sb.binary_search(e).is_ok())
            .collect();
        self.index[&inter]
    }
}

/// Representatives of the double cosets `K g H`, smallest element first;
/// together they partition the group.
pub fn double_cosets(
    group: &FiniteGroup,
    k: &[usize],
    h: &[usize],
) -> Result<Vec<usize>, GroupError> {
    if !group.is_subgroup(k) || !group.is_subgroup(h) {
        return Err(GroupError::NotASubgroup);
    }
    let mut covered = vec![false; group.order()];
    let mut reps = Vec::new();
    for g in group.elements() {
        if covered[g] {
            continue;
        }
        reps.push(g);
        for &a in k {
            for &b in h {
                covered[group.mul(group.mul(a, g), b)] = true;
            }
        }
    }
    Ok(reps)
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    let mut used = vec![false; n];
    fn rec(n: usize, current: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                current.push(i);
                rec(n, current, used, out);
                current.pop();
                used[i] = false;
            }
        }
    }
    rec(n, &mut current, &mut used, &mut out);
    out
}
