//! Oriented planar link diagrams given by crossing lists.
//!
//! Arcs are the strand segments between crossings. Each crossing records the
//! four incident arcs by compass position: `nw`, `ne` enter from the top and
//! `sw`, `se` leave at the bottom. A positive crossing carries the `nw -> se`
//! strand over the `ne -> sw` strand; a negative crossing is the mirror.
//! Components that meet no crossing at all are tracked as `free_loops`.

use super::braid::BraidWord;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PdError {
    #[error("arc {arc} enters {ins} crossings and leaves {outs}; each arc must do both exactly once")]
    ArcUsage { arc: usize, ins: usize, outs: usize },
    #[error("crossing sign must be +1 or -1, got {0}")]
    BadSign(i8),
}

/// One oriented crossing; fields are arc indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    pub nw: usize,
    pub ne: usize,
    pub sw: usize,
    pub se: usize,
    pub sign: i8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarDiagram {
    crossings: Vec<Crossing>,
    n_arcs: usize,
    free_loops: usize,
}

impl PlanarDiagram {
    pub fn new(crossings: Vec<Crossing>, free_loops: usize) -> Result<Self, PdError> {
        let mut max_arc = 0usize;
        for c in &crossings {
            if c.sign != 1 && c.sign != -1 {
                return Err(PdError::BadSign(c.sign));
            }
            max_arc = max_arc.max(c.nw).max(c.ne).max(c.sw).max(c.se);
        }
        let n_arcs = if crossings.is_empty() { 0 } else { max_arc + 1 };
        let mut ins = vec![0usize; n_arcs];
        let mut outs = vec![0usize; n_arcs];
        for c in &crossings {
            ins[c.nw] += 1;
            ins[c.ne] += 1;
            outs[c.sw] += 1;
            outs[c.se] += 1;
        }
        for arc in 0..n_arcs {
            if ins[arc] != 1 || outs[arc] != 1 {
                return Err(PdError::ArcUsage { arc, ins: ins[arc], outs: outs[arc] });
            }
        }
        Ok(PlanarDiagram { crossings, n_arcs, free_loops })
    }

    /// The 0-crossing unknot.
    pub fn unknot() -> Self {
        PlanarDiagram { crossings: Vec::new(), n_arcs: 0, free_loops: 1 }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn arc_count(&self) -> usize {
        self.n_arcs
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    /// Number of link components, following strands straight through each
    /// crossing.
    pub fn components(&self) -> usize {
        let mut uf = UnionFind::new(self.n_arcs);
        for c in &self.crossings {
            uf.union(c.nw, c.se);
            uf.union(c.ne, c.sw);
        }
        uf.class_count() + self.free_loops
    }

    /// Trace closure of a braid: strand `i` at the bottom is joined back to
    /// strand `i` at the top around the right of the diagram. Crossing count
    /// equals the word length.
    pub fn markov_closure(braid: &BraidWord) -> Self {
        let n = braid.strands();
        let word = braid.word();
        // arcs 0..n are the initial top segments
        let mut cur: Vec<usize> = (0..n).collect();
        let mut next_arc = n;
        let mut crossings = Vec::with_capacity(word.len());
        for &w in word {
            let i = w.unsigned_abs() as usize - 1;
            let (sw, se) = (next_arc, next_arc + 1);
            next_arc += 2;
            crossings.push(Crossing {
                nw: cur[i],
                ne: cur[i + 1],
                sw,
                se,
                sign: w.signum() as i8,
            });
            cur[i] = sw;
            cur[i + 1] = se;
        }
        // Closing identifies the bottom arc at each position with the top arc
        // that started there.
        let mut uf = UnionFind::new(next_arc);
        for i in 0..n {
            uf.union(cur[i], i);
        }
        let mut used = vec![false; next_arc];
        for c in &crossings {
            for a in [c.nw, c.ne, c.sw, c.se] {
                used[uf.find(a)] = true;
            }
        }
        // canonical relabeling of arc classes in slot order
        let mut relabel = vec![usize::MAX; next_arc];
        let mut fresh = 0usize;
        let mut map = |a: usize, uf: &mut UnionFind, relabel: &mut Vec<usize>| {
            let r = uf.find(a);
            if relabel[r] == usize::MAX {
                relabel[r] = fresh;
                fresh += 1;
            }
            relabel[r]
        };
        let crossings: Vec<Crossing> = crossings
            .iter()
            .map(|c| Crossing {
                nw: map(c.nw, &mut uf, &mut relabel),
                ne: map(c.ne, &mut uf, &mut relabel),
                sw: map(c.sw, &mut uf, &mut relabel),
                se: map(c.se, &mut uf, &mut relabel),
                sign: c.sign,
            })
            .collect();
        let mut free_loops = 0usize;
        let mut seen_roots = std::collections::BTreeSet::new();
        for a in 0..next_arc {
            let r = uf.find(a);
            if seen_roots.insert(r) && !used[r] {
                free_loops += 1;
            }
        }
        let n_arcs = fresh;
        PlanarDiagram { crossings, n_arcs, free_loops }
    }
}

/// Plain union-find; used for loop counting in closures and skein states.
#[derive(Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    pub fn class_count(&mut self) -> usize {
        (0..self.parent.len()).filter(|&x| self.find(x) == x).count()
    }
}
