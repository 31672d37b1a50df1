//! Braid words on `n` strands as signed generator sequences.
//!
//! Letter `i > 0` is the generator `s_i` crossing the strands at positions
//! `i, i+1` (1-based); `-i` is its inverse. Words are applied left to right
//! when read as a diagram from top to bottom. `compose(a, b)` follows the
//! function-composition convention of the matrix layer: `b` is applied first.

use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("generator {letter} out of range for {strands} strands")]
    LetterOutOfRange { letter: i32, strands: usize },
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
}

/// A braid on `strands >= 1` strands; every letter `w` satisfies
/// `1 <= |w| < strands`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    word: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, word: impl Into<Vec<i32>>) -> Result<Self, BraidError> {
        assert!(strands >= 1, "a braid needs at least one strand");
        let word = word.into();
        for &w in &word {
            if w == 0 || w.unsigned_abs() as usize >= strands {
                return Err(BraidError::LetterOutOfRange { letter: w, strands });
            }
        }
        Ok(BraidWord { strands, word })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord::new(strands, Vec::new()).unwrap()
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn word(&self) -> &[i32] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Sum of crossing signs.
    pub fn writhe(&self) -> i64 {
        self.word.iter().map(|&w| w.signum() as i64).sum()
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            word: self.word.iter().rev().map(|&w| -w).collect(),
        }
    }

    /// Concatenation with cascading free reduction of adjacent `s_i s_i^-1`
    /// pairs. `other` is applied first.
    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch { left: self.strands, right: other.strands });
        }
        let mut stack: Vec<i32> = Vec::with_capacity(other.word.len() + self.word.len());
        for &w in other.word.iter().chain(self.word.iter()) {
            if stack.last() == Some(&-w) {
                stack.pop();
            } else {
                stack.push(w);
            }
        }
        Ok(BraidWord { strands: self.strands, word: stack })
    }

    /// Horizontal juxtaposition: `other`'s generator indices are shifted past
    /// `self`'s strands.
    pub fn tensor(&self, other: &BraidWord) -> BraidWord {
        let shift = self.strands as i32;
        let mut word = self.word.clone();
        word.extend(other.word.iter().map(|&w| if w > 0 { w + shift } else { w - shift }));
        BraidWord { strands: self.strands + other.strands, word }
    }

    /// The image in the symmetric group: strand starting at top position `p`
    /// (0-based) ends at bottom position `perm.image(p)`.
    pub fn underlying_perm(&self) -> Permutation {
        let n = self.strands;
        // pos[s] = current position of the strand that started at s
        let mut pos: Vec<usize> = (0..n).collect();
        let mut at: Vec<usize> = (0..n).collect(); // at[p] = strand at position p
        for &w in &self.word {
            let i = w.unsigned_abs() as usize - 1;
            let (a, b) = (at[i], at[i + 1]);
            at.swap(i, i + 1);
            pos[a] = i + 1;
            pos[b] = i;
        }
        Permutation::new(pos).unwrap()
    }

    /// Embed in `n + 1` strands and append `s_n^(±1)` (a Markov
    /// stabilization).
    pub fn stabilize(&self, positive: bool) -> BraidWord {
        let n = self.strands;
        let mut word = self.word.clone();
        word.push(if positive { n as i32 } else { -(n as i32) });
        BraidWord { strands: n + 1, word }
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BraidWord(n={}, {:?})", self.strands, self.word)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{\"strands\": {}, \"word\": {:?}}}", self.strands, self.word)
    }
}

/// The blockwise braiding on `m + n` strands moving the last `n` strands
/// across the first `m`, as the positive word
/// `(s_m … s_1)(s_{m+1} … s_2) ⋯ (s_{m+n-1} … s_n)`.
///
/// Its underlying permutation is the block swap sending the first `m`
/// positions to the last `m`. The over/under handedness (all letters
/// positive) is a fixed convention.
pub fn braiding_gamma(m: usize, n: usize) -> BraidWord {
    let strands = (m + n).max(1);
    let mut word = Vec::with_capacity(m * n);
    for j in 1..=n {
        for i in (j..m + j).rev() {
            word.push(i as i32);
        }
    }
    BraidWord::new(strands, word).unwrap()
}

/// A bijection on `{0, …, n-1}`, stored as the image list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `compose(self, other)` applies `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation {
            images: (0..self.len()).map(|i| self.images[other.images[i]]).collect(),
        }
    }

    /// Block sum acting on `{0..m+n}` with `other` shifted by `m`.
    pub fn block_sum(&self, other: &Permutation) -> Permutation {
        let m = self.len();
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|&i| i + m));
        Permutation { images }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images)
    }
}
