use std::fmt;

use serde::{Deserialize, Serialize};

use super::BraidError;

/// A word in the Artin generators of the braid group on `strands` strands.
///
/// Letter `+i` is `σ_i`, letter `-i` is `σ_i^{-1}`, with `1 <= i <= strands - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if strands < 1 {
            return Err(BraidError::NoStrands);
        }
        for &e in &letters {
            if e == 0 || e.unsigned_abs() as usize >= strands {
                return Err(BraidError::LetterOutOfRange { letter: e, strands });
            }
        }
        Ok(Self { strands, letters })
    }

    /// Construct without validation. Callers guarantee the letter bounds.
    pub(crate) fn from_raw(strands: usize, letters: Vec<i32>) -> Self {
        debug_assert!(letters.iter().all(|&e| e != 0 && (e.unsigned_abs() as usize) < strands));
        Self { strands, letters }
    }

    pub fn empty(strands: usize) -> Self {
        Self { strands: strands.max(1), letters: Vec::new() }
    }

    /// Parse whitespace-separated signed integers.
    pub fn parse(text: &str, strands: usize) -> Result<Self, BraidError> {
        let letters = text
            .split_whitespace()
            .map(|tok| tok.parse::<i32>().map_err(|_| BraidError::BadToken(tok.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&e| if e > 0 { 1 } else { -1 }).sum()
    }

    pub fn positive_count(&self) -> usize {
        self.letters.iter().filter(|&&e| e > 0).count()
    }

    pub fn negative_count(&self) -> usize {
        self.letters.iter().filter(|&&e| e < 0).count()
    }

    /// Number of occurrences of `σ_i^{±1}`.
    pub fn generator_count(&self, i: usize) -> usize {
        self.letters.iter().filter(|&&e| e.unsigned_abs() as usize == i).count()
    }

    /// All letters negated: the closure is the mirror image.
    pub fn mirror(&self) -> Self {
        Self { strands: self.strands, letters: self.letters.iter().map(|&e| -e).collect() }
    }

    /// The group inverse: reversed and negated.
    pub fn inverse(&self) -> Self {
        Self { strands: self.strands, letters: self.letters.iter().rev().map(|&e| -e).collect() }
    }

    /// Conjugation by the half twist: `σ_i ↦ σ_{n-i}`.
    pub fn flip(&self) -> Self {
        let n = self.strands as i32;
        Self {
            strands: self.strands,
            letters: self.letters.iter().map(|&e| e.signum() * (n - e.abs())).collect(),
        }
    }

    pub fn concat(&self, other: &Self) -> Self {
        assert_eq!(self.strands, other.strands, "strand counts differ");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self { strands: self.strands, letters }
    }

    /// `self` viewed on more strands.
    pub fn widen(&self, strands: usize) -> Self {
        assert!(strands >= self.strands);
        Self { strands, letters: self.letters.clone() }
    }

    /// Markov stabilization: append `σ_n^{±1}` on `n + 1` strands.
    pub fn stabilize(&self, positive: bool) -> Self {
        let n = self.strands as i32;
        let mut letters = self.letters.clone();
        letters.push(if positive { n } else { -n });
        Self { strands: self.strands + 1, letters }
    }

    pub fn rotate(&self, k: usize) -> Self {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let k = k % letters.len();
            letters.rotate_left(k);
        }
        Self { strands: self.strands, letters }
    }

    /// Cancel adjacent `e, -e` pairs until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &e in &self.letters {
            if out.last() == Some(&-e) {
                out.pop();
            } else {
                out.push(e);
            }
        }
        Self { strands: self.strands, letters: out }
    }

    /// Free reduction followed by cancellation across the ends of the word.
    /// The result is conjugate to `self`.
    pub fn cyclic_reduce(&self) -> Self {
        let mut letters = self.free_reduce().letters;
        let (mut lo, mut hi) = (0, letters.len());
        while hi - lo >= 2 && letters[lo] == -letters[hi - 1] {
            lo += 1;
            hi -= 1;
        }
        letters.truncate(hi);
        letters.drain(..lo);
        Self { strands: self.strands, letters }
    }

    /// The closure permutation: `perm[k]` is the top position reached at the
    /// bottom after starting at top position `k`.
    pub fn closure_permutation(&self) -> Vec<usize> {
        (0..self.strands)
            .map(|start| {
                let mut pos = start;
                for &e in &self.letters {
                    let p = e.unsigned_abs() as usize - 1;
                    if pos == p {
                        pos = p + 1;
                    } else if pos == p + 1 {
                        pos = p;
                    }
                }
                pos
            })
            .collect()
    }

    pub fn closure_components(&self) -> usize {
        let perm = self.closure_permutation();
        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for s in 0..self.strands {
            if seen[s] {
                continue;
            }
            cycles += 1;
            let mut p = s;
            while !seen[p] {
                seen[p] = true;
                p = perm[p];
            }
        }
        cycles
    }

    pub fn is_knot(&self) -> bool {
        self.closure_components() == 1
    }

    /// Render as the whitespace-separated interchange text.
    pub fn to_text(&self) -> String {
        self.letters.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] on {} strands", self.to_text(), self.strands)
    }
}

/// Writhe `w_D` of the closed braid diagram.
pub fn writhe(w: &BraidWord) -> i64 {
    w.writhe()
}

pub fn free_reduce(w: &BraidWord) -> BraidWord {
    w.free_reduce()
}

pub fn closure_components(w: &BraidWord) -> usize {
    w.closure_components()
}

pub fn parse_braid_word(text: &str, strands: usize) -> Result<BraidWord, BraidError> {
    BraidWord::parse(text, strands)
}
