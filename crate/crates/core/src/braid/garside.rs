//! Garside left-greedy normal form in the Artin presentation.
//!
//! Simple elements (permutation braids) are stored as position arrays:
//! `p[k]` is the original index of the strand sitting at position `k`
//! once the braid has been applied.

use serde::{Deserialize, Serialize};

use super::BraidWord;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self((0..n as u8).collect())
    }

    /// The half twist `Δ`.
    pub fn delta(n: usize) -> Self {
        Self((0..n as u8).rev().collect())
    }

    pub fn generator(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.0.swap(i - 1, i);
        p
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    pub fn len_strands(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(k, &v)| k == v as usize)
    }

    pub fn is_delta(&self) -> bool {
        let n = self.0.len();
        self.0.iter().enumerate().all(|(k, &v)| v as usize == n - 1 - k)
    }

    pub fn inversions(&self) -> usize {
        let p = &self.0;
        let mut count = 0;
        for a in 0..p.len() {
            for b in a + 1..p.len() {
                if p[a] > p[b] {
                    count += 1;
                }
            }
        }
        count
    }

    fn inverse(&self) -> Vec<u8> {
        let mut q = vec![0u8; self.0.len()];
        for (k, &v) in self.0.iter().enumerate() {
            q[v as usize] = k as u8;
        }
        q
    }

    /// `σ_i` is a right divisor.
    fn ends_with(&self, i: usize) -> bool {
        self.0[i - 1] > self.0[i]
    }

    /// `σ_i` is a left divisor.
    fn starts_with(&self, q: &[u8], i: usize) -> bool {
        q[i - 1] > q[i]
    }

    /// Right multiplication by `σ_i`.
    fn push_right(&mut self, i: usize) {
        self.0.swap(i - 1, i);
    }

    /// Left division by `σ_i`.
    fn pop_left(&mut self, i: usize) {
        let (a, b) = ((i - 1) as u8, i as u8);
        for v in self.0.iter_mut() {
            if *v == a {
                *v = b;
            } else if *v == b {
                *v = a;
            }
        }
    }

    /// Conjugation by `Δ`, sending `σ_i` to `σ_{n-i}`.
    fn tau(&self) -> Self {
        let n = self.0.len();
        Self((0..n).map(|k| (n - 1) as u8 - self.0[n - 1 - k]).collect())
    }

    /// A reduced positive word for this permutation braid.
    pub fn to_letters(&self) -> Vec<i32> {
        let mut p = self.clone();
        let mut rev = Vec::with_capacity(p.inversions());
        'outer: loop {
            for i in 1..p.0.len() {
                if p.ends_with(i) {
                    p.push_right(i);
                    rev.push(i as i32);
                    continue 'outer;
                }
            }
            break;
        }
        rev.reverse();
        rev
    }
}

/// `Δ^infimum · factors[0] · factors[1] ⋯` with the factors left-weighted,
/// none of them trivial or equal to `Δ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GarsideNormalForm {
    pub strands: usize,
    pub infimum: i64,
    pub factors: Vec<Permutation>,
}

impl GarsideNormalForm {
    pub fn is_identity(&self) -> bool {
        self.infimum == 0 && self.factors.is_empty()
    }

    /// Expand back into a braid word (the half twist written positively).
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let delta = Permutation::delta(n).to_letters();
        let mut letters = Vec::new();
        if self.infimum >= 0 {
            for _ in 0..self.infimum {
                letters.extend_from_slice(&delta);
            }
        } else {
            let inv: Vec<i32> = delta.iter().rev().map(|&e| -e).collect();
            for _ in 0..-self.infimum {
                letters.extend_from_slice(&inv);
            }
        }
        for f in &self.factors {
            letters.extend(f.to_letters());
        }
        BraidWord::from_raw(n, letters)
    }

    /// Check the structural invariants of a left-greedy normal form.
    pub fn is_valid(&self) -> bool {
        let ok_factors = self.factors.iter().all(|f| !f.is_identity() && !f.is_delta());
        let weighted = self.factors.windows(2).all(|w| left_weighted(&w[0], &w[1]));
        ok_factors && weighted
    }
}

fn left_weighted(a: &Permutation, b: &Permutation) -> bool {
    let q = b.inverse();
    (1..a.0.len()).all(|i| !b.starts_with(&q, i) || a.ends_with(i))
}

/// Move generators from the front of `b` to the back of `a` until the pair is
/// left-weighted. Returns whether anything moved.
fn make_left_weighted(a: &mut Permutation, b: &mut Permutation) -> bool {
    let n = a.0.len();
    let mut moved = false;
    loop {
        let q = b.inverse();
        let Some(i) = (1..n).find(|&i| b.starts_with(&q, i) && !a.ends_with(i)) else {
            return moved;
        };
        a.push_right(i);
        b.pop_left(i);
        moved = true;
    }
}

pub fn garside_normal_form(w: &BraidWord) -> GarsideNormalForm {
    let n = w.strands();
    let letters = w.letters();

    // σ_i^{-1} = Δ^{-1} (Δ σ_i^{-1}); every factor left of a Δ^{-1} picks up a τ
    // when the Δ^{-1} is pulled to the front.
    let mut factors: Vec<Permutation> = Vec::with_capacity(letters.len());
    let mut negatives_after = letters.iter().filter(|&&e| e < 0).count();
    let infimum = -(negatives_after as i64);
    for &e in letters {
        let i = e.unsigned_abs() as usize;
        let simple = if e > 0 {
            Permutation::generator(n, i)
        } else {
            negatives_after -= 1;
            let mut d = Permutation::delta(n);
            d.push_right(i);
            d
        };
        let simple = if negatives_after % 2 == 1 { simple.tau() } else { simple };
        factors.push(simple);
    }

    let mut changed = true;
    while changed {
        changed = false;
        for k in (0..factors.len().saturating_sub(1)).rev() {
            let (left, right) = factors.split_at_mut(k + 1);
            if make_left_weighted(&mut left[k], &mut right[0]) {
                changed = true;
            }
        }
    }

    let leading_deltas = factors.iter().take_while(|f| f.is_delta()).count();
    factors.drain(..leading_deltas);
    while factors.last().is_some_and(|f| f.is_identity()) {
        factors.pop();
    }
    GarsideNormalForm { strands: n, infimum: infimum + leading_deltas as i64, factors }
}

/// Two words represent the same braid.
pub fn braid_equal(u: &BraidWord, v: &BraidWord) -> bool {
    u.strands() == v.strands() && garside_normal_form(u) == garside_normal_form(v)
}
