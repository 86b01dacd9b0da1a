use serde::{Deserialize, Serialize};

use super::{BraidError, BraidWord};

/// A product of conjugates of positive generators,
/// `(c_1 σ_{j_1} c_1^{-1}) (c_2 σ_{j_2} c_2^{-1}) ⋯`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QPFactorization {
    strands: usize,
    factors: Vec<(Vec<i32>, usize)>,
}

impl QPFactorization {
    pub fn new(strands: usize, factors: Vec<(Vec<i32>, usize)>) -> Result<Self, BraidError> {
        for (conj, j) in &factors {
            BraidWord::new(strands, conj.clone())?;
            if *j < 1 || *j >= strands {
                return Err(BraidError::LetterOutOfRange { letter: *j as i32, strands });
            }
        }
        Ok(Self { strands, factors })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[(Vec<i32>, usize)] {
        &self.factors
    }

    /// Quasipositive representative of `K_k`: `2̄ (1 2 2 1 2̄)^{2k} 1`, split
    /// into `6k` factors using the conjugates `2̄ 1 2` and `2 1 2̄`.
    pub fn elrifai_k(k: usize) -> Self {
        let mut factors = vec![(vec![-2], 1), (vec![2], 1)];
        for _ in 1..2 * k {
            factors.extend([(vec![], 1), (vec![], 2), (vec![2], 1)]);
        }
        factors.push((vec![], 1));
        Self { strands: 3, factors }
    }

    /// Quasipositive representative of `L_k`: `(1 2 2 1 2̄)^{2k-1} (1 2 2 1)^2 1`,
    /// split into `6k + 6` factors.
    pub fn elrifai_l(k: usize) -> Self {
        let mut factors = Vec::new();
        for _ in 0..2 * k - 1 {
            factors.extend([(vec![], 1), (vec![], 2), (vec![2], 1)]);
        }
        for _ in 0..2 {
            factors.extend([(vec![], 1), (vec![], 2), (vec![], 2), (vec![], 1)]);
        }
        factors.push((vec![], 1));
        Self { strands: 3, factors }
    }
}

/// Concatenate the expanded factors and free-reduce.
pub fn expand_qp(f: &QPFactorization) -> BraidWord {
    let mut letters = Vec::new();
    for (conj, j) in &f.factors {
        letters.extend_from_slice(conj);
        letters.push(*j as i32);
        letters.extend(conj.iter().rev().map(|&e| -e));
    }
    BraidWord::from_raw(f.strands, letters).free_reduce()
}

/// `2 g_4 = p - n + 1` for a quasipositive closure.
pub fn g4_from_qp(f: &QPFactorization) -> i64 {
    f.factors.len() as i64 - f.strands as i64 + 1
}
