//! Seifert form of the braid-closure surface: `n` stacked disks joined by one
//! half-twisted band per letter.
//!
//! The first homology has a basis of loops, one for each pair of consecutive
//! bands on the same generator. Linking numbers between a loop and the
//! push-off of another:
//!
//! * a loop with itself: `-(ε1 + ε2) / 2` for band signs `ε1, ε2`;
//! * consecutive loops on one generator sharing a band of sign `ε`:
//!   `V[r][r+1] = 1` when `ε = +1`, `V[r+1][r] = -1` when `ε = -1`;
//! * a loop on `σ_i` spanning bands `(a1, a2)` and one on `σ_{i+1}` spanning
//!   `(b1, b2)` link once when the spans interleave: `V[b][a] = -1` for
//!   `a1 < b1 < a2 < b2` and `V[b][a] = +1` for `b1 < a1 < b2 < a2`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braid::BraidWord;
use crate::laurent::LaurentPoly1;
use crate::linalg::{determinant, symmetric_signature, IntMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeifertError {
    #[error("generator σ_{0} does not occur, the band surface is disconnected")]
    DisconnectedSurface(usize),
    #[error("closure has {0} components, the Alexander polynomial needs a knot")]
    NotAKnot(usize),
}

/// A basis loop through two consecutive bands of one generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BandPair {
    pub generator: usize,
    pub first: usize,
    pub second: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertData {
    pub matrix: IntMatrix,
    pub basis: Vec<BandPair>,
}

impl SeifertData {
    pub fn size(&self) -> usize {
        self.matrix.len()
    }

    /// `V + Vᵀ`.
    pub fn symmetrized(&self) -> IntMatrix {
        let n = self.size();
        (0..n).map(|i| (0..n).map(|j| &self.matrix[i][j] + &self.matrix[j][i]).collect()).collect()
    }
}

pub fn seifert_matrix(w: &BraidWord) -> Result<SeifertData, SeifertError> {
    let n = w.strands();
    let letters = w.letters();
    let mut basis = Vec::new();
    for i in 1..n {
        let occ: Vec<usize> = letters
            .iter()
            .enumerate()
            .filter(|(_, e)| e.unsigned_abs() as usize == i)
            .map(|(k, _)| k)
            .collect();
        if occ.is_empty() {
            return Err(SeifertError::DisconnectedSurface(i));
        }
        basis.extend(occ.windows(2).map(|p| BandPair { generator: i, first: p[0], second: p[1] }));
    }
    let sign = |k: usize| -> i64 { letters[k].signum() as i64 };
    let m = basis.len();
    let mut v = vec![vec![0i64; m]; m];
    for (x, a) in basis.iter().enumerate() {
        v[x][x] = -(sign(a.first) + sign(a.second)) / 2;
        for (y, b) in basis.iter().enumerate() {
            if x == y {
                continue;
            }
            if a.generator == b.generator && a.second == b.first {
                if sign(a.second) > 0 {
                    v[x][y] = 1;
                } else {
                    v[y][x] = -1;
                }
            }
            if b.generator == a.generator + 1 {
                if a.first < b.first && b.first < a.second && a.second < b.second {
                    v[y][x] = -1;
                }
                if b.first < a.first && a.first < b.second && b.second < a.second {
                    v[y][x] = 1;
                }
            }
        }
    }
    let matrix = v.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
    Ok(SeifertData { matrix, basis })
}

/// Signature normalized so that positive braids give nonnegative values
/// (the closure of `σ1^3` has signature `+2`). Zero directions of a degenerate
/// form are not counted.
pub fn signature(w: &BraidWord) -> Result<i64, SeifertError> {
    let s = seifert_matrix(w)?;
    Ok(-symmetric_signature(&s.symmetrized()))
}

/// `|det(V + Vᵀ)|`.
pub fn determinant_invariant(w: &BraidWord) -> Result<BigInt, SeifertError> {
    let s = seifert_matrix(w)?;
    Ok(determinant(&s.symmetrized()).abs())
}

/// `det(V - t Vᵀ)`, normalized so `Δ(t) = Δ(t^-1)` and `Δ(1) = 1`.
pub fn alexander(w: &BraidWord) -> Result<LaurentPoly1, SeifertError> {
    let comps = w.closure_components();
    if comps != 1 {
        return Err(SeifertError::NotAKnot(comps));
    }
    let s = seifert_matrix(w)?;
    let m = s.size();
    // degree ≤ m: evaluate at t = 0..=m and interpolate
    let values: Vec<BigInt> = (0..=m as i64)
        .map(|t| {
            let mt: IntMatrix = (0..m)
                .map(|i| (0..m).map(|j| &s.matrix[i][j] - &s.matrix[j][i] * BigInt::from(t)).collect())
                .collect();
            determinant(&mt)
        })
        .collect();
    let coeffs = interpolate(&values);
    let half = (m / 2) as i32;
    let mut p = LaurentPoly1::from_terms(coeffs.into_iter().enumerate().map(|(k, c)| (k as i32 - half, c)));
    let at_one: BigInt = p.terms().map(|(_, c)| c.clone()).sum();
    if at_one.is_negative() {
        p = -p;
    }
    Ok(p)
}

/// Coefficients of the integer polynomial through `(k, values[k])`, `k = 0..`.
fn interpolate(values: &[BigInt]) -> Vec<BigInt> {
    use num_rational::BigRational;
    let n = values.len();
    // Newton divided differences on nodes 0..n-1
    let mut dd: Vec<BigRational> = values.iter().map(|v| BigRational::from_integer(v.clone())).collect();
    for level in 1..n {
        for k in (level..n).rev() {
            dd[k] = (&dd[k] - &dd[k - 1]) / BigRational::from_integer(BigInt::from(level));
        }
    }
    // expand Σ dd[k] Π_{j<k} (x - j)
    let mut coeffs = vec![BigRational::zero(); n];
    let mut basis = vec![BigRational::from_integer(1.into())];
    for (k, d) in dd.iter().enumerate() {
        for (i, b) in basis.iter().enumerate() {
            coeffs[i] += d * b;
        }
        // basis *= (x - k)
        let mut next = vec![BigRational::zero(); basis.len() + 1];
        for (i, b) in basis.iter().enumerate() {
            next[i + 1] += b.clone();
            next[i] -= b * BigRational::from_integer(BigInt::from(k));
        }
        basis = next;
    }
    coeffs
        .into_iter()
        .map(|c| {
            assert!(c.is_integer(), "Alexander polynomial has integer coefficients");
            c.to_integer()
        })
        .collect()
}
