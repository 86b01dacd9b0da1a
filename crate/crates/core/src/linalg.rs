//! Exact integer/rational linear algebra used by the Seifert and Khovanov modules.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub(crate) type IntMatrix = Vec<Vec<BigInt>>;

/// Determinant by fraction-free (Bareiss) elimination.
pub(crate) fn determinant(m: &IntMatrix) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Signature (positive minus negative count) of a symmetric integer matrix,
/// by exact congruence diagonalization over ℚ. Zero directions are ignored.
pub(crate) fn symmetric_signature(m: &IntMatrix) -> i64 {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> =
        m.iter().map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect()).collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut sig = 0i64;
    while !active.is_empty() {
        // prefer a nonzero diagonal pivot
        let pivot = active.iter().copied().find(|&i| !a[i][i].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                // all diagonal zero: find an off-diagonal entry, add row/col j to row/col i
                let pair = active.iter().copied().find_map(|i| {
                    active.iter().copied().find(|&j| j != i && !a[i][j].is_zero()).map(|j| (i, j))
                });
                let Some((i, j)) = pair else { break };
                // e_i ← e_i + e_j makes the (i, i) entry 2 a_ij ≠ 0
                for k in 0..n {
                    let v = a[j][k].clone();
                    a[i][k] += v;
                }
                for k in 0..n {
                    let v = a[k][j].clone();
                    a[k][i] += v;
                }
                i
            }
        };
        let d = a[p][p].clone();
        sig += if d.is_positive() { 1 } else { -1 };
        active.retain(|&i| i != p);
        for &i in &active {
            if a[i][p].is_zero() {
                continue;
            }
            let f = &a[i][p] / &d;
            for &j in &active {
                let v = &f * &a[p][j];
                a[i][j] -= v;
            }
            a[i][p] = BigRational::zero();
        }
        for &i in &active {
            a[p][i] = BigRational::zero();
        }
    }
    sig
}

/// Sparse matrix with integer entries, stored by rows.
#[derive(Clone, Debug, Default)]
pub(crate) struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<HashMap<usize, i64>>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![HashMap::new(); rows] }
    }

    pub fn add(&mut self, r: usize, c: usize, v: i64) {
        let slot = self.entries[r].entry(c).or_insert(0);
        *slot += v;
        if *slot == 0 {
            self.entries[r].remove(&c);
        }
    }
}

/// Coefficient field for rank computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankField {
    /// Exact rank over ℚ.
    Rational,
    /// Rank over `F_p`.
    Prime(u64),
}

pub(crate) fn rank(m: &SparseMatrix, field: RankField) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    match field {
        RankField::Rational => rank_rational(m),
        RankField::Prime(p) => rank_mod_p(m, p),
    }
}

/// Eliminate with unit pivots over ℤ (exact, entries stay integral), then
/// finish the unit-free remainder with Bareiss over big integers.
fn rank_rational(m: &SparseMatrix) -> usize {
    let mut rows: Vec<BTreeMap<usize, i64>> = m
        .entries
        .iter()
        .filter(|r| !r.is_empty())
        .map(|r| r.iter().map(|(&c, &v)| (c, v)).collect())
        .collect();
    let mut col_index: HashMap<usize, Vec<usize>> = HashMap::new();
    for (ri, r) in rows.iter().enumerate() {
        for &c in r.keys() {
            col_index.entry(c).or_default().push(ri);
        }
    }
    let mut alive: Vec<bool> = vec![true; rows.len()];
    let mut rank = 0;
    let mut order: Vec<usize> = (0..rows.len()).collect();
    order.sort_by_key(|&ri| rows[ri].len());
    loop {
        let mut progress = false;
        for &pr in &order {
            if !alive[pr] {
                continue;
            }
            if rows[pr].is_empty() {
                alive[pr] = false;
                continue;
            }
            let pivot = rows[pr]
                .iter()
                .filter(|(_, v)| v.abs() == 1)
                .min_by_key(|(c, _)| col_index.get(c).map_or(0, |l| l.len()))
                .map(|(&c, &v)| (c, v));
            let Some((pc, pv)) = pivot else { continue };
            progress = true;
            rank += 1;
            alive[pr] = false;
            let pivot_row = std::mem::take(&mut rows[pr]);
            for &c in pivot_row.keys() {
                if let Some(list) = col_index.get_mut(&c) {
                    list.retain(|&x| x != pr);
                }
            }
            let targets = col_index.remove(&pc).unwrap_or_default();
            for ri in targets {
                let Some(f) = rows[ri].remove(&pc) else { continue };
                let f = f * pv;
                for (&c, &v) in &pivot_row {
                    if c == pc {
                        continue;
                    }
                    let cur = rows[ri].get(&c).copied().unwrap_or(0);
                    let Some(nv) = f.checked_mul(v).and_then(|x| cur.checked_sub(x)) else {
                        return rank_dense_bigint(m);
                    };
                    if nv == 0 {
                        rows[ri].remove(&c);
                        if let Some(list) = col_index.get_mut(&c) {
                            list.retain(|&x| x != ri);
                        }
                    } else {
                        if cur == 0 {
                            col_index.entry(c).or_default().push(ri);
                        }
                        rows[ri].insert(c, nv);
                    }
                }
            }
        }
        if !progress {
            break;
        }
    }
    let rest: Vec<&BTreeMap<usize, i64>> =
        rows.iter().enumerate().filter(|(ri, r)| alive[*ri] && !r.is_empty()).map(|(_, r)| r).collect();
    if rest.is_empty() {
        return rank;
    }
    let mut cols: Vec<usize> = rest.iter().flat_map(|r| r.keys().copied()).collect();
    cols.sort_unstable();
    cols.dedup();
    let pos: HashMap<usize, usize> = cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let dense: IntMatrix = rest
        .iter()
        .map(|r| {
            let mut row = vec![BigInt::zero(); cols.len()];
            for (&c, &v) in r.iter() {
                row[pos[&c]] = BigInt::from(v);
            }
            row
        })
        .collect();
    rank + bareiss_rank(dense)
}

fn rank_dense_bigint(m: &SparseMatrix) -> usize {
    let dense: IntMatrix = m
        .entries
        .iter()
        .map(|r| {
            let mut row = vec![BigInt::zero(); m.cols];
            for (&c, &v) in r {
                row[c] = BigInt::from(v);
            }
            row
        })
        .collect();
    bareiss_rank(dense)
}

/// Rank of a dense integer matrix by fraction-free elimination.
pub(crate) fn bareiss_rank(mut a: IntMatrix) -> usize {
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for j in c + 1..cols {
                let v = &a[r][j] * &a[rank][c] - &a[r][c] * &a[rank][j];
                a[r][j] = v / &prev;
            }
            a[r][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
    }
    rank
}

fn rank_mod_p(m: &SparseMatrix, p: u64) -> usize {
    let md = |v: i64| -> u64 { v.rem_euclid(p as i64) as u64 };
    let mut rows: Vec<BTreeMap<usize, u64>> = m
        .entries
        .iter()
        .map(|r| r.iter().filter_map(|(&c, &v)| Some((c, md(v))).filter(|x| x.1 != 0)).collect())
        .collect();
    let mut pivots: HashMap<usize, BTreeMap<usize, u64>> = HashMap::new();
    let mut rank = 0;
    for row in rows.iter_mut() {
        let mut row = std::mem::take(row);
        while let Some((&c, &v)) = row.iter().next() {
            match pivots.get(&c) {
                Some(prow) => {
                    // prow is normalized so prow[c] == 1
                    for (&pc, &pv) in prow {
                        let cur = row.get(&pc).copied().unwrap_or(0);
                        let nv = (cur + p - (v as u128 * pv as u128 % p as u128) as u64) % p;
                        if nv == 0 {
                            row.remove(&pc);
                        } else {
                            row.insert(pc, nv);
                        }
                    }
                }
                None => {
                    let inv = mod_pow(v, p - 2, p);
                    let normalized =
                        row.iter().map(|(&k, &x)| (k, (x as u128 * inv as u128 % p as u128) as u64)).collect();
                    pivots.insert(c, normalized);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn mod_pow(b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u128;
    let mut base = b as u128 % p as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u128;
        }
        base = base * base % p as u128;
        e >>= 1;
    }
    acc as u64
}
