//! Conjugation-invariant closure keys and destabilization.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::garside::{braid_equal, garside_normal_form, GarsideNormalForm, Permutation};
use super::{BraidError, BraidWord};

/// Least normal form over all cyclic rotations of the cyclically reduced word.
///
/// Equal keys imply conjugate braids, hence isotopic closures.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClosureKey(pub GarsideNormalForm);

impl ClosureKey {
    pub fn strands(&self) -> usize {
        self.0.strands
    }

    /// Compact text form, used as the cache key.
    pub fn to_text(&self) -> String {
        let nf = &self.0;
        let mut s = format!("n{}d{}", nf.strands, nf.infimum);
        for f in &nf.factors {
            s.push(':');
            for v in f.as_slice() {
                s.push(char::from_digit(*v as u32, 36).unwrap_or('?'));
            }
        }
        s
    }
}

pub fn closure_key(w: &BraidWord) -> ClosureKey {
    let r = w.cyclic_reduce();
    if r.is_empty() {
        return ClosureKey(garside_normal_form(&r));
    }
    (0..r.len())
        .map(|k| ClosureKey(garside_normal_form(&r.rotate(k))))
        .min()
        .expect("nonempty rotation set")
}

/// Sign of the deleted letter in a destabilization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum StabSign {
    Positive,
    Negative,
}

/// States explored by the rewrite search before giving up.
pub const DESTABILIZE_SEARCH_LIMIT: usize = 20_000;

/// Delete the single `σ_{n-1}^{±1}` of a word in which it occurs once.
fn destabilize_direct(w: &BraidWord) -> Option<(BraidWord, StabSign)> {
    let n = w.strands();
    if n < 2 {
        return None;
    }
    let top = (n - 1) as i32;
    let r = w.cyclic_reduce();
    let positions: Vec<usize> =
        r.letters().iter().enumerate().filter(|(_, e)| e.abs() == top).map(|(k, _)| k).collect();
    if positions.len() != 1 {
        return None;
    }
    let at = positions[0];
    let rotated = r.rotate(at + 1);
    let (&last, rest) = rotated.letters().split_last().expect("nonempty");
    let sign = if last > 0 { StabSign::Positive } else { StabSign::Negative };
    Some((BraidWord::from_raw(n - 1, rest.to_vec()), sign))
}

/// Length-3 words over two adjacent generators that are equal as braids,
/// grouped by their normal form. Indices are relative (`1`, `2`).
fn adjacent_relations() -> Vec<(Vec<i32>, Vec<i32>)> {
    let alphabet = [1, -1, 2, -2];
    let mut words = Vec::new();
    for &x in &alphabet {
        for &y in &alphabet {
            for &z in &alphabet {
                let l = vec![x, y, z];
                let w = BraidWord::from_raw(3, l.clone());
                if w.free_reduce().len() == 3 {
                    words.push((garside_normal_form(&w), l));
                }
            }
        }
    }
    let mut pairs = Vec::new();
    for (a, (nfa, la)) in words.iter().enumerate() {
        for (nfb, lb) in &words[a + 1..] {
            if nfa == nfb {
                pairs.push((la.clone(), lb.clone()));
                pairs.push((lb.clone(), la.clone()));
            }
        }
    }
    pairs
}

/// Words reachable from `w` by one braid relation, one commutation or one rotation.
fn neighbours(l: &[i32], n: usize, relations: &[(Vec<i32>, Vec<i32>)]) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    let len = l.len();
    if len > 1 {
        let mut v = l.to_vec();
        v.rotate_left(1);
        out.push(v);
    }
    for at in 0..len.saturating_sub(1) {
        if (l[at].abs() - l[at + 1].abs()).abs() >= 2 {
            let mut v = l.to_vec();
            v.swap(at, at + 1);
            out.push(v);
        }
    }
    for at in 0..len.saturating_sub(2) {
        let window = &l[at..at + 3];
        let base = window.iter().map(|e| e.abs()).min().unwrap();
        if window.iter().any(|e| e.abs() > base + 1) || base as usize + 1 >= n {
            continue;
        }
        let rel: Vec<i32> = window.iter().map(|&e| e.signum() * (e.abs() - base + 1)).collect();
        for (from, to) in relations {
            if *from == rel {
                let mut v = l.to_vec();
                for (k, &e) in to.iter().enumerate() {
                    v[at + k] = e.signum() * (e.abs() + base - 1);
                }
                out.push(v);
            }
        }
    }
    out
}

/// Breadth-first search through rewrites of `w` (and its conjugates by
/// permutation braids) for a word with a single `σ_{n-1}^{±1}`.
fn destabilize_search(w: &BraidWord) -> Option<(BraidWord, StabSign)> {
    let n = w.strands();
    if n < 2 {
        return None;
    }
    let relations = adjacent_relations();
    let mut seen: HashSet<Vec<i32>> = HashSet::new();
    let mut queue: VecDeque<Vec<i32>> = VecDeque::new();
    for c in simple_conjugators(n) {
        let conj = c.concat(w).concat(&c.inverse()).cyclic_reduce();
        if seen.insert(conj.letters().to_vec()) {
            queue.push_back(conj.letters().to_vec());
        }
    }
    while let Some(l) = queue.pop_front() {
        let word = BraidWord::from_raw(n, l.clone());
        if let Some(found) = destabilize_direct(&word) {
            return Some(found);
        }
        if seen.len() >= DESTABILIZE_SEARCH_LIMIT {
            continue;
        }
        for v in neighbours(&l, n, &relations) {
            let v = BraidWord::from_raw(n, v).cyclic_reduce().letters().to_vec();
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    None
}

/// Reduced words of every permutation braid and of their inverses.
fn simple_conjugators(n: usize) -> Vec<BraidWord> {
    let mut out = vec![BraidWord::empty(n)];
    let mut perms = vec![Permutation::identity(n)];
    let mut frontier = perms.clone();
    // breadth-first over the weak order; n <= 5 keeps this tiny
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for p in &frontier {
            for i in 1..n {
                let mut letters = p.to_letters();
                letters.push(i as i32);
                let w = BraidWord::from_raw(n, letters.clone());
                let nf = garside_normal_form(&w);
                let q = if nf.infimum == 1 && nf.factors.is_empty() {
                    Permutation::delta(n)
                } else if nf.infimum == 0 && nf.factors.len() == 1 {
                    nf.factors[0].clone()
                } else {
                    continue;
                };
                if !perms.contains(&q) {
                    perms.push(q.clone());
                    next.push(q);
                }
            }
        }
        frontier = next;
    }
    for p in perms.iter().skip(1) {
        let w = BraidWord::from_raw(n, p.to_letters());
        out.push(w.inverse());
        out.push(w);
    }
    out
}

/// Markov destabilization: remove the top strand.
///
/// Tries the word itself (up to rotation), then the conjugate by `certificate`
/// and its Garside normal form when one is given, then a bounded rewrite search.
pub fn destabilize(
    w: &BraidWord,
    certificate: Option<&BraidWord>,
) -> Result<(BraidWord, StabSign), BraidError> {
    if let Some(found) = destabilize_direct(w) {
        return Ok(found);
    }
    if let Some(c) = certificate {
        if c.strands() != w.strands() {
            return Err(BraidError::StrandMismatch { left: c.strands(), right: w.strands() });
        }
        let conj = c.concat(w).concat(&c.inverse());
        let normal = garside_normal_form(&conj).to_word();
        for candidate in [conj.free_reduce(), normal] {
            if let Some(found) = destabilize_direct(&candidate) {
                if braid_equal(&candidate, &conj) {
                    return Ok(found);
                }
            }
        }
    }
    destabilize_search(w).ok_or(BraidError::NotDestabilizable)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bw(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn direct_destabilization() {
        let (r, s) = destabilize(&bw(3, &[1, 2]), None).unwrap();
        assert_eq!(r, bw(2, &[1]));
        assert_eq!(s, StabSign::Positive);
        assert!(matches!(destabilize(&bw(2, &[1, 1]), None), Err(BraidError::NotDestabilizable)));
        let (r, s) = destabilize(&bw(3, &[1, -2, 1]), None).unwrap();
        assert_eq!(r, bw(2, &[1, 1]));
        assert_eq!(s, StabSign::Negative);
    }

    #[test]
    fn search_uses_braid_relations() {
        // 2 3 2 3 2 = 2 2 3 2 2
        let (r, s) = destabilize(&bw(4, &[2, 3, 2, 3, 2]), None).unwrap();
        assert_eq!(r.strands(), 3);
        assert_eq!(s, StabSign::Positive);
        assert_eq!(r.writhe(), 4);
    }

    #[test]
    fn certificate_is_checked() {
        let alphabet = [1, -1, 2, -2];
        let mut hits = 0;
        for a in alphabet {
            for b in alphabet {
                for c in alphabet {
                    for d in alphabet {
                        let w = bw(3, &[a, b, c, d]);
                        if destabilize_direct(&w).is_some() {
                            continue;
                        }
                        for cert in simple_conjugators(3) {
                            let conj = cert.concat(&w).concat(&cert.inverse());
                            let normal = garside_normal_form(&conj).to_word();
                            if destabilize_direct(&normal).is_some() {
                                let (r, _) = destabilize(&w, Some(&cert)).unwrap();
                                assert_eq!(r.strands(), 2);
                                hits += 1;
                            }
                        }
                    }
                }
            }
        }
        assert!(hits > 0);
        let w = bw(3, &[1, 1, 2, 2]);
        assert!(matches!(
            destabilize(&w, Some(&bw(2, &[]))),
            Err(BraidError::StrandMismatch { .. })
        ));
    }

    #[test]
    fn relations_table() {
        let rel = adjacent_relations();
        assert!(rel.contains(&(vec![1, 2, 1], vec![2, 1, 2])));
        assert!(rel.contains(&(vec![1, 2, -1], vec![-2, 1, 2])));
        assert!(rel.contains(&(vec![-1, -2, -1], vec![-2, -1, -2])));
    }

    #[test]
    fn conjugator_count() {
        // every non-identity simple element and its inverse, plus the empty word
        assert_eq!(simple_conjugators(3).len(), 1 + 2 * 5);
        assert_eq!(simple_conjugators(4).len(), 1 + 2 * 23);
    }

    #[test]
    fn key_is_conjugation_invariant() {
        let w = bw(3, &[1, 2, 2, -1, 2]);
        let c = bw(3, &[2, -1]);
        let conj = c.concat(&w).concat(&c.inverse());
        assert_eq!(closure_key(&w), closure_key(&conj));
        assert_eq!(closure_key(&w), closure_key(&w.rotate(2)));
        assert_ne!(closure_key(&w), closure_key(&w.mirror()));
    }
}
