//! HOMFLYPT polynomial of a braid closure by the descending-diagram skein tree.
//!
//! Normalization: `a P(K-) - a^-1 P(K+) = z P(K0)`, `z = q - q^-1`,
//! `P(unknot) = 1`. Solving for a switched crossing gives
//!
//! * positive crossing: `P(K+) = a^2 P(K-) - a z P(K0)`
//! * negative crossing: `P(K-) = a^-2 P(K+) + a^-1 z P(K0)`
//!
//! A diagram is descending when every crossing is first met on its over
//! strand; such a diagram with `c` components is the unlink, with value
//! `δ^(c-1)`, `δ = (a - a^-1) z^-1`.

use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::braid::{closure_key, BraidWord, ClosureKey};
use crate::laurent::LaurentPoly2;

/// Memoizing skein evaluator. Shareable across threads.
#[derive(Default)]
pub struct HomflyEngine {
    cache: RwLock<HashMap<ClosureKey, LaurentPoly2>>,
}

/// One passage of a strand through a crossing.
#[derive(Clone, Copy, Debug)]
struct Passage {
    letter: usize,
    /// Entered at the left position of the crossing.
    from_left: bool,
}

/// Passages of the closure in traversal order: components ordered by their
/// smallest top position, each started at that position.
fn traversal(w: &BraidWord) -> (Vec<Passage>, usize) {
    let n = w.strands();
    let perm = w.closure_permutation();
    let mut visited = vec![false; n];
    let mut out = Vec::with_capacity(2 * w.len());
    let mut components = 0;
    for start in 0..n {
        if visited[start] {
            continue;
        }
        components += 1;
        let mut top = start;
        while !visited[top] {
            visited[top] = true;
            let mut pos = top;
            for (t, &e) in w.letters().iter().enumerate() {
                let p = e.unsigned_abs() as usize - 1;
                if pos == p {
                    out.push(Passage { letter: t, from_left: true });
                    pos = p + 1;
                } else if pos == p + 1 {
                    out.push(Passage { letter: t, from_left: false });
                    pos = p;
                }
            }
            top = perm[top];
        }
    }
    (out, components)
}

fn delta_power(k: usize) -> LaurentPoly2 {
    LaurentPoly2::unlink_factor().pow(k as u32)
}

fn mono(c: i64, ea: i32, ez: i32) -> LaurentPoly2 {
    LaurentPoly2::monomial(c, (ea, ez))
}

impl HomflyEngine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cache_len(&self) -> usize {
        self.cache.read().expect("cache lock").len()
    }

    pub fn homfly(&self, w: &BraidWord) -> LaurentPoly2 {
        self.eval(w.clone())
    }

    fn eval(&self, w: BraidWord) -> LaurentPoly2 {
        let mut w = w.cyclic_reduce();
        loop {
            let n = w.strands();
            if n == 1 {
                return LaurentPoly2::one();
            }
            // an absent generator splits the closure
            if let Some(i) = (1..n).find(|&i| w.generator_count(i) == 0) {
                let left: Vec<i32> =
                    w.letters().iter().copied().filter(|e| (e.unsigned_abs() as usize) < i).collect();
                let right: Vec<i32> = w
                    .letters()
                    .iter()
                    .filter(|e| (e.unsigned_abs() as usize) > i)
                    .map(|&e| e.signum() * (e.abs() - i as i32))
                    .collect();
                let pl = self.eval(BraidWord::from_raw(i, left));
                let pr = self.eval(BraidWord::from_raw(n - i, right));
                return &(&LaurentPoly2::unlink_factor() * &pl) * &pr;
            }
            if w.generator_count(1) == 1 {
                w = w.flip();
            }
            if w.generator_count(n - 1) == 1 {
                let at = w.letters().iter().position(|e| e.unsigned_abs() as usize == n - 1).unwrap();
                let rotated = w.rotate(at + 1);
                let rest = rotated.letters()[..rotated.len() - 1].to_vec();
                w = BraidWord::from_raw(n - 1, rest).cyclic_reduce();
                continue;
            }
            break;
        }

        let key = closure_key(&w);
        if let Some(p) = self.cache.read().expect("cache lock").get(&key) {
            return p.clone();
        }
        let p = self.descend(&w);
        self.cache.write().expect("cache lock").insert(key, p.clone());
        p
    }

    /// One pass along the traversal, switching every crossing first met from
    /// below and branching on its smoothing.
    fn descend(&self, w: &BraidWord) -> LaurentPoly2 {
        let (passages, components) = traversal(w);
        let mut letters = w.letters().to_vec();
        let mut seen = vec![false; letters.len()];
        let mut total = LaurentPoly2::zero();
        let mut multiplier = LaurentPoly2::one();
        for Passage { letter, from_left } in passages {
            if std::mem::replace(&mut seen[letter], true) {
                continue;
            }
            let positive = letters[letter] > 0;
            // a positive σ_i carries the left strand over
            if positive == from_left {
                continue;
            }
            let mut smoothed = letters.clone();
            smoothed.remove(letter);
            let smoothed = self.eval(BraidWord::from_raw(w.strands(), smoothed));
            let (switch, branch) =
                if positive { (mono(1, 2, 0), mono(-1, 1, 1)) } else { (mono(1, -2, 0), mono(1, -1, 1)) };
            total = &total + &(&(&multiplier * &branch) * &smoothed);
            multiplier = &multiplier * &switch;
            letters[letter] = -letters[letter];
        }
        &total + &(&multiplier * &delta_power(components - 1))
    }

    /// Evaluate many words in parallel against the shared cache.
    pub fn batch(&self, words: &[BraidWord]) -> Vec<LaurentPoly2> {
        words.par_iter().map(|w| self.homfly(w)).collect()
    }
}

/// HOMFLYPT polynomial of the closure of `w`, in `(a, z)`.
pub fn homfly(w: &BraidWord) -> LaurentPoly2 {
    HomflyEngine::new().homfly(w)
}

pub fn homfly_batch(words: &[BraidWord]) -> Vec<LaurentPoly2> {
    HomflyEngine::new().batch(words)
}

/// `a P(w_-) - a^-1 P(w_+) - z P(w_0)` at letter `at`; zero when the skein
/// relation holds.
pub fn skein_residual(engine: &HomflyEngine, w: &BraidWord, at: usize) -> LaurentPoly2 {
    let mut plus = w.letters().to_vec();
    plus[at] = plus[at].abs();
    let mut minus = plus.clone();
    minus[at] = -minus[at];
    let mut zero = plus.clone();
    zero.remove(at);
    let n = w.strands();
    let p_plus = engine.homfly(&BraidWord::from_raw(n, plus));
    let p_minus = engine.homfly(&BraidWord::from_raw(n, minus));
    let p_zero = engine.homfly(&BraidWord::from_raw(n, zero));
    let a = mono(1, 1, 0);
    let ainv = mono(1, -1, 0);
    &(&(&a * &p_minus) - &(&ainv * &p_plus)) - &(&LaurentPoly2::z() * &p_zero)
}

/// Coefficient helper for tests and checks.
pub fn coefficient(p: &LaurentPoly2, ea: i32, ez: i32) -> BigInt {
    p.coeff((ea, ez))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{family_word, FamilySpec};
    use crate::laurent::AQPolynomial;

    fn bw(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    /// Hand skein tree for σ1^m: resolve the last crossing of σ1^m, reaching
    /// σ1^{m-2} (switched and cancelled) and σ1^{m-1} (smoothed).
    fn torus_oracle(m: u32) -> LaurentPoly2 {
        let mut prev = LaurentPoly2::unlink_factor(); // σ1^0
        let mut cur = LaurentPoly2::one(); // σ1^1
        if m == 0 {
            return prev;
        }
        for _ in 1..m {
            let next = &(&mono(1, 2, 0) * &prev) - &(&mono(1, 1, 1) * &cur);
            prev = cur;
            cur = next;
        }
        cur
    }

    #[test]
    fn base_cases() {
        assert_eq!(homfly(&bw(2, &[1])), LaurentPoly2::one());
        assert_eq!(homfly(&BraidWord::empty(1)), LaurentPoly2::one());
        assert_eq!(homfly(&BraidWord::empty(2)), LaurentPoly2::unlink_factor());
    }

    #[test]
    fn trefoil_matches_hand_tree() {
        let p = homfly(&bw(2, &[1, 1, 1]));
        assert_eq!(p, torus_oracle(3));
        let expected = AQPolynomial::from_aq_terms([((4, 0), -1), ((2, 2), 1), ((2, -2), 1)]);
        assert_eq!(p.to_aq(), expected);
    }

    #[test]
    fn torus_recurrence() {
        let e = HomflyEngine::new();
        for m in 0..12u32 {
            let w = BraidWord::from_raw(2, vec![1; m as usize]);
            assert_eq!(e.homfly(&w), torus_oracle(m), "m = {m}");
        }
    }

    #[test]
    fn kstar_equation_three() {
        let p = homfly(&family_word(FamilySpec::ElrifaiK(1)).unwrap()).to_aq();
        let eq3 = AQPolynomial::from_aq_terms([
            ((8, 4), -1),
            ((8, 0), -1),
            ((8, -4), -1),
            ((6, 6), 1),
            ((6, 2), 1),
            ((6, -2), 1),
            ((6, -6), 1),
        ]);
        assert_eq!(p, eq3);
    }

    #[test]
    fn mirror_negates_range() {
        let w = bw(3, &[1, 2, 2, 1, 1, -2]);
        let (lo, hi) = homfly(&w).a_degree_range().unwrap();
        assert_eq!(homfly(&w.mirror()).a_degree_range().unwrap(), (-hi, -lo));
        assert_eq!(homfly(&w.mirror()), homfly(&w).mirror_a());
    }

    #[test]
    fn skein_on_kstar() {
        let e = HomflyEngine::new();
        let w = family_word(FamilySpec::ElrifaiK(1)).unwrap();
        for at in 0..w.len() {
            assert!(skein_residual(&e, &w, at).is_zero());
        }
    }

    #[test]
    fn batch_preserves_order() {
        let words = vec![bw(2, &[1]), bw(2, &[1, 1, 1]), bw(2, &[1])];
        let out = homfly_batch(&words);
        assert_eq!(out[0], LaurentPoly2::one());
        assert_eq!(out[2], LaurentPoly2::one());
        assert_eq!(out[1], torus_oracle(3));
        assert!(homfly_batch(&[]).is_empty());
    }
}
