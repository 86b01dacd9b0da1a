#![allow(dead_code)]

use knotbound::BraidWord;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn random_word(rng: &mut ChaCha8Rng, strands: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..strands as i32);
            if rng.gen_bool(0.5) { g } else { -g }
        })
        .collect();
    BraidWord::new(strands, letters).unwrap()
}

/// A word whose closure is a knot and whose band surface is connected.
pub fn random_knot_word(rng: &mut ChaCha8Rng, max_len: usize) -> BraidWord {
    loop {
        let n = rng.gen_range(2..=4);
        let w = random_word(rng, n, max_len);
        if w.is_knot() && (1..n).all(|i| w.generator_count(i) > 0) {
            return w;
        }
    }
}

/// `c w c^-1` for a random generator `c`.
pub fn random_conjugate(rng: &mut ChaCha8Rng, w: &BraidWord) -> BraidWord {
    let g = rng.gen_range(1..w.strands() as i32);
    let c = if rng.gen_bool(0.5) { g } else { -g };
    let mut l = vec![c];
    l.extend_from_slice(w.letters());
    l.push(-c);
    BraidWord::new(w.strands(), l).unwrap()
}
