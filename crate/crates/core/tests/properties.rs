mod common;

use knotbound::braid::{braid_equal, closure_key, garside_normal_form};
use knotbound::homfly::skein_residual;
use knotbound::seifert::{alexander, determinant_invariant, signature};
use knotbound::*;
use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn word_strategy(max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2usize..=4).prop_flat_map(move |n| {
        let g = n as i32 - 1;
        prop::collection::vec(prop_oneof![1..=g, -g..=-1], 0..=max_len)
            .prop_map(move |l| BraidWord::new(n, l).unwrap())
    })
}

fn knot_strategy(max_len: usize) -> impl Strategy<Value = BraidWord> {
    any::<u64>().prop_map(move |seed| common::random_knot_word(&mut ChaCha8Rng::seed_from_u64(seed), max_len))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn skein_residual_vanishes(w in word_strategy(8), k in any::<prop::sample::Index>()) {
        prop_assume!(!w.is_empty());
        let e = HomflyEngine::new();
        prop_assert!(skein_residual(&e, &w, k.index(w.len())).is_zero());
    }

    #[test]
    fn normal_form_is_a_word_invariant(w in word_strategy(8)) {
        let nf = garside_normal_form(&w);
        prop_assert!(braid_equal(&nf.to_word(), &w));
        prop_assert_eq!(garside_normal_form(&nf.to_word()), nf);
    }

    #[test]
    fn closure_key_ignores_rotation(w in word_strategy(7), k in 0usize..8) {
        prop_assert_eq!(closure_key(&w), closure_key(&w.rotate(k)));
    }

    #[test]
    fn markov_invariance(w in knot_strategy(6), positive in any::<bool>()) {
        let e = HomflyEngine::new();
        let v = w.stabilize(positive);
        prop_assert_eq!(e.homfly(&v), e.homfly(&w));
        prop_assert_eq!(signature(&v).unwrap(), signature(&w).unwrap());
        prop_assert_eq!(determinant_invariant(&v).unwrap(), determinant_invariant(&w).unwrap());
        prop_assert_eq!(reduced_khovanov(&braid_to_pd(&v)), reduced_khovanov(&braid_to_pd(&w)));
    }

    #[test]
    fn alexander_at_minus_one_is_determinant(w in knot_strategy(8)) {
        let a = alexander(&w).unwrap();
        let at: BigInt = a.terms().map(|(e, c)| if e.rem_euclid(2) == 0 { c.clone() } else { -c }).sum();
        prop_assert_eq!(at.abs(), determinant_invariant(&w).unwrap());
    }

    #[test]
    fn mirror_flips_signature_and_khovanov(w in knot_strategy(6)) {
        let m = w.mirror();
        prop_assert_eq!(signature(&m).unwrap(), -signature(&w).unwrap());
        prop_assert_eq!(reduced_khovanov(&braid_to_pd(&m)), reduced_khovanov(&braid_to_pd(&w)).reflect());
    }

    #[test]
    fn euler_characteristic_of_three_braids(l in prop::collection::vec(prop_oneof![Just(1), Just(2), Just(-1), Just(-2)], 0..=8)) {
        let w = BraidWord::new(3, l).unwrap();
        let jones = homfly(&w).to_aq().specialize_a_power(2);
        prop_assert_eq!(reduced_khovanov(&braid_to_pd(&w)).euler_characteristic(), jones);
    }
}

#[test]
fn conjugation_preserves_everything() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let e = HomflyEngine::new();
    for _ in 0..20 {
        let w = common::random_knot_word(&mut rng, 7);
        let v = common::random_conjugate(&mut rng, &w);
        assert_eq!(e.homfly(&v), e.homfly(&w), "{}", w.to_text());
        assert_eq!(signature(&v), signature(&w));
        assert_eq!(determinant_invariant(&v), determinant_invariant(&w));
        assert_eq!(reduced_khovanov(&braid_to_pd(&v)), reduced_khovanov(&braid_to_pd(&w)));
    }
}
