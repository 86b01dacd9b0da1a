//! Inputs shared by the benchmarks.

use knotbound::{family_word, BraidWord, FamilySpec};

pub fn kstar() -> BraidWord {
    family_word(FamilySpec::ElrifaiK(1)).expect("K(1) is defined")
}

/// Families in increasing crossing number.
pub fn ladder() -> Vec<(String, BraidWord)> {
    [FamilySpec::ElrifaiK(1), FamilySpec::BM(1, 1, 1, 1), FamilySpec::ElrifaiL(1), FamilySpec::ElrifaiK(2)]
        .into_iter()
        .map(|s| (s.to_string(), family_word(s).expect("built-in family")))
        .collect()
}
