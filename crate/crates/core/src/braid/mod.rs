//! Braid words, their canonical forms, Markov moves and the braid families.

mod family;
mod garside;
mod markov;
mod qp;
mod word;

use thiserror::Error;

pub use family::{bm_reduced, bm_resolution, bm_resolution_printed, family_word, FamilySpec, KStarLabel, SkeinRole};
pub use garside::{braid_equal, garside_normal_form, GarsideNormalForm, Permutation};
pub use markov::{closure_key, destabilize, ClosureKey, StabSign, DESTABILIZE_SEARCH_LIMIT};
pub use qp::{expand_qp, g4_from_qp, QPFactorization};
pub use word::{closure_components, free_reduce, parse_braid_word, writhe, BraidWord};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("a braid needs at least one strand")]
    NoStrands,
    #[error("letter {letter} out of range for {strands} strands")]
    LetterOutOfRange { letter: i32, strands: usize },
    #[error("not an integer: {0:?}")]
    BadToken(String),
    #[error("no destabilization found within the search bound")]
    NotDestabilizable,
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
}
