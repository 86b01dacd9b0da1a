//! Knot invariants of braid closures and the braid-index bounds built on them.
//!
//! The crate computes, for the closure of a braid word:
//!
//! * the HOMFLYPT polynomial under the skein convention
//!   `a P(K-) - a^-1 P(K+) = (q - q^-1) P(K0)`, `P(unknot) = 1` ([`homfly`]);
//! * the Seifert matrix, signature, determinant and Alexander polynomial ([`seifert`]);
//! * reduced sl(2) Khovanov homology over the rationals ([`khovanov`]);
//! * Morton-Franks-Williams and KR-MFW bound reports, thin-homology
//!   reconstruction and the Bennequin/slice-genus checkers ([`bounds`]).
//!
//! Braid words are the universal input; see [`braid::BraidWord`].

pub mod bounds;
pub mod checks;
pub mod braid;
pub mod homfly;
pub mod khovanov;
pub mod laurent;
mod linalg;
pub mod seifert;

pub use bounds::{BoundReport, QuadrantDatum, TrigradedDims};
pub use braid::{family_word, BraidError, BraidWord, ClosureKey, FamilySpec, GarsideNormalForm, KStarLabel, QPFactorization, SkeinRole};
pub use homfly::{homfly, homfly_batch, HomflyEngine};
pub use khovanov::{braid_to_pd, reduced_khovanov, BigradedRanks, PlanarDiagram};
pub use laurent::{AQPolynomial, LaurentPoly1, LaurentPoly2};
