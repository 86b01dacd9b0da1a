//! Braid-index bounds from the HOMFLYPT polynomial and from HOMFLY homology
//! gradings, thin-homology reconstruction, and the Bennequin-type checkers.
//!
//! For a diagram `D` with writhe `w` on `b` strands,
//! `w - b + 1 <= d- <= d+ <= w + b - 1`, where `d±` are the extreme `a`-degrees
//! of `P`; the same chain holds for the `j`-support `δ±` of reduced HOMFLY
//! homology. Each yields the lower bound `(top - bottom)/2 + 1` on the braid
//! index.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::braid::{BraidWord, SkeinRole};
use crate::homfly::HomflyEngine;
use crate::laurent::AQPolynomial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("the polynomial is zero")]
    ZeroPolynomial,
    #[error("MFW chain violated: {lower} <= {d_minus} <= {d_plus} <= {upper} fails")]
    MfwViolated { lower: i64, d_minus: i64, d_plus: i64, upper: i64 },
    #[error("δ+ - δ- = {0} is odd")]
    Parity(i64),
    #[error("δ- = {0} exceeds δ+ = {1}")]
    EmptyInterval(i64, i64),
    #[error("term {coefficient} a^{j} q^{i} has the wrong sign for a thin table with σ = {sigma}")]
    InconsistentThinness { i: i32, j: i32, coefficient: BigInt, sigma: i64 },
    #[error("thin reconstruction needs a knot polynomial, got clearing exponent {0}")]
    NotAKnotPolynomial(u32),
    #[error("empty table")]
    EmptyTable,
    #[error("k - j = {0} is odd")]
    ParityError(i64),
}

/// Trigraded dimensions `(i, j, k) ↦ dim`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TrigradedDims(pub BTreeMap<(i32, i32, i32), u64>);

impl TrigradedDims {
    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    /// `Σ (-1)^((k-j)/2) a^j q^i dim`.
    pub fn euler_sum(&self) -> AQPolynomial {
        AQPolynomial::from_aq_terms(self.0.iter().map(|(&(i, j, k), &d)| {
            let sign = if ((k - j) / 2).rem_euclid(2) == 0 { 1 } else { -1 };
            ((j, i), sign * d as i64)
        }))
    }
}

fn word_text<S: Serializer>(w: &BraidWord, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&w.to_text())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Deficits {
    /// `(w + b - 1) - d+`.
    pub upper: i64,
    /// `d- - (w - b + 1)`.
    pub lower: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    #[serde(serialize_with = "word_text")]
    pub word: BraidWord,
    pub w_d: i64,
    pub b_d: i64,
    pub d_minus: i64,
    pub d_plus: i64,
    pub delta_minus: Option<i64>,
    pub delta_plus: Option<i64>,
    pub mfw_bound: i64,
    pub kr_bound: Option<i64>,
    pub mfw_sharp_lower: bool,
    pub mfw_sharp_upper: bool,
    pub kr_sharp_lower: Option<bool>,
    pub kr_sharp_upper: Option<bool>,
    pub deficits: Deficits,
}

impl BoundReport {
    pub fn mfw_sharp(&self) -> bool {
        self.mfw_sharp_lower && self.mfw_sharp_upper
    }

    pub fn kr_sharp(&self) -> Option<bool> {
        Some(self.kr_sharp_lower? && self.kr_sharp_upper?)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |v: Option<i64>| v.map_or("-".to_string(), |x| x.to_string());
        let optb = |v: Option<bool>| v.map_or("-".to_string(), |x| x.to_string());
        let rows = [
            ("word", self.word.to_text()),
            ("w_D", self.w_d.to_string()),
            ("b_D", self.b_d.to_string()),
            ("d_minus", self.d_minus.to_string()),
            ("d_plus", self.d_plus.to_string()),
            ("delta_minus", opt(self.delta_minus)),
            ("delta_plus", opt(self.delta_plus)),
            ("mfw_bound", self.mfw_bound.to_string()),
            ("kr_bound", opt(self.kr_bound)),
            ("mfw_sharp_lower", self.mfw_sharp_lower.to_string()),
            ("mfw_sharp_upper", self.mfw_sharp_upper.to_string()),
            ("kr_sharp_lower", optb(self.kr_sharp_lower)),
            ("kr_sharp_upper", optb(self.kr_sharp_upper)),
            ("deficit_upper", self.deficits.upper.to_string()),
            ("deficit_lower", self.deficits.lower.to_string()),
        ];
        for (k, (name, value)) in rows.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "{name:<16} {value}")?;
        }
        Ok(())
    }
}

fn check_mfw(w_d: i64, b_d: i64, d_minus: i64, d_plus: i64) -> Result<(), BoundsError> {
    let (lower, upper) = (w_d - b_d + 1, w_d + b_d - 1);
    if lower <= d_minus && d_minus <= d_plus && d_plus <= upper {
        Ok(())
    } else {
        Err(BoundsError::MfwViolated { lower, d_minus, d_plus, upper })
    }
}

pub fn mfw_report(w: &BraidWord) -> Result<BoundReport, BoundsError> {
    mfw_report_with(&HomflyEngine::new(), w)
}

pub fn mfw_report_with(engine: &HomflyEngine, w: &BraidWord) -> Result<BoundReport, BoundsError> {
    let p = engine.homfly(w);
    let (lo, hi) = p.a_degree_range().map_err(|_| BoundsError::ZeroPolynomial)?;
    let (d_minus, d_plus) = (lo as i64, hi as i64);
    let w_d = w.writhe();
    let b_d = w.strands() as i64;
    check_mfw(w_d, b_d, d_minus, d_plus)?;
    Ok(BoundReport {
        word: w.clone(),
        w_d,
        b_d,
        d_minus,
        d_plus,
        delta_minus: None,
        delta_plus: None,
        mfw_bound: (d_plus - d_minus) / 2 + 1,
        kr_bound: None,
        mfw_sharp_lower: w_d - b_d + 1 == d_minus,
        mfw_sharp_upper: w_d + b_d - 1 == d_plus,
        kr_sharp_lower: None,
        kr_sharp_upper: None,
        deficits: Deficits { upper: w_d + b_d - 1 - d_plus, lower: d_minus - (w_d - b_d + 1) },
    })
}

/// MFW report extended by externally supplied `δ±`.
pub fn kr_report(w: &BraidWord, delta_minus: i64, delta_plus: i64) -> Result<BoundReport, BoundsError> {
    kr_report_with(&HomflyEngine::new(), w, delta_minus, delta_plus)
}

pub fn kr_report_with(
    engine: &HomflyEngine,
    w: &BraidWord,
    delta_minus: i64,
    delta_plus: i64,
) -> Result<BoundReport, BoundsError> {
    if delta_minus > delta_plus {
        return Err(BoundsError::EmptyInterval(delta_minus, delta_plus));
    }
    if (delta_plus - delta_minus) % 2 != 0 {
        return Err(BoundsError::Parity(delta_plus - delta_minus));
    }
    let mut r = mfw_report_with(engine, w)?;
    r.delta_minus = Some(delta_minus);
    r.delta_plus = Some(delta_plus);
    r.kr_bound = Some((delta_plus - delta_minus) / 2 + 1);
    r.kr_sharp_lower = Some(r.w_d - r.b_d + 1 == delta_minus);
    r.kr_sharp_upper = Some(r.w_d + r.b_d - 1 == delta_plus);
    Ok(r)
}

/// The thin table determined by `p` and `σ`: `c a^j q^i` sits at
/// `(i, j, σ - i - j)` with dimension `|c|`.
pub fn thin_reconstruct(p: &AQPolynomial, sigma: i64) -> Result<TrigradedDims, BoundsError> {
    if p.clearing_exponent() != 0 {
        return Err(BoundsError::NotAKnotPolynomial(p.clearing_exponent()));
    }
    let mut table = BTreeMap::new();
    for (j, i, c) in p.to_triples() {
        let k = sigma - i as i64 - j as i64;
        let half = k - j as i64;
        let expected = if half % 2 != 0 {
            None
        } else if (half / 2).rem_euclid(2) == 0 {
            Some(true)
        } else {
            Some(false)
        };
        if expected != Some(c.is_positive()) {
            return Err(BoundsError::InconsistentThinness { i, j, coefficient: c, sigma });
        }
        let dim = c.abs().to_u64().expect("dimension fits in u64");
        table.insert((i, j, k as i32), dim);
    }
    Ok(TrigradedDims(table))
}

/// Extreme `j`-gradings of a table.
pub fn delta_range(t: &TrigradedDims) -> Result<(i64, i64), BoundsError> {
    let js = t.0.keys().map(|&(_, j, _)| j as i64);
    let lo = js.clone().min().ok_or(BoundsError::EmptyTable)?;
    let hi = js.max().ok_or(BoundsError::EmptyTable)?;
    Ok((lo, hi))
}

/// `δ`-interval of the unknown member of a skein triple from the other two.
///
/// Known intervals are given as `(−, 0)` for `Plus`, `(+, 0)` for `Minus` and
/// `(+, −)` for `Zero`.
pub fn skein_triangle(role: SkeinRole, a: (i64, i64), b: (i64, i64)) -> (i64, i64) {
    let (sa, sb) = match role {
        SkeinRole::Plus => (2, 1),
        SkeinRole::Minus => (-2, -1),
        SkeinRole::Zero => (-1, 1),
    };
    ((a.0 + sa).min(b.0 + sb), (a.1 + sa).max(b.1 + sb))
}

/// After `p` positive and `n` negative destabilizations are available:
/// `δ+ <= w + b - 1 - 2p` and `δ- >= w - b + 1 + 2n`.
pub fn destabilization_deficit(w_d: i64, b_d: i64, p: u64, n: u64) -> (i64, i64) {
    (w_d + b_d - 1 - 2 * p as i64, w_d - b_d + 1 + 2 * n as i64)
}

/// `(i, j, k) ↦ (I, J) = (i + N j, (k - j)/2)`.
pub fn grading_convert(i: i64, j: i64, k: i64, n: u64) -> Result<(i64, i64), BoundsError> {
    if (k - j) % 2 != 0 {
        return Err(BoundsError::ParityError(k - j));
    }
    Ok((i + n as i64 * j, (k - j) / 2))
}

/// `β = w - b`.
pub fn bennequin(w: &BraidWord) -> i64 {
    w.writhe() - w.strands() as i64
}

/// Conjectured apex `(b_K, w_K)` with observed `(b_D, w_D)` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadrantDatum {
    pub b_k: i64,
    pub w_k: i64,
    pub observations: Vec<(i64, i64)>,
}

/// Whether each observation is `(b_K + x + y, w_K + x - y)` with `x, y >= 0`.
pub fn quadrant_check(q: &QuadrantDatum) -> Vec<bool> {
    q.observations
        .iter()
        .map(|&(b, w)| {
            let (db, dw) = (b - q.b_k, w - q.w_k);
            (db + dw) % 2 == 0 && db + dw >= 0 && db - dw >= 0
        })
        .collect()
}

/// `(2 g4 >= β + 1, 2 g4 == β + 1)`.
pub fn slice_bennequin_check(w: &BraidWord, two_g4: i64) -> (bool, bool) {
    let rhs = bennequin(w) + 1;
    (two_g4 >= rhs, two_g4 == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{expand_qp, family_word, g4_from_qp, FamilySpec, KStarLabel, QPFactorization};
    use crate::homfly::homfly;

    fn bw(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn mfw_examples() {
        let r = mfw_report(&family_word(FamilySpec::ElrifaiK(1)).unwrap()).unwrap();
        assert_eq!((r.w_d, r.b_d, r.d_minus, r.d_plus, r.mfw_bound), (6, 3, 6, 8, 2));
        assert!(r.mfw_sharp_upper && !r.mfw_sharp_lower);
        assert_eq!(r.deficits, Deficits { upper: 0, lower: 2 });

        let r = mfw_report(&bw(2, &[1, 1, 1])).unwrap();
        assert_eq!((r.d_minus, r.d_plus, r.mfw_bound), (2, 4, 2));
        assert!(r.mfw_sharp());

        let r = mfw_report(&bw(2, &[1])).unwrap();
        assert_eq!((r.d_minus, r.d_plus, r.mfw_bound), (0, 0, 1));
        assert!(r.mfw_sharp_lower && !r.mfw_sharp_upper);
        assert!(mfw_report(&BraidWord::empty(1)).unwrap().mfw_sharp());
    }

    #[test]
    fn kr_examples() {
        let k = family_word(FamilySpec::ElrifaiK(1)).unwrap();
        let r = kr_report(&k, 4, 8).unwrap();
        assert_eq!(r.kr_bound, Some(3));
        assert_eq!(r.kr_sharp(), Some(true));
        assert_eq!(r.mfw_bound, 2);
        let u = kr_report(&BraidWord::empty(1), 0, 0).unwrap();
        assert_eq!((u.kr_bound, u.kr_sharp()), (Some(1), Some(true)));
        assert_eq!(kr_report(&k, 4, 7), Err(BoundsError::Parity(3)));
        assert_eq!(kr_report(&k, 8, 4), Err(BoundsError::EmptyInterval(8, 4)));
    }

    #[test]
    fn report_rendering() {
        let r = kr_report(&bw(2, &[1, 1, 1]), 2, 4).unwrap();
        let j = r.to_json();
        assert_eq!(j["word"], "1 1 1");
        assert_eq!(j["kr_bound"], 2);
        assert_eq!(j["deficits"]["upper"], 0);
        let text = r.to_string();
        assert!(text.lines().any(|l| l.starts_with("mfw_bound") && l.ends_with(" 2")));
        assert_eq!(text.lines().count(), 15);
    }

    #[test]
    fn thin_tables() {
        let unknot = thin_reconstruct(&AQPolynomial::from_aq_terms([((0, 0), 1)]), 0).unwrap();
        assert_eq!(unknot.0, BTreeMap::from([((0, 0, 0), 1)]));
        assert_eq!(delta_range(&unknot), Ok((0, 0)));

        let minus = homfly(&family_word(FamilySpec::KStarResolution(KStarLabel::Minus)).unwrap()).to_aq();
        let expected = AQPolynomial::from_aq_terms([
            ((6, 0), -1),
            ((4, 2), 1),
            ((4, 0), -1),
            ((4, -2), 1),
            ((2, 2), 1),
            ((2, 0), -1),
            ((2, -2), 1),
        ]);
        assert_eq!(minus, expected);
        let t = thin_reconstruct(&minus, 2).unwrap();
        assert_eq!(t.total(), 7);
        assert!(t.0.keys().all(|&(i, j, k)| i + j + k == 2));
        assert_eq!(delta_range(&t), Ok((2, 6)));
        assert_eq!(t.euler_sum(), minus);
        assert_eq!(delta_range(&TrigradedDims::default()), Err(BoundsError::EmptyTable));
    }

    #[test]
    fn thin_sign_condition() {
        // the trefoil polynomial with the wrong σ
        let p = homfly(&bw(2, &[1, 1, 1])).to_aq();
        assert!(thin_reconstruct(&p, 2).is_ok());
        assert!(matches!(thin_reconstruct(&p, 0), Err(BoundsError::InconsistentThinness { .. })));
        assert!(matches!(thin_reconstruct(&p, 4), Err(BoundsError::InconsistentThinness { .. })));
        let link = homfly(&bw(2, &[1, 1])).to_aq();
        assert!(matches!(thin_reconstruct(&link, 1), Err(BoundsError::NotAKnotPolynomial(1))));
    }

    #[test]
    fn kstar_polynomial_passes_the_sign_test() {
        // the sign test alone does not detect non-thinness of this knot
        let p = homfly(&family_word(FamilySpec::ElrifaiK(1)).unwrap()).to_aq();
        let t = thin_reconstruct(&p, 2).unwrap();
        assert_eq!(delta_range(&t), Ok((6, 8)));
    }

    #[test]
    fn skein_triangle_examples() {
        assert_eq!(skein_triangle(SkeinRole::Plus, (2, 6), (1, 5)), (2, 8));
        assert_eq!(skein_triangle(SkeinRole::Minus, (4, 8), (3, 7)), (2, 6));
        assert_eq!(skein_triangle(SkeinRole::Zero, (0, 0), (0, 0)), (-1, 1));
    }

    #[test]
    fn arithmetic_checks() {
        assert_eq!(destabilization_deficit(8, 4, 1, 0), (9, 5));
        assert_eq!(destabilization_deficit(6, 3, 0, 0), (8, 4));
        assert_eq!(destabilization_deficit(6, 3, 2, 0).0, 4);
        assert_eq!(grading_convert(-4, 4, 6, 2), Ok((4, 1)));
        assert_eq!(grading_convert(0, 0, 0, 5), Ok((0, 0)));
        assert_eq!(grading_convert(2, 3, 4, 2), Err(BoundsError::ParityError(1)));
    }

    #[test]
    fn bennequin_checks() {
        assert_eq!(bennequin(&family_word(FamilySpec::ElrifaiK(1)).unwrap()), 3);
        assert_eq!(bennequin(&bw(2, &[1])), -1);
        for (qp, two_g4) in [(QPFactorization::elrifai_k(1), 4), (QPFactorization::elrifai_l(1), 10)] {
            let d = expand_qp(&qp);
            assert_eq!(g4_from_qp(&qp), two_g4);
            assert_eq!(slice_bennequin_check(&d, two_g4), (true, true));
        }
        assert_eq!(bennequin(&expand_qp(&QPFactorization::elrifai_k(1))), 3);
        // β + 1 = 0, so 2 g4 = 0 attains the bound
        assert_eq!(slice_bennequin_check(&bw(2, &[1]), 0), (true, true));
        assert_eq!(slice_bennequin_check(&bw(2, &[1]), 2), (true, false));
    }

    #[test]
    fn quadrant() {
        let q = QuadrantDatum { b_k: 3, w_k: 6, observations: vec![(4, 7), (4, 6), (5, 6), (3, 6), (2, 5), (4, 9)] };
        assert_eq!(quadrant_check(&q), vec![true, false, true, true, false, false]);
    }
}
