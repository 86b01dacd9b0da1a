//! Registry of the reproducible claims, grouped into four sections, each check
//! recomputed from scratch.

use num_bigint::BigInt;
use serde::Serialize;

use crate::bounds::{
    delta_range, destabilization_deficit, grading_convert, kr_report_with, mfw_report_with, quadrant_check,
    skein_triangle, slice_bennequin_check, thin_reconstruct, QuadrantDatum,
};
use crate::braid::{
    bm_reduced, bm_resolution, bm_resolution_printed, destabilize, expand_qp, family_word, g4_from_qp, BraidWord, FamilySpec, KStarLabel,
    QPFactorization, SkeinRole, StabSign,
};
use crate::homfly::{skein_residual, HomflyEngine};
use crate::khovanov::{braid_to_pd, poincare_polynomial, reduced_khovanov};
use crate::laurent::{AQPolynomial, LaurentPoly2};
use crate::seifert::{determinant_invariant, signature};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub section: u8,
    pub id: String,
    pub statement: String,
    pub passed: bool,
    pub detail: String,
}

impl Claim {
    fn new(section: u8, id: &str, statement: &str, passed: bool, detail: impl Into<String>) -> Self {
        Claim { section, id: id.to_string(), statement: statement.to_string(), passed, detail: detail.into() }
    }

    fn compare<T: PartialEq + std::fmt::Display>(section: u8, id: &str, statement: &str, got: T, want: T) -> Self {
        let passed = got == want;
        let detail = if passed { format!("{got}") } else { format!("got {got}, expected {want}") };
        Claim::new(section, id, statement, passed, detail)
    }

    pub fn line(&self) -> String {
        format!("[{}] {}.{} {}: {}", if self.passed { "PASS" } else { "FAIL" }, self.section, self.id, self.statement, self.detail)
    }
}

fn word(spec: FamilySpec) -> BraidWord {
    family_word(spec).expect("built-in family parameters are valid")
}

fn kstar(label: KStarLabel) -> BraidWord {
    word(FamilySpec::KStarResolution(label))
}

/// `Σ c a^i q^j` from `(a, q, c)` triples.
pub fn aq(terms: &[(i32, i32, i64)]) -> AQPolynomial {
    AQPolynomial::from_aq_terms(terms.iter().map(|&(a, q, c)| ((a, q), c)))
}

pub fn kstar_homfly() -> AQPolynomial {
    aq(&[(8, 4, -1), (8, 0, -1), (8, -4, -1), (6, 6, 1), (6, 2, 1), (6, -2, 1), (6, -6, 1)])
}

pub fn five_two_mirror_homfly() -> AQPolynomial {
    aq(&[(6, 0, -1), (4, 2, 1), (4, 0, -1), (4, -2, 1), (2, 2, 1), (2, 0, -1), (2, -2, 1)])
}

/// `(q - q^-1)^2 P` of the mirrored 5_2.
pub fn five_two_mirror_cleared() -> LaurentPoly2 {
    let mut t = vec![(6, 2, -1), (6, 0, 2), (6, -2, -1)];
    for a in [4, 2] {
        t.extend([(a, 4, 1), (a, 2, -3), (a, 0, 4), (a, -2, -3), (a, -4, 1)]);
    }
    aq(&t).stored().clone()
}

/// `(q - q^-1) P(K_0)`.
pub fn k0_cleared() -> LaurentPoly2 {
    aq(&[(7, 4, 1), (7, -4, 1), (5, 6, -1), (5, 0, -1), (5, -6, -1), (3, 2, 1), (3, 0, -1), (3, -2, 1)])
        .stored()
        .clone()
}

/// `(q - q^-1) P(K_0-)`.
pub fn k0minus_cleared() -> LaurentPoly2 {
    aq(&[
        (5, 4, 1),
        (5, 2, -1),
        (5, 0, 2),
        (5, -2, -1),
        (5, -4, 1),
        (3, 6, -1),
        (3, 4, 1),
        (3, 2, -3),
        (3, 0, 3),
        (3, -2, -3),
        (3, -4, 1),
        (3, -6, -1),
        (1, 4, 1),
        (1, 2, -2),
        (1, 0, 3),
        (1, -2, -2),
        (1, -4, 1),
    ])
    .stored()
    .clone()
}

pub const KSTAR_POINCARE: &str =
    "q^4+q^4t+q^6t^2+q^8t^2+q^8t^3+q^{10}t^3+2q^{10}t^4+q^{12}t^5+q^{14}t^5+2q^{14}t^6+q^{16}t^7+q^{18}t^8+q^{20}t^9";

/// Expected `(σ, det)` of the resolution tree nodes.
pub const RESOLUTION_TABLE: [(KStarLabel, i64, i64); 7] = [
    (KStarLabel::Plus, 2, 7),
    (KStarLabel::Minus, 2, 7),
    (KStarLabel::ZeroZero, 2, 7),
    (KStarLabel::Zero, 1, 0),
    (KStarLabel::ZeroMinus, 1, 14),
    (KStarLabel::ZeroMinusMinus, 1, 12),
    (KStarLabel::ZeroMinusZero, 0, 1),
];

pub const BM_PARAMETERS: [(i32, i32, i32, i32); 3] = [(1, 1, 1, 1), (2, 1, 1, 1), (1, 2, 1, 2)];

fn section_one(e: &HomflyEngine) -> Vec<Claim> {
    let mut out = Vec::new();
    let k1 = word(FamilySpec::ElrifaiK(1));

    let residual_zero = (0..k1.len()).all(|at| skein_residual(e, &k1, at).is_zero());
    out.push(Claim::new(1, "skein", "a P(K-) - a^-1 P(K+) = (q - q^-1) P(K0) at every crossing of K*", residual_zero, format!("{} crossings", k1.len())));
    out.push(Claim::compare(1, "unknot", "P(unknot) = 1", e.homfly(&BraidWord::empty(1)).to_aq(), AQPolynomial::from_aq_terms([((0, 0), 1)])));

    for spec in [FamilySpec::ElrifaiK(1), FamilySpec::ElrifaiK(2), FamilySpec::ElrifaiL(1), FamilySpec::ElrifaiL(2)] {
        let r = mfw_report_with(e, &word(spec));
        let (ok, detail) = match &r {
            Ok(r) => (r.mfw_bound == 2 && !r.mfw_sharp(), format!("d = ({}, {}), bound {}", r.d_minus, r.d_plus, r.mfw_bound)),
            Err(err) => (false, err.to_string()),
        };
        out.push(Claim::new(1, &format!("mfw-nonsharp-{spec}"), "MFW bound 2 < 3 on a braid-index-3 Elrifai knot", ok, detail));
    }

    for (w, d, name) in [(k1.clone(), (4, 8), "kstar"), (k1.mirror(), (-8, -4), "kstar-mirror")] {
        let (ok, detail) = match kr_report_with(e, &w, d.0, d.1) {
            Ok(r) => (
                !r.mfw_sharp() && r.kr_sharp() == Some(true) && r.kr_bound == Some(3),
                format!("MFW sharp {}, KR sharp {:?}, KR bound {:?}", r.mfw_sharp(), r.kr_sharp(), r.kr_bound),
            ),
            Err(err) => (false, err.to_string()),
        };
        out.push(Claim::new(1, &format!("{name}-sharpness"), "MFW is not sharp but KR-MFW is sharp", ok, detail));
    }

    let t7 = word(FamilySpec::Torus2(7));
    let ok = mfw_report_with(e, &t7).map(|r| r.mfw_sharp() && r.mfw_bound == 2).unwrap_or(false);
    out.push(Claim::new(1, "torus-sharp", "MFW is sharp on T(2,7) and the bound is its braid index", ok, "bound 2"));

    let bm = word(FamilySpec::BM(1, 1, 1, 1));
    let ok = mfw_report_with(e, &bm).is_ok();
    out.push(Claim::new(1, "bm-mfw-chain", "the MFW chain holds on BM(1,1,1,1)", ok, format!("w = {}, b = {}", bm.writhe(), bm.strands())));

    let q = QuadrantDatum { b_k: 3, w_k: 6, observations: vec![(4, 7), (4, 6), (5, 6)] };
    out.push(Claim::compare(1, "quadrant-examples", "apex (3,6): (4,7) in, (4,6) out, (5,6) in", format!("{:?}", quadrant_check(&q)), format!("{:?}", [true, false, true])));
    out
}

fn section_two(e: &HomflyEngine) -> Vec<Claim> {
    let mut out = Vec::new();
    let p = |l: KStarLabel| e.homfly(&kstar(l)).to_aq();

    out.push(Claim::compare(2, "kstar-homfly", "P(K*) = a^8(-q^4 - 1 - q^-4) + a^6(q^6 + q^2 + q^-2 + q^-6)", p(KStarLabel::Plus), kstar_homfly()));
    out.push(Claim::compare(2, "minus-homfly", "P(K-) = P(mirror 5_2)", p(KStarLabel::Minus), five_two_mirror_homfly()));
    out.push(Claim::compare(2, "zerozero-homfly", "P(K00) = P(mirror 5_2)", p(KStarLabel::ZeroZero), five_two_mirror_homfly()));
    let two = p(KStarLabel::Minus).cleared_by(2);
    out.push(Claim::new(2, "minus-cleared", "(q - q^-1)^2 P(mirror 5_2) matches", two.as_ref() == Some(&five_two_mirror_cleared()), "cleared twice"));
    let z = p(KStarLabel::Zero);
    out.push(Claim::new(
        2,
        "zero-cleared",
        "(q - q^-1) P(K0) = a^7(q^4 + q^-4) - a^5(q^6 + 1 + q^-6) + a^3(q^2 - 1 + q^-2)",
        z.clearing_exponent() == 1 && z.cleared_by(1).as_ref() == Some(&k0_cleared()),
        format!("clearing exponent {}", z.clearing_exponent()),
    ));
    let zm = p(KStarLabel::ZeroMinus);
    out.push(Claim::new(
        2,
        "zerominus-cleared",
        "(q - q^-1) P(K0-) matches the three-line display",
        zm.clearing_exponent() == 1 && zm.cleared_by(1).as_ref() == Some(&k0minus_cleared()),
        format!("clearing exponent {}", zm.clearing_exponent()),
    ));

    for (label, sigma, det) in RESOLUTION_TABLE {
        let w = kstar(label);
        let got = (signature(&w).ok(), determinant_invariant(&w).ok());
        let want = (Some(sigma), Some(BigInt::from(det)));
        let passed = got == want;
        let show = |v: &(Option<i64>, Option<BigInt>)| {
            format!("({}, {})", v.0.map_or("-".into(), |x| x.to_string()), v.1.as_ref().map_or("-".into(), |x| x.to_string()))
        };
        let detail = if passed { show(&got) } else { format!("got (σ, det) = {}, expected {}", show(&got), show(&want)) };
        out.push(Claim::new(2, &format!("table-{label}"), "(σ, det) of the resolution node", passed, detail));
    }

    let d = |l| determinant_invariant(&kstar(l)).unwrap_or_default();
    let lhs = d(KStarLabel::ZeroMinusMinus) + BigInt::from(2) * d(KStarLabel::ZeroMinusZero);
    out.push(Claim::compare(2, "det-identity", "det K0-- + 2 det K0-0 = det K0-", lhs, d(KStarLabel::ZeroMinus)));

    let thin = thin_reconstruct(&p(KStarLabel::Minus), 2).and_then(|t| delta_range(&t));
    out.push(Claim::new(2, "minus-thin", "the thin table of K- from (P, σ = 2) has δ-range (2, 6)", thin == Ok((2, 6)), format!("{thin:?}")));

    let kh = reduced_khovanov(&braid_to_pd(&kstar(KStarLabel::Plus)));
    out.push(Claim::compare(2, "kstar-khovanov", "reduced Khovanov Poincaré polynomial of K*", poincare_polynomial(&kh), KSTAR_POINCARE.to_string()));

    out.push(Claim::compare(2, "grading-convert", "(i, j, k) = (-4, 4, 6) has I = i + 2j = 4", format!("{:?}", grading_convert(-4, 4, 6, 2).map(|g| g.0)), "Ok(4)".to_string()));
    out
}

fn section_three(e: &HomflyEngine) -> Vec<Claim> {
    let mut out = Vec::new();
    for (x, y, z, w) in BM_PARAMETERS {
        let tag = format!("{x},{y},{z},{w}");
        let plus = bm_resolution(SkeinRole::Plus, x, y, z, w);
        let minus = bm_resolution(SkeinRole::Minus, x, y, z, w);
        let zero = bm_resolution(SkeinRole::Zero, x, y, z, w);
        let at = minus.len() - 1;
        let triple = plus.letters()[..at] == minus.letters()[..at]
            && plus.letters()[at] == -minus.letters()[at]
            && zero.letters() == &minus.letters()[..at]
            && skein_residual(e, &minus, at).is_zero();
        let bm = word(FamilySpec::BM(x, y, z, w));
        out.push(Claim::new(3, &format!("bm-plus-{tag}"), "M+ closes to the BM knot type", e.homfly(&plus) == e.homfly(&bm), plus.to_text()));
        out.push(Claim::new(3, &format!("bm-triple-{tag}"), "M+, M-, M0 differ at the last crossing and satisfy the skein relation", triple, minus.to_text()));
        for (role, m) in [(SkeinRole::Minus, &minus), (SkeinRole::Zero, &zero)] {
            let stated = bm_reduced(role, x, y, z, w).expect("M- and M0 have stated reductions");
            let name = if role == SkeinRole::Minus { "minus" } else { "zero" };
            let (passed, detail) = match destabilize(m, None) {
                Ok((r, sign)) => (
                    sign == StabSign::Positive && r.strands() == 3 && e.homfly(&r) == e.homfly(m),
                    format!("{} -> {} ({sign:?})", m.to_text(), r.to_text()),
                ),
                Err(err) => (false, err.to_string()),
            };
            out.push(Claim::new(3, &format!("bm-{name}-destab-{tag}"), "one positive destabilization reaches a 3-braid", passed, detail));
            out.push(Claim::new(
                3,
                &format!("bm-{name}-stated-{tag}"),
                "P of the 4-strand word equals P of the stated 3-strand reduction",
                e.homfly(&stated) == e.homfly(m),
                format!("stated {} (w = {}), 4-strand w = {}", stated.to_text(), stated.writhe(), m.writhe()),
            ));
        }
    }
    // the printed words with σ1^-1 σ2^-1 describe other links: recorded, not asserted
    let printed = bm_resolution_printed(SkeinRole::Minus, 1, 1, 1, 1);
    let stated = bm_reduced(SkeinRole::Minus, 1, 1, 1, 1).expect("stated reduction");
    let differs = e.homfly(&printed) != e.homfly(&stated);
    out.push(Claim::new(3, "bm-printed-words", "the variant with σ1^-1 σ2^-1 does not close to the stated reduction", differs, printed.to_text()));
    let bm = word(FamilySpec::BM(1, 1, 1, 1));
    out.push(Claim::compare(3, "deficit", "BM(1,1,1,1), p = 1: caps (9, 5)", format!("{:?}", destabilization_deficit(bm.writhe(), bm.strands() as i64, 1, 0)), "(9, 5)".into()));
    out.push(Claim::compare(3, "deficit-identity", "p = n = 0 leaves the bounds (8, 4) for w = 6, b = 3", format!("{:?}", destabilization_deficit(6, 3, 0, 0)), "(8, 4)".into()));
    let tri = [
        skein_triangle(SkeinRole::Plus, (2, 6), (1, 5)),
        skein_triangle(SkeinRole::Minus, (4, 8), (3, 7)),
        skein_triangle(SkeinRole::Zero, (0, 0), (0, 0)),
    ];
    out.push(Claim::compare(3, "skein-intervals", "δ-interval chains for the three roles", format!("{tri:?}"), "[(2, 8), (2, 6), (-1, 1)]".into()));
    out
}

fn section_four(e: &HomflyEngine) -> Vec<Claim> {
    let mut out = Vec::new();
    for k in 1..=2i32 {
        for (spec, torus, d, qp, two_g4) in [
            (FamilySpec::ElrifaiK(k), 6 * k + 1, (6 * k, 6 * k + 2), QPFactorization::elrifai_k(k as usize), 6 * k - 2),
            (FamilySpec::ElrifaiL(k), 6 * k + 5, (6 * k + 4, 6 * k + 6), QPFactorization::elrifai_l(k as usize), 6 * k + 4),
        ] {
            let p = e.homfly(&word(spec));
            let same = p == e.homfly(&word(FamilySpec::Torus2(torus)));
            let range = p.a_degree_range().ok();
            out.push(Claim::new(
                4,
                &format!("torus-{spec}"),
                "P equals that of T(2, m) with the stated a-degree range",
                same && range == Some(d),
                format!("T(2,{torus}), d = {range:?}"),
            ));

            let dq = expand_qp(&qp);
            let same = e.homfly(&dq) == p;
            out.push(Claim::new(4, &format!("qp-{spec}"), "the quasipositive word closes to the same knot type", same, format!("{} factors", qp.factor_count())));
            out.push(Claim::compare(4, &format!("g4-{spec}"), "2 g4 = p - b + 1", g4_from_qp(&qp), two_g4 as i64));
            out.push(Claim::compare(4, &format!("slice-bennequin-{spec}"), "2 g4 >= w - b + 1 is sharp on the quasipositive word", format!("{:?}", slice_bennequin_check(&dq, two_g4 as i64)), "(true, true)".into()));
        }
    }
    let k1 = word(FamilySpec::ElrifaiK(1));
    let mut obs = Vec::new();
    for x in 0..4 {
        for y in 0..4 {
            obs.push((3 + x + y, 6 + x - y));
        }
    }
    let stabilized = [k1.stabilize(true), k1.stabilize(false), k1.stabilize(true).stabilize(false)];
    obs.extend(stabilized.iter().map(|s| (s.strands() as i64, s.writhe())));
    let q = QuadrantDatum { b_k: 3, w_k: 6, observations: obs };
    let all_in = quadrant_check(&q).into_iter().all(|b| b);
    let off = QuadrantDatum { b_k: 3, w_k: 6, observations: vec![(4, 6), (3, 7), (5, 5), (2, 6)] };
    let none_in = quadrant_check(&off).into_iter().all(|b| !b);
    out.push(Claim::new(4, "quadrant", "stabilizations of K1 fill the quadrant at (3,6); off-parity points are rejected", all_in && none_in, format!("{} points", q.observations.len())));
    out
}

/// Claims of one section (`1..=4`).
pub fn verify_section(section: u8) -> Vec<Claim> {
    verify_section_with(&HomflyEngine::new(), section)
}

pub fn verify_section_with(e: &HomflyEngine, section: u8) -> Vec<Claim> {
    match section {
        1 => section_one(e),
        2 => section_two(e),
        3 => section_three(e),
        4 => section_four(e),
        _ => Vec::new(),
    }
}

pub fn verify_all() -> Vec<Claim> {
    let e = HomflyEngine::new();
    (1..=4).flat_map(|s| verify_section_with(&e, s)).collect()
}
