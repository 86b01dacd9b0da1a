//! One PASS/FAIL line per acceptance criterion. Known red items are printed as
//! FAIL and listed in `KNOWN_RED`; any other failure makes the process exit 1.

mod common;

use std::time::{Duration, Instant};

use knotbound::bounds::{destabilization_deficit, grading_convert, kr_report, mfw_report, quadrant_check, slice_bennequin_check};
use knotbound::braid::{bm_reduced, bm_resolution, expand_qp, g4_from_qp, QPFactorization, SkeinRole};
use knotbound::checks::{
    five_two_mirror_cleared, k0_cleared, k0minus_cleared, kstar_homfly, BM_PARAMETERS, KSTAR_POINCARE,
};
use knotbound::homfly::skein_residual;
use knotbound::khovanov::{poincare_polynomial, reduced_khovanov};
use knotbound::seifert::{determinant_invariant, signature};
use knotbound::*;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Sub-checks allowed to fail, with the reason kept in the decisions ledger.
const KNOWN_RED: &[&str] = &["3/sigma K0"];

struct Report {
    unexpected: Vec<String>,
}

impl Report {
    fn criterion(&mut self, n: u32, title: &str, tolerance: &str, subchecks: Vec<(String, bool, String)>) {
        let failing: Vec<&(String, bool, String)> = subchecks.iter().filter(|c| !c.1).collect();
        let status = if failing.is_empty() { "PASS" } else { "FAIL" };
        println!("{status} [{n:>2}] {title} (tolerance: {tolerance}; {}/{} subchecks)", subchecks.len() - failing.len(), subchecks.len());
        for (name, _, detail) in failing {
            let key = format!("{n}/{name}");
            let known = KNOWN_RED.contains(&key.as_str());
            println!("       - {name}: {detail}{}", if known { " [known red, see ledger]" } else { "" });
            if !known {
                self.unexpected.push(key);
            }
        }
    }
}

fn word(spec: FamilySpec) -> BraidWord {
    family_word(spec).unwrap()
}

fn kstar(label: KStarLabel) -> BraidWord {
    word(FamilySpec::KStarResolution(label))
}

fn check(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> (String, bool, String) {
    (name.into(), ok, detail.into())
}

fn secs(d: Duration) -> String {
    format!("{:.3} s", d.as_secs_f64())
}

fn jones(e: &HomflyEngine, w: &BraidWord) -> LaurentPoly1 {
    e.homfly(w).to_aq().specialize_a_power(2)
}

fn main() {
    let mut r = Report { unexpected: Vec::new() };
    let e = HomflyEngine::new();
    let k1 = word(FamilySpec::ElrifaiK(1));

    // 1
    let t = Instant::now();
    let p = HomflyEngine::new().homfly(&k1).to_aq();
    let dt = t.elapsed();
    r.criterion(
        1,
        &format!("HOMFLYPT of K* in (a, q), {}", secs(dt)),
        "exact, < 2 s",
        vec![
            check("polynomial", p == kstar_homfly(), p.to_string()),
            check("runtime", dt < Duration::from_secs(2), secs(dt)),
        ],
    );

    // 2
    let cleared = |l: KStarLabel, m: u32| e.homfly(&kstar(l)).to_aq().cleared_by(m);
    r.criterion(
        2,
        "HOMFLYPT block of K-, K0, K0- after clearing",
        "exact",
        vec![
            check("K- times (q-q^-1)^2", cleared(KStarLabel::Minus, 2) == Some(five_two_mirror_cleared()), ""),
            check("K0 times (q-q^-1)", cleared(KStarLabel::Zero, 1) == Some(k0_cleared()), ""),
            check("K0- times (q-q^-1)", cleared(KStarLabel::ZeroMinus, 1) == Some(k0minus_cleared()), ""),
        ],
    );

    // 3
    let mut rows = Vec::new();
    for (label, name, sigma, det) in [
        (KStarLabel::Plus, "K+", 2, 7),
        (KStarLabel::Minus, "K-", 2, 7),
        (KStarLabel::Zero, "K0", 1, 0),
        (KStarLabel::ZeroMinus, "K0-", 1, 14),
        (KStarLabel::ZeroMinusMinus, "K0--", 1, 12),
        (KStarLabel::ZeroMinusZero, "K0-0", 0, 1),
    ] {
        let w = kstar(label);
        let s = signature(&w).unwrap();
        let d = determinant_invariant(&w).unwrap();
        rows.push(check(format!("sigma {name}"), s == sigma, format!("got {s}, expected {sigma}")));
        rows.push(check(format!("det {name}"), d == BigInt::from(det), format!("got {d}, expected {det}")));
    }
    let det = |l| determinant_invariant(&kstar(l)).unwrap();
    let lhs = det(KStarLabel::ZeroMinusMinus) + BigInt::from(2) * det(KStarLabel::ZeroMinusZero);
    rows.push(check("12 + 2 = 14", lhs == det(KStarLabel::ZeroMinus), lhs.to_string()));
    r.criterion(3, "signature and determinant table", "exact", rows);

    // 4
    let pd = braid_to_pd(&k1);
    let t = Instant::now();
    let kh = reduced_khovanov(&pd);
    let dt = t.elapsed();
    let poly = poincare_polynomial(&kh);
    r.criterion(
        4,
        &format!("reduced Khovanov homology of K* over Q, 2^12-vertex cube, {}", secs(dt)),
        "exact ranks, < 60 s",
        vec![
            check("Poincare polynomial", poly == KSTAR_POINCARE, poly.clone()),
            check("13 bigradings", kh.support_size() == 13, kh.support_size().to_string()),
            // the reference string itself carries 15 generators
            check("generator count of the reference string", kh.total_rank() == 15, kh.total_rank().to_string()),
            check("runtime", dt < Duration::from_secs(60), secs(dt)),
        ],
    );

    // 5
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut words = vec![
        BraidWord::empty(1),
        BraidWord::new(2, vec![1, 1, 1]).unwrap(),
        kstar(KStarLabel::Minus),
        k1.clone(),
    ];
    while words.len() < 24 {
        let w = common::random_word(&mut rng, 3, 8);
        words.push(w);
    }
    let euler: Vec<_> = words
        .iter()
        .map(|w| {
            let chi = if w == &k1 { kh.euler_characteristic() } else { reduced_khovanov(&braid_to_pd(w)).euler_characteristic() };
            check(format!("[{}]", w.to_text()), chi == jones(&e, w), "")
        })
        .collect();
    r.criterion(5, "Euler characteristic equals P(q^2, q)", "exact", euler);

    // 6
    let mut lemma = Vec::new();
    for k in 1..=2 {
        for (spec, m, d) in [
            (FamilySpec::ElrifaiK(k), 6 * k + 1, (6 * k, 6 * k + 2)),
            (FamilySpec::ElrifaiL(k), 6 * k + 5, (6 * k + 4, 6 * k + 6)),
        ] {
            let p = e.homfly(&word(spec));
            lemma.push(check(format!("{spec} = T(2,{m})"), p == e.homfly(&word(FamilySpec::Torus2(m))), ""));
            let got = p.a_degree_range().unwrap();
            lemma.push(check(format!("{spec} d±"), got == d, format!("{got:?}")));
        }
    }
    r.criterion(6, "Elrifai families have 2-strand torus polynomials", "exact", lemma);

    // 7
    let mfw = mfw_report(&k1).unwrap();
    let kr = kr_report(&k1, 4, 8).unwrap();
    r.criterion(
        7,
        "sharpness on K*",
        "exact booleans",
        vec![
            check("mfw_bound 2", mfw.mfw_bound == 2, mfw.mfw_bound.to_string()),
            check("MFW lower equality fails", !mfw.mfw_sharp_lower, ""),
            check("kr_bound 3", kr.kr_bound == Some(3), format!("{:?}", kr.kr_bound)),
            check("KR equalities hold", kr.kr_sharp_lower == Some(true) && kr.kr_sharp_upper == Some(true), ""),
        ],
    );

    // 8
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut props = Vec::new();
    for _ in 0..50 {
        let n = rng.gen_range(2..=4);
        let mut w = common::random_word(&mut rng, n, 8);
        if w.is_empty() {
            w = BraidWord::new(n, vec![1]).unwrap();
        }
        let at = rng.gen_range(0..w.len());
        if !skein_residual(&e, &w, at).is_zero() {
            props.push(check(format!("skein [{}] at {at}", w.to_text()), false, "nonzero residual"));
        }
    }
    props.push(check("skein residual on 50 triples", true, ""));
    for _ in 0..20 {
        let w = common::random_knot_word(&mut rng, 7);
        let moved = [common::random_conjugate(&mut rng, &w), w.stabilize(rng.gen_bool(0.5))];
        let kh_w = reduced_khovanov(&braid_to_pd(&w));
        for v in moved {
            let same = e.homfly(&v) == e.homfly(&w)
                && signature(&v) == signature(&w)
                && determinant_invariant(&v) == determinant_invariant(&w)
                && reduced_khovanov(&braid_to_pd(&v)) == kh_w;
            props.push(check(format!("[{}] vs [{}]", w.to_text(), v.to_text()), same, "invariant changed"));
        }
    }
    r.criterion(8, "skein residual and Markov invariance on random words", "exact", props);

    // 9
    let mut bm = Vec::new();
    for (x, y, z, w) in BM_PARAMETERS {
        for role in [SkeinRole::Minus, SkeinRole::Zero] {
            let m = bm_resolution(role, x, y, z, w);
            let stated = bm_reduced(role, x, y, z, w).unwrap();
            bm.push(check(format!("{role:?} ({x},{y},{z},{w})"), e.homfly(&m) == e.homfly(&stated), m.to_text()));
        }
    }
    let b = word(FamilySpec::BM(1, 1, 1, 1));
    bm.push(check("BM(1,1,1,1) deficit", destabilization_deficit(b.writhe(), b.strands() as i64, 1, 0) == (9, 5), ""));
    let grid_ok = (0..12i64).all(|wd| {
        (2..6i64).all(|bd| {
            (0..3u64).all(|p| {
                (0..3u64).all(|n| destabilization_deficit(wd, bd, p, n) == (wd + bd - 1 - 2 * p as i64, wd - bd + 1 + 2 * n as i64))
            })
        })
    });
    bm.push(check("deficit equals hand substitution on a grid", grid_ok, ""));
    r.criterion(9, "BM resolutions and destabilization arithmetic", "exact", bm);

    // 10
    let mut qp = Vec::new();
    for k in 1..=2usize {
        let ki = k as i64;
        for (name, f, two_g4) in [
            ("K", QPFactorization::elrifai_k(k), 6 * ki - 2),
            ("L", QPFactorization::elrifai_l(k), 6 * ki + 4),
        ] {
            qp.push(check(format!("{name}({k}) 2g4"), g4_from_qp(&f) == two_g4, g4_from_qp(&f).to_string()));
            let sb = slice_bennequin_check(&expand_qp(&f), two_g4);
            qp.push(check(format!("{name}({k}) slice-Bennequin"), sb == (true, true), format!("{sb:?}")));
        }
    }
    let orbit: Vec<(i64, i64)> = (0..5).flat_map(|x| (0..5).map(move |y| (3 + x + y, 6 + x - y))).collect();
    let accepted = quadrant_check(&QuadrantDatum { b_k: 3, w_k: 6, observations: orbit });
    qp.push(check("orbit accepted", accepted.iter().all(|&b| b), ""));
    let off = vec![(4, 6), (3, 7), (5, 5), (2, 6), (3, 4)];
    let rejected = quadrant_check(&QuadrantDatum { b_k: 3, w_k: 6, observations: off });
    qp.push(check("off-parity rejected", rejected.iter().all(|&b| !b), format!("{rejected:?}")));
    r.criterion(10, "quasipositive arithmetic and the quadrant", "exact", qp);

    // 11
    let g = grading_convert(-4, 4, 6, 2).unwrap();
    r.criterion(
        11,
        "full triply graded homology is out of scope; grading conversion only",
        "exact",
        vec![check("I = -4 + 2*4 = 4", g.0 == 4, format!("{g:?}"))],
    );

    if !r.unexpected.is_empty() {
        println!("unexpected failures: {:?}", r.unexpected);
        std::process::exit(1);
    }
}
