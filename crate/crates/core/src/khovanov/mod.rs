//! Reduced sl(2) Khovanov homology from the cube of resolutions.
//!
//! Vertex `v ⊆ crossings` takes the 1-smoothing at `v` and the 0-smoothing
//! elsewhere; the 0-smoothing of a positive crossing is the oriented one. Each
//! circle carries `V = ⟨v+, v-⟩`, and the reduced complex is the subcomplex in
//! which the circle through the marked edge carries `v-`. A generator with `p`
//! unmarked `v+` circles and `m` unmarked `v-` circles sits in
//!
//! * homological degree `J = |v| - n-`,
//! * quantum degree `I = p - m + |v| + n+ - 2 n-`,
//!
//! so the unknot is `1` at `(0, 0)` and `Σ (-1)^J q^I rank = P(q^2, q)`.

mod pd;

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::laurent::LaurentPoly1;
pub use crate::linalg::RankField;
use crate::linalg::{rank, SparseMatrix};
pub use pd::{braid_to_pd, Crossing, CrossingSign, PdError, PlanarDiagram};

/// Ranks keyed by `(I, J)`: quantum grading, homological grading.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BigradedRanks(pub BTreeMap<(i32, i32), u64>);

impl BigradedRanks {
    pub fn from_entries(entries: impl IntoIterator<Item = ((i32, i32), u64)>) -> Self {
        let mut m = BTreeMap::new();
        for (k, r) in entries {
            if r > 0 {
                *m.entry(k).or_insert(0) += r;
            }
        }
        Self(m)
    }

    pub fn get(&self, i: i32, j: i32) -> u64 {
        self.0.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn total_rank(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn support_size(&self) -> usize {
        self.0.len()
    }

    /// `Σ (-1)^J q^I rank`.
    pub fn euler_characteristic(&self) -> LaurentPoly1 {
        LaurentPoly1::from_terms(
            self.0.iter().map(|(&(i, j), &r)| (i, if j.rem_euclid(2) == 0 { r as i64 } else { -(r as i64) })),
        )
    }

    /// `(I, J) ↦ (-I, -J)`.
    pub fn reflect(&self) -> Self {
        Self(self.0.iter().map(|(&(i, j), &r)| ((-i, -j), r)).collect())
    }

    /// Entries ordered by `(J, I)`.
    pub fn entries_by_degree(&self) -> Vec<(i32, i32, u64)> {
        let mut v: Vec<(i32, i32, u64)> = self.0.iter().map(|(&(i, j), &r)| (i, j, r)).collect();
        v.sort_by_key(|&(i, j, _)| (j, i));
        v
    }

    /// `[[I, J, rank], ...]` in `(J, I)` order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.entries_by_degree().into_iter().map(|(i, j, r)| serde_json::json!([i, j, r])).collect(),
        )
    }

    pub fn from_json(v: &serde_json::Value) -> Option<Self> {
        let mut entries = Vec::new();
        for e in v.as_array()? {
            let t = e.as_array()?;
            if t.len() != 3 {
                return None;
            }
            let i = i32::try_from(t[0].as_i64()?).ok()?;
            let j = i32::try_from(t[1].as_i64()?).ok()?;
            entries.push(((i, j), t[2].as_u64()?));
        }
        Some(Self::from_entries(entries))
    }
}

impl Serialize for BigradedRanks {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for BigradedRanks {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        Self::from_json(&v).ok_or_else(|| serde::de::Error::custom("expected [[I, J, rank], ...]"))
    }
}

fn exponent(var: char, e: i32) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        2..=9 => format!("{var}^{e}"),
        _ => format!("{var}^{{{e}}}"),
    }
}

/// `Σ rank q^I t^J`, terms ordered by `t`-degree then `q`-degree, no spaces.
pub fn poincare_polynomial(r: &BigradedRanks) -> String {
    let mut out = String::new();
    for (i, j, rank) in r.entries_by_degree() {
        if !out.is_empty() {
            out.push('+');
        }
        let body = format!("{}{}", exponent('q', i), exponent('t', j));
        match (rank, body.is_empty()) {
            (_, true) => write!(out, "{rank}").unwrap(),
            (1, false) => out.push_str(&body),
            (_, false) => write!(out, "{rank}{body}").unwrap(),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Circles of one resolution.
struct Resolution {
    /// Circle of each edge, indexed by edge id.
    circle: Vec<u16>,
    /// Position of each circle among the unmarked ones (bit index of a state).
    slot: Vec<Option<u16>>,
    unmarked: u32,
}

impl Resolution {
    fn new(pd: &PlanarDiagram, vertex: u64) -> Self {
        let n = pd.edge_count as usize;
        let mut parent: Vec<usize> = (0..=n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (k, x) in pd.crossings.iter().enumerate() {
            let pairs = if vertex >> k & 1 == 1 { x.one_smoothing() } else { x.zero_smoothing() };
            for (a, b) in pairs {
                let (ra, rb) = (find(&mut parent, a as usize), find(&mut parent, b as usize));
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        // circles numbered by smallest edge
        let mut id = vec![u16::MAX; n + 1];
        let mut circle = vec![0u16; n + 1];
        let mut count = 0u16;
        for e in 1..=n {
            let r = find(&mut parent, e);
            if id[r] == u16::MAX {
                id[r] = count;
                count += 1;
            }
            circle[e] = id[r];
        }
        let marked = circle[pd.marked_edge as usize];
        let mut slot = vec![None; count as usize];
        let mut next = 0u16;
        for (c, s) in slot.iter_mut().enumerate() {
            if c as u16 != marked {
                *s = Some(next);
                next += 1;
            }
        }
        Resolution { circle, slot, unmarked: next as u32 }
    }

    /// `true` for `v+`.
    fn is_plus(&self, state: u32, c: u16) -> bool {
        match self.slot[c as usize] {
            Some(b) => state >> b & 1 == 1,
            None => false,
        }
    }

    fn set(&self, state: &mut u32, c: u16, plus: bool) -> bool {
        match self.slot[c as usize] {
            Some(b) => {
                if plus {
                    *state |= 1 << b;
                } else {
                    *state &= !(1 << b);
                }
                true
            }
            None => !plus,
        }
    }
}

/// Shape of one edge of the cube, from `v` to `v ∪ {k}`.
struct CubeEdge {
    /// For each target circle, the source circle it continues (meaningless for the
    /// circles touched by the crossing).
    carry: Vec<u16>,
    kind: EdgeKind,
}

enum EdgeKind {
    Merge { a: u16, b: u16, into: u16 },
    Split { from: u16, a: u16, b: u16 },
}

fn cube_edge(pd: &PlanarDiagram, src: &Resolution, tgt: &Resolution, k: usize) -> CubeEdge {
    let x = &pd.crossings[k];
    let [a, b, c, _] = x.edges.map(|e| e as usize);
    let count = tgt.slot.len();
    let mut carry = vec![u16::MAX; count];
    for e in 1..tgt.circle.len() {
        let t = tgt.circle[e] as usize;
        if carry[t] == u16::MAX {
            carry[t] = src.circle[e];
        }
    }
    let kind = if src.circle[a] != src.circle[b] {
        EdgeKind::Merge { a: src.circle[a], b: src.circle[b], into: tgt.circle[a] }
    } else {
        EdgeKind::Split { from: src.circle[a], a: tgt.circle[a], b: tgt.circle[c] }
    };
    CubeEdge { carry, kind }
}

/// Image of a state under one cube edge, as target states (coefficient +1 each).
fn apply(edge: &CubeEdge, src: &Resolution, tgt: &Resolution, state: u32, out: &mut Vec<u32>) {
    out.clear();
    let mut base = 0u32;
    for (t, &s) in edge.carry.iter().enumerate() {
        let involved = match edge.kind {
            EdgeKind::Merge { into, .. } => t as u16 == into,
            EdgeKind::Split { a, b, .. } => t as u16 == a || t as u16 == b,
        };
        if !involved && src.is_plus(state, s) {
            tgt.set(&mut base, t as u16, true);
        }
    }
    match edge.kind {
        EdgeKind::Merge { a, b, into } => {
            let (pa, pb) = (src.is_plus(state, a), src.is_plus(state, b));
            if pa || pb {
                let mut s = base;
                if tgt.set(&mut s, into, pa && pb) {
                    out.push(s);
                }
            }
        }
        EdgeKind::Split { from, a, b } => {
            if src.is_plus(state, from) {
                for (pa, pb) in [(true, false), (false, true)] {
                    let mut s = base;
                    if tgt.set(&mut s, a, pa) && tgt.set(&mut s, b, pb) {
                        out.push(s);
                    }
                }
            } else {
                let mut s = base;
                if tgt.set(&mut s, a, false) && tgt.set(&mut s, b, false) {
                    out.push(s);
                }
            }
        }
    }
}

/// Generators of one homological level, grouped by quantum degree.
struct Level {
    index: HashMap<i32, HashMap<(u64, u32), usize>>,
}

fn level(res: &[Resolution], r: u32, shift: i32) -> Level {
    let mut index: HashMap<i32, HashMap<(u64, u32), usize>> = HashMap::new();
    for (v, rv) in res.iter().enumerate() {
        if (v as u64).count_ones() != r {
            continue;
        }
        let k = rv.unmarked;
        for state in 0..(1u32 << k) {
            let q = 2 * state.count_ones() as i32 - k as i32 + r as i32 + shift;
            let block = index.entry(q).or_default();
            let next = block.len();
            block.insert((v as u64, state), next);
        }
    }
    Level { index }
}

/// Reduced Khovanov homology over ℚ.
pub fn reduced_khovanov(pd: &PlanarDiagram) -> BigradedRanks {
    reduced_khovanov_over(pd, RankField::Rational)
}

/// Reduced Khovanov homology over the given coefficient field.
pub fn reduced_khovanov_over(pd: &PlanarDiagram, field: RankField) -> BigradedRanks {
    let c = pd.crossings.len();
    assert!(c < 26, "cube of {c} crossings is beyond desk scale");
    let n_plus = pd.positive_count() as i32;
    let n_minus = pd.negative_count() as i32;
    let shift = n_plus - 2 * n_minus;
    let res: Vec<Resolution> = (0..1u64 << c).into_par_iter().map(|v| Resolution::new(pd, v)).collect();
    let levels: Vec<Level> = (0..=c as u32).map(|r| level(&res, r, shift)).collect();

    // rank of d: level r -> level r + 1 in each quantum degree
    let ranks: HashMap<(u32, i32), usize> = (0..c as u32)
        .into_par_iter()
        .flat_map_iter(|r| {
            let src = &levels[r as usize];
            let tgt = &levels[r as usize + 1];
            let mut mats: HashMap<i32, SparseMatrix> = src
                .index
                .iter()
                .filter_map(|(&q, rows)| tgt.index.get(&q).map(|cols| (q, SparseMatrix::new(rows.len(), cols.len()))))
                .collect();
            let mut image = Vec::new();
            for (v, rv) in res.iter().enumerate() {
                let v = v as u64;
                if v.count_ones() != r {
                    continue;
                }
                for k in 0..c {
                    if v >> k & 1 == 1 {
                        continue;
                    }
                    let w = v | 1 << k;
                    let rw = &res[w as usize];
                    let edge = cube_edge(pd, rv, rw, k);
                    let sign = if (v & ((1u64 << k) - 1)).count_ones().is_multiple_of(2) { 1 } else { -1 };
                    for state in 0..(1u32 << rv.unmarked) {
                        let q = 2 * state.count_ones() as i32 - rv.unmarked as i32 + r as i32 + shift;
                        let Some(m) = mats.get_mut(&q) else { continue };
                        let row = src.index[&q][&(v, state)];
                        apply(&edge, rv, rw, state, &mut image);
                        for &t in &image {
                            let col = tgt.index[&q][&(w, t)];
                            m.add(row, col, sign);
                        }
                    }
                }
            }
            mats.into_iter().map(move |(q, m)| ((r, q), rank(&m, field))).collect::<Vec<_>>()
        })
        .collect();

    let mut out = Vec::new();
    for (r, lv) in levels.iter().enumerate() {
        for (&q, gens) in &lv.index {
            let outgoing = ranks.get(&(r as u32, q)).copied().unwrap_or(0);
            let incoming = if r > 0 { ranks.get(&(r as u32 - 1, q)).copied().unwrap_or(0) } else { 0 };
            let h = gens.len() - outgoing - incoming;
            out.push(((q, r as i32 - n_minus), h as u64));
        }
    }
    BigradedRanks::from_entries(out)
}
