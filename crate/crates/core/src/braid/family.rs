//! Braid families: the Elrifai 3-braids, the BM 4-braids with their skein
//! resolutions, 2-strand torus links and the resolution tree of `K_1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{BraidError, BraidWord};

/// Node of the resolution tree of `K_1 = ElrifaiK(1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum KStarLabel {
    Plus,
    Minus,
    Zero,
    ZeroMinus,
    ZeroZero,
    ZeroMinusMinus,
    ZeroMinusZero,
}

impl KStarLabel {
    pub const ALL: [KStarLabel; 7] = [
        KStarLabel::Plus,
        KStarLabel::Minus,
        KStarLabel::Zero,
        KStarLabel::ZeroMinus,
        KStarLabel::ZeroZero,
        KStarLabel::ZeroMinusMinus,
        KStarLabel::ZeroMinusZero,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            KStarLabel::Plus => "+",
            KStarLabel::Minus => "-",
            KStarLabel::Zero => "0",
            KStarLabel::ZeroMinus => "0-",
            KStarLabel::ZeroZero => "00",
            KStarLabel::ZeroMinusMinus => "0--",
            KStarLabel::ZeroMinusZero => "0-0",
        }
    }

    fn letters(self) -> &'static [i32] {
        match self {
            KStarLabel::Plus => &[1, 2, 2, 1, 1, 2, 2, 1, 1, -2, -2, -2],
            KStarLabel::Minus => &[1, 2, 2, 1, 1, 2, 2, 1, -1, -2, -2, -2],
            KStarLabel::Zero => &[1, 2, 2, 1, 1, 2, 2, 1, -2, -2, -2],
            KStarLabel::ZeroMinus => &[1, 2, 2, 1, 1, 2, -2, 1, -2, -2, -2],
            KStarLabel::ZeroZero => &[1, 2, 2, 1, 1, 2, 1, -2, -2, -2],
            KStarLabel::ZeroMinusMinus => &[1, 2, -2, 1, 1, 1, -2, -2, -2],
            KStarLabel::ZeroMinusZero => &[1, 2, 1, 1, 1, -2, -2, -2],
        }
    }
}

impl fmt::Display for KStarLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for KStarLabel {
    type Err = BraidError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| BraidError::InvalidFamily(format!("unknown resolution label {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilySpec {
    /// `(σ1 σ2 σ2 σ1)^{2k} σ1 σ2^{-2k-1}`
    ElrifaiK(i32),
    /// `(σ1 σ2 σ2 σ1)^{2k+1} σ1 σ2^{-2k+1}`
    ElrifaiL(i32),
    /// `σ1^x σ2^y σ3^{-1} σ2^z σ1^w σ2 σ3 σ2 σ2 σ3`
    BM(i32, i32, i32, i32),
    /// `σ1^q` on two strands.
    Torus2(i32),
    KStarResolution(KStarLabel),
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::ElrifaiK(k) => write!(f, "K({k})"),
            FamilySpec::ElrifaiL(k) => write!(f, "L({k})"),
            FamilySpec::BM(x, y, z, w) => write!(f, "BM({x},{y},{z},{w})"),
            FamilySpec::Torus2(q) => write!(f, "T(2,{q})"),
            FamilySpec::KStarResolution(l) => write!(f, "K*[{l}]"),
        }
    }
}

fn power(i: i32, e: i32) -> impl Iterator<Item = i32> {
    std::iter::repeat_n(if e >= 0 { i } else { -i }, e.unsigned_abs() as usize)
}

fn repeat(block: &[i32], times: i32) -> Vec<i32> {
    block.iter().copied().cycle().take(block.len() * times.max(0) as usize).collect()
}

pub fn family_word(spec: FamilySpec) -> Result<BraidWord, BraidError> {
    let invalid = |msg: &str| Err(BraidError::InvalidFamily(msg.to_string()));
    let (strands, letters) = match spec {
        FamilySpec::ElrifaiK(k) | FamilySpec::ElrifaiL(k) if k < 1 => {
            return invalid("Elrifai families need k >= 1");
        }
        FamilySpec::ElrifaiK(k) => {
            let mut l = repeat(&[1, 2, 2, 1], 2 * k);
            l.push(1);
            l.extend(power(2, -2 * k - 1));
            (3, l)
        }
        FamilySpec::ElrifaiL(k) => {
            let mut l = repeat(&[1, 2, 2, 1], 2 * k + 1);
            l.push(1);
            l.extend(power(2, -2 * k + 1));
            (3, l)
        }
        FamilySpec::BM(x, y, z, w) => {
            let mut l: Vec<i32> = power(1, x).chain(power(2, y)).collect();
            l.push(-3);
            l.extend(power(2, z).chain(power(1, w)));
            l.extend_from_slice(&[2, 3, 2, 2, 3]);
            (4, l)
        }
        FamilySpec::Torus2(q) => (2, power(1, q).collect()),
        FamilySpec::KStarResolution(label) => (3, label.letters().to_vec()),
    };
    BraidWord::new(strands, letters)
}

/// Member of the skein triple at the last letter of the conjugated BM word
/// `2^x 3^y 1̄ 2̄ 2^z 1^w 2 3 2 1̄`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SkeinRole {
    Plus,
    Minus,
    Zero,
}

/// The 4-strand words `M_+`, `M_-`, `M_0` at the site of the trailing
/// `σ_1^{-1}`: `σ2^x σ3^y σ1 σ2 σ2^z σ1^w σ2 σ3 σ2` followed by `σ1^{-1}`,
/// `σ1` or nothing. `M_+` closes to `BM(x, y, z, w)`.
pub fn bm_resolution(role: SkeinRole, x: i32, y: i32, z: i32, w: i32) -> BraidWord {
    bm_word(role, [1, 2], x, y, z, w)
}

/// The same words with `σ1^{-1} σ2^{-1}` in the fourth and fifth places, as
/// sometimes printed. These do not close to `BM` and are kept for comparison.
pub fn bm_resolution_printed(role: SkeinRole, x: i32, y: i32, z: i32, w: i32) -> BraidWord {
    bm_word(role, [-1, -2], x, y, z, w)
}

fn bm_word(role: SkeinRole, middle: [i32; 2], x: i32, y: i32, z: i32, w: i32) -> BraidWord {
    let mut l: Vec<i32> = power(2, x).chain(power(3, y)).collect();
    l.extend_from_slice(&middle);
    l.extend(power(2, z).chain(power(1, w)));
    l.extend_from_slice(&[2, 3, 2]);
    match role {
        SkeinRole::Plus => l.push(-1),
        SkeinRole::Minus => l.push(1),
        SkeinRole::Zero => {}
    }
    BraidWord::from_raw(4, l)
}

/// The stated 3-strand words reached from `M_-` and `M_0` by one positive
/// destabilization and braid isotopy.
pub fn bm_reduced(role: SkeinRole, x: i32, y: i32, z: i32, w: i32) -> Option<BraidWord> {
    let l: Vec<i32> = match role {
        SkeinRole::Plus => return None,
        SkeinRole::Minus => power(1, x)
            .chain(power(2, y + 1))
            .chain(power(1, 2))
            .chain(power(2, z + 1))
            .chain(power(1, w))
            .chain(power(2, 1))
            .collect(),
        SkeinRole::Zero => power(2, y)
            .chain(power(1, z + 1))
            .chain(power(2, x + 1))
            .chain(power(1, w + 1))
            .chain(power(2, 1))
            .collect(),
    };
    Some(BraidWord::from_raw(3, l))
}
