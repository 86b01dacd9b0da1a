//! Exact sparse Laurent polynomials with big-integer coefficients.
//!
//! [`LaurentPoly2`] lives in `ℤ[a^±1, z^±1]` with `z = q - q^-1`; this is the
//! ring the skein relation is solved in. [`AQPolynomial`] is the same value
//! written in `(a, q)` with any negative `z` powers cleared.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("the zero polynomial has no degree range")]
pub struct ZeroPolynomial;

/// Exponent monoid for [`Laurent`].
pub trait Exponent: Copy + Ord + fmt::Debug {
    fn zero() -> Self;
    fn plus(self, other: Self) -> Self;
}

impl Exponent for i32 {
    fn zero() -> Self {
        0
    }
    fn plus(self, other: Self) -> Self {
        self + other
    }
}

impl Exponent for (i32, i32) {
    fn zero() -> Self {
        (0, 0)
    }
    fn plus(self, other: Self) -> Self {
        (self.0 + other.0, self.1 + other.1)
    }
}

/// A finitely supported map from exponents to nonzero integers.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent<E: Exponent> {
    terms: BTreeMap<E, BigInt>,
}

/// One variable; which one (`q`, `t`) is fixed by context.
pub type LaurentPoly1 = Laurent<i32>;
/// Two variables `(a, z)`.
pub type LaurentPoly2 = Laurent<(i32, i32)>;

impl<E: Exponent> Laurent<E> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, E::zero())
    }

    pub fn monomial(coeff: impl Into<BigInt>, exp: E) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (E, C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: E) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (E, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exp: E, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Multiply by `coeff · x^exp`.
    pub fn scale(&self, coeff: &BigInt, exp: E) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, c)| (e.plus(exp), c * coeff)).collect() }
    }

    pub fn shift(&self, exp: E) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (e.plus(exp), c.clone())).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Sum of absolute values of the coefficients.
    pub fn abs_coefficient_sum(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).sum()
    }
}

impl<'a, E: Exponent> Add<&'a Laurent<E>> for &'a Laurent<E> {
    type Output = Laurent<E>;
    fn add(self, rhs: &'a Laurent<E>) -> Laurent<E> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<'a, E: Exponent> Sub<&'a Laurent<E>> for &'a Laurent<E> {
    type Output = Laurent<E>;
    fn sub(self, rhs: &'a Laurent<E>) -> Laurent<E> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl<'a, E: Exponent> Mul<&'a Laurent<E>> for &'a Laurent<E> {
    type Output = Laurent<E>;
    fn mul(self, rhs: &'a Laurent<E>) -> Laurent<E> {
        let mut out = Laurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1.plus(*e2), c1 * c2);
            }
        }
        out
    }
}

impl<E: Exponent> Neg for &Laurent<E> {
    type Output = Laurent<E>;
    fn neg(self) -> Laurent<E> {
        Laurent { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl<E: Exponent> $tr for Laurent<E> {
            type Output = Laurent<E>;
            fn $f(self, rhs: Laurent<E>) -> Laurent<E> {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<E: Exponent> Neg for Laurent<E> {
    type Output = Laurent<E>;
    fn neg(self) -> Laurent<E> {
        -&self
    }
}

impl<E: Exponent> fmt::Debug for Laurent<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl LaurentPoly1 {
    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// `x ↦ x^-1`.
    pub fn invert_variable(&self) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    /// Exact division by `q - q^-1`, or `None` when it does not divide.
    pub fn div_q_minus_qinv(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        // q - q^-1 = q^-1 (q^2 - 1); divide the polynomial q^-lo · self by q^2 - 1
        let lo = self.min_degree().unwrap();
        let hi = self.max_degree().unwrap();
        let deg = (hi - lo) as usize;
        let mut coeffs: Vec<BigInt> = (0..=deg).map(|k| self.coeff(lo + k as i32)).collect();
        if deg < 2 {
            return None;
        }
        let mut quot = vec![BigInt::zero(); deg - 1];
        for k in (2..=deg).rev() {
            let c = std::mem::take(&mut coeffs[k]);
            coeffs[k - 2] += &c;
            quot[k - 2] = c;
        }
        if !coeffs[0].is_zero() || !coeffs[1].is_zero() {
            return None;
        }
        Some(Self::from_terms(quot.into_iter().enumerate().map(|(k, c)| (lo + 1 + k as i32, c))))
    }

    /// `q - q^-1`.
    pub fn q_minus_qinv() -> Self {
        Self::from_terms([(1, 1), (-1, -1)])
    }

    /// Render in the variable `var`, highest power first.
    pub fn render(&self, var: &str) -> String {
        let mut out = String::new();
        for (e, c) in self.terms.iter().rev() {
            push_term(&mut out, c, &mono(var, *e));
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }
}

fn mono(var: &str, e: i32) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

fn push_term(out: &mut String, c: &BigInt, m: &str) {
    let neg = c.is_negative();
    let abs = c.abs();
    if out.is_empty() {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    if m.is_empty() {
        out.push_str(&abs.to_string());
    } else {
        if !abs.is_one() {
            out.push_str(&abs.to_string());
        }
        out.push_str(m);
    }
}

impl LaurentPoly2 {
    /// The variable `a`.
    pub fn a() -> Self {
        Self::monomial(1, (1, 0))
    }

    /// The variable `z = q - q^-1`.
    pub fn z() -> Self {
        Self::monomial(1, (0, 1))
    }

    /// Value of the 2-component unlink, `(a - a^-1) z^-1`.
    pub fn unlink_factor() -> Self {
        Self::from_terms([((1, -1), 1), ((-1, -1), -1)])
    }

    pub fn a_degree_range(&self) -> Result<(i32, i32), ZeroPolynomial> {
        let lo = self.terms.keys().map(|e| e.0).min().ok_or(ZeroPolynomial)?;
        let hi = self.terms.keys().map(|e| e.0).max().ok_or(ZeroPolynomial)?;
        Ok((lo, hi))
    }

    pub fn min_z_degree(&self) -> Option<i32> {
        self.terms.keys().map(|e| e.1).min()
    }

    /// Substitute `a ↦ -a^-1`, the effect of mirroring the link.
    pub fn mirror_a(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(&(ea, ez), c)| {
            let c = if ea % 2 == 0 { c.clone() } else { -c };
            ((-ea, ez), c)
        }))
    }

    /// Substitute `a = 1`, leaving a polynomial in `z`.
    pub fn at_a_one(&self) -> LaurentPoly1 {
        LaurentPoly1::from_terms(self.terms.iter().map(|(&(_, ez), c)| (ez, c.clone())))
    }

    pub fn to_aq(&self) -> AQPolynomial {
        to_aq(self)
    }

    /// Evaluate at rational points `a = a_num/a_den`, `z = z_num/z_den`, as
    /// an exact fraction `(numerator, denominator)`.
    pub fn eval_rational(&self, a: (i64, i64), z: (i64, i64)) -> num_rational::BigRational {
        let ra = num_rational::BigRational::new(a.0.into(), a.1.into());
        let rz = num_rational::BigRational::new(z.0.into(), z.1.into());
        let mut acc = num_rational::BigRational::zero();
        for (&(ea, ez), c) in &self.terms {
            acc += num_rational::BigRational::from_integer(c.clone()) * rpow(&ra, ea) * rpow(&rz, ez);
        }
        acc
    }

    /// `[e_a, e_z, coefficient]` triples in ascending exponent order.
    pub fn to_triples(&self) -> Vec<(i32, i32, BigInt)> {
        self.terms.iter().map(|(&(a, z), c)| (a, z, c.clone())).collect()
    }
}

fn rpow(x: &num_rational::BigRational, e: i32) -> num_rational::BigRational {
    let p = num_traits::pow(x.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

/// A polynomial in `(a, q)` standing for `stored · (q - q^-1)^-clearing`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AQPolynomial {
    stored: LaurentPoly2,
    clearing: u32,
}

impl AQPolynomial {
    /// Build from a stored numerator, reducing the clearing exponent to its minimum.
    pub fn new(stored: LaurentPoly2, clearing: u32) -> Self {
        let mut p = Self { stored, clearing };
        p.minimize();
        p
    }

    /// A polynomial with no denominator.
    pub fn from_aq_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = ((i32, i32), C)>) -> Self {
        Self { stored: LaurentPoly2::from_terms(terms), clearing: 0 }
    }

    pub fn stored(&self) -> &LaurentPoly2 {
        &self.stored
    }

    pub fn clearing_exponent(&self) -> u32 {
        self.clearing
    }

    fn a_slices(&self) -> BTreeMap<i32, LaurentPoly1> {
        let mut slices: BTreeMap<i32, LaurentPoly1> = BTreeMap::new();
        for (&(ea, eq), c) in &self.stored.terms {
            slices.entry(ea).or_insert_with(LaurentPoly1::zero).add_term(eq, c.clone());
        }
        slices
    }

    fn from_slices(slices: &BTreeMap<i32, LaurentPoly1>, clearing: u32) -> Self {
        let mut stored = LaurentPoly2::zero();
        for (&ea, s) in slices {
            for (eq, c) in s.terms() {
                stored.add_term((ea, eq), c.clone());
            }
        }
        Self { stored, clearing }
    }

    fn minimize(&mut self) {
        while self.clearing > 0 && !self.stored.is_zero() {
            let slices = self.a_slices();
            let divided: Option<BTreeMap<i32, LaurentPoly1>> =
                slices.iter().map(|(&ea, s)| s.div_q_minus_qinv().map(|d| (ea, d))).collect();
            match divided {
                Some(d) => *self = Self::from_slices(&d, self.clearing - 1),
                None => break,
            }
        }
        if self.stored.is_zero() {
            self.clearing = 0;
        }
    }

    /// `(q - q^-1)^m · self`, which must be a genuine polynomial.
    pub fn cleared_by(&self, m: u32) -> Option<LaurentPoly2> {
        if m < self.clearing {
            return None;
        }
        let factor = LaurentPoly1::q_minus_qinv().pow(m - self.clearing);
        let slices: BTreeMap<i32, LaurentPoly1> =
            self.a_slices().into_iter().map(|(e, s)| (e, &s * &factor)).collect();
        Some(Self::from_slices(&slices, 0).stored)
    }

    pub fn a_degree_range(&self) -> Result<(i32, i32), ZeroPolynomial> {
        self.stored.a_degree_range()
    }

    /// Substitute `a = q^n`, dividing out the cleared denominator.
    pub fn specialize_a_power(&self, n: i32) -> LaurentPoly1 {
        let mut p = LaurentPoly1::from_terms(
            self.stored.terms.iter().map(|(&(ea, eq), c)| (n * ea + eq, c.clone())),
        );
        for _ in 0..self.clearing {
            p = p.div_q_minus_qinv().expect("specialization is a Laurent polynomial");
        }
        p
    }

    /// Evaluate at `a`, `q` rational, including the denominator.
    pub fn eval_rational(&self, a: (i64, i64), q: (i64, i64)) -> num_rational::BigRational {
        let num = self.stored.eval_rational(a, q);
        let rq = num_rational::BigRational::new(q.0.into(), q.1.into());
        let z = &rq - rq.recip();
        num / rpow(&z, self.clearing as i32)
    }

    /// `[e_a, e_q, coefficient]` triples, highest `a` first then highest `q`.
    pub fn to_triples(&self) -> Vec<(i32, i32, BigInt)> {
        self.stored.terms.iter().rev().map(|(&(a, q), c)| (a, q, c.clone())).collect()
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .to_triples()
            .into_iter()
            .map(|(a, q, c)| Value::Array(vec![a.into(), q.into(), bigint_json(&c)]))
            .collect();
        serde_json::json!({ "terms": terms, "clearing_exponent": self.clearing })
    }

    pub fn from_json(v: &Value) -> Option<Self> {
        let clearing = v.get("clearing_exponent")?.as_u64()? as u32;
        let mut stored = LaurentPoly2::zero();
        for t in v.get("terms")?.as_array()? {
            let t = t.as_array()?;
            let a = t.first()?.as_i64()? as i32;
            let q = t.get(1)?.as_i64()? as i32;
            let c = match t.get(2)? {
                Value::Number(n) => BigInt::from(n.as_i64()?),
                Value::String(s) => s.parse().ok()?,
                _ => return None,
            };
            stored.add_term((a, q), c);
        }
        Some(Self { stored, clearing })
    }
}

pub(crate) fn bigint_json(c: &BigInt) -> Value {
    match i64::try_from(c) {
        Ok(v) => v.into(),
        Err(_) => Value::String(c.to_string()),
    }
}

/// Substitute `z = q - q^-1`, multiplying through by the least power of `z`
/// that clears negative exponents.
pub fn to_aq(p: &LaurentPoly2) -> AQPolynomial {
    let m = p.min_z_degree().map_or(0, |d| (-d).max(0)) as u32;
    let base = LaurentPoly1::q_minus_qinv();
    let max_z = p.terms.keys().map(|e| e.1).max().unwrap_or(0) + m as i32;
    let powers: Vec<LaurentPoly1> = (0..=max_z.max(0) as u32).map(|k| base.pow(k)).collect();
    let mut stored = LaurentPoly2::zero();
    for (&(ea, ez), c) in &p.terms {
        for (eq, d) in powers[(ez + m as i32) as usize].terms() {
            stored.add_term((ea, eq), c * d);
        }
    }
    AQPolynomial::new(stored, m)
}

pub fn a_degree_range(p: &LaurentPoly2) -> Result<(i32, i32), ZeroPolynomial> {
    p.a_degree_range()
}

impl fmt::Display for AQPolynomial {
    /// Grouped by descending `a` power, each group in descending `q` power:
    /// `a^8 (-q^4 - 1 - q^-4) + a^6 (q^6 + q^2 + q^-2 + q^-6)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let slices = self.a_slices();
        let mut out = String::new();
        for (&ea, s) in slices.iter().rev() {
            let am = mono("a", ea);
            if s.len() == 1 {
                let (eq, c) = s.terms().next().unwrap();
                let m = format!("{am}{}", mono("q", eq));
                push_term(&mut out, c, &m);
                continue;
            }
            if !out.is_empty() {
                out.push_str(" + ");
            }
            if am.is_empty() {
                out.push_str(&format!("({})", s.render("q")));
            } else {
                out.push_str(&format!("{am} ({})", s.render("q")));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        match self.clearing {
            0 => f.write_str(&out),
            1 => write!(f, "[{out}] / (q - q^-1)"),
            m => write!(f, "[{out}] / (q - q^-1)^{m}"),
        }
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_aq(), f)
    }
}
