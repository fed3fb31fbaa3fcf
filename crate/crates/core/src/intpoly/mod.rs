//! Dense univariate polynomials with arbitrary-precision integer coefficients.
//!
//! `IntPoly` is the currency of the whole crate. It carries no variable
//! name: whether a polynomial is read in `q`, `x = q - 1` or `x = 1 - q` is
//! documented by the operation that produced it.

mod roots;
mod special;
mod sturm;
mod text;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub use roots::{numeric_roots, Complex64, MAX_ROOT_ITERATIONS};
pub use special::{cyclotomic, falling_factorial, stirling2};
pub use sturm::{sturm_count, Bound, Rational};
pub use text::ParseError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("division does not terminate exactly")]
    NonExactDivision,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial must have degree at least {0}")]
    DegreeTooSmall(usize),
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("root finder did not converge after {0} iterations")]
    NoConvergence(usize),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Division mode for [`IntPoly::divrem`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DivMode {
    /// Ordinary division over the integers; fails unless the remainder is zero.
    Exact,
    /// Pseudo-division: `lc(g)^(deg f - deg g + 1) * f = q*g + r`.
    Pseudo,
}

/// Coefficients stored low-to-high; the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        IntPoly { coeffs: vec![BigInt::zero(), BigInt::one()] }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// `x - a`
    pub fn linear_root(a: impl Into<BigInt>) -> Self {
        Self::new(vec![-a.into(), BigInt::one()])
    }

    /// `c * x^k`
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        Self::new(coeffs)
    }

    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; only for callers that
    /// have already excluded zero.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Divide every coefficient by `c`, which must divide all of them.
    pub fn div_scalar_exact(&self, c: &BigInt) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|a| a / c).collect() }
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
    }

    /// Non-negative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part normalized to a positive leading coefficient.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    /// `f(-x)`
    pub fn reflect(&self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().enumerate().map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() }).collect(),
        }
    }

    /// `f(x^k)`
    pub fn inflate(&self, k: usize) -> IntPoly {
        assert!(k >= 1);
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.deg() * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        IntPoly { coeffs }
    }

    /// `f(g(x))` by Horner's rule.
    pub fn compose(&self, g: &IntPoly) -> IntPoly {
        let mut acc = IntPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &IntPoly::constant(c.clone());
        }
        acc
    }

    /// `f(1 - x)`: the substitution between `q` and `x = 1 - q` (an involution).
    pub fn one_minus(&self) -> IntPoly {
        self.shift(&BigInt::one()).reflect()
    }

    /// Taylor shift: returns `f(x + a)`.
    ///
    /// Repeated synthetic division; `O(n^2)` big-integer multiply-adds.
    pub fn shift(&self, a: &BigInt) -> IntPoly {
        if a.is_zero() || self.is_constant() {
            return self.clone();
        }
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let t = &c[j + 1] * a;
                c[j] += t;
            }
        }
        IntPoly::new(c)
    }

    pub fn shift_i64(&self, a: i64) -> IntPoly {
        self.shift(&BigInt::from(a))
    }

    /// Division with remainder. `Exact` requires the remainder to vanish and
    /// every step to divide exactly over the integers; `Pseudo` returns the
    /// pseudo-quotient and pseudo-remainder for the multiplier
    /// `lc(g)^(deg f - deg g + 1)`.
    pub fn divrem(&self, g: &IntPoly, mode: DivMode) -> Result<(IntPoly, IntPoly), PolyError> {
        if g.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        match mode {
            DivMode::Exact => self.checked_div(g).map(|q| (q, IntPoly::zero())).ok_or(PolyError::NonExactDivision),
            DivMode::Pseudo => Ok(self.pseudo_divrem(g)),
        }
    }

    /// Exact quotient `self / g` over the integers, or `None` when `g` does
    /// not divide `self` in `Z[x]`.
    pub fn checked_div(&self, g: &IntPoly) -> Option<IntPoly> {
        if g.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let (n, m) = (self.deg(), g.deg());
        if n < m {
            return None;
        }
        let lc = g.leading();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); n - m + 1];
        for k in (0..=n - m).rev() {
            let top = &r[k + m];
            if top.is_zero() {
                continue;
            }
            let (qk, rem) = top.div_rem(&lc);
            if !rem.is_zero() {
                return None;
            }
            for (j, gc) in g.coeffs.iter().enumerate() {
                r[k + j] -= &qk * gc;
            }
            q[k] = qk;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::new(q))
    }

    /// Exact division that treats failure as a broken invariant in the caller.
    pub fn exact_div(&self, g: &IntPoly) -> Result<IntPoly, PolyError> {
        self.checked_div(g).ok_or(PolyError::NonExactDivision)
    }

    /// Whether `g` divides `self` over the rationals.
    pub fn divisible_by(&self, g: &IntPoly) -> bool {
        !g.is_zero() && self.pseudo_divrem(g).1.is_zero()
    }

    fn pseudo_divrem(&self, g: &IntPoly) -> (IntPoly, IntPoly) {
        let m = g.deg();
        if self.is_zero() || self.deg() < m {
            return (IntPoly::zero(), self.clone());
        }
        let n = self.deg();
        let lc = g.leading();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); n - m + 1];
        // Each of the n-m+1 steps multiplies the running state by lc(g).
        for k in (0..=n - m).rev() {
            let top = r[k + m].clone();
            for c in q.iter_mut() {
                *c *= &lc;
            }
            for c in r.iter_mut().take(k + m) {
                *c *= &lc;
            }
            r[k + m] = BigInt::zero();
            if !top.is_zero() {
                for (j, gc) in g.coeffs.iter().enumerate().take(m) {
                    r[k + j] -= &top * gc;
                }
                q[k] += &top;
            }
        }
        r.truncate(m);
        (IntPoly::new(q), IntPoly::new(r))
    }

    /// Positive-multiple remainder: `c * self mod g` for some `c > 0`.
    /// Sign is preserved, which Sturm sequences rely on.
    pub fn sign_preserving_prem(&self, g: &IntPoly) -> IntPoly {
        let (_, r) = self.pseudo_divrem(g);
        let steps = self.deg().saturating_sub(g.deg()) + 1;
        if g.leading().is_negative() && steps % 2 == 1 {
            -r
        } else {
            r
        }
    }

    /// Greatest common divisor in `Z[x]`, primitive with positive leading
    /// coefficient times the gcd of the contents.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive_part().scale(&other.content());
        }
        if other.is_zero() {
            return self.primitive_part().scale(&self.content());
        }
        let c = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_divrem(&b).1;
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part().scale(&c)
    }

    pub fn is_squarefree(&self) -> bool {
        if self.is_constant() {
            return true;
        }
        self.gcd(&self.derivative()).is_constant()
    }

    /// `f / gcd(f, f')` made primitive.
    pub fn squarefree_part(&self) -> IntPoly {
        if self.is_constant() {
            return self.primitive_part();
        }
        let g = self.gcd(&self.derivative()).primitive_part();
        self.primitive_part().exact_div(&g).expect("gcd divides its argument")
    }

    /// Resultant via fraction-free (Bareiss) elimination of the Sylvester matrix.
    pub fn resultant(&self, other: &IntPoly) -> BigInt {
        if self.is_zero() || other.is_zero() {
            return BigInt::zero();
        }
        let (m, n) = (self.deg(), other.deg());
        if m == 0 && n == 0 {
            return BigInt::one();
        }
        if m == 0 {
            return self.leading().pow(n as u32);
        }
        if n == 0 {
            return other.leading().pow(m as u32);
        }
        let size = m + n;
        let mut mat = vec![vec![BigInt::zero(); size]; size];
        for i in 0..n {
            for (j, c) in self.coeffs.iter().rev().enumerate() {
                mat[i][i + j] = c.clone();
            }
        }
        for i in 0..m {
            for (j, c) in other.coeffs.iter().rev().enumerate() {
                mat[n + i][i + j] = c.clone();
            }
        }
        bareiss_det(mat)
    }

    /// `(-1)^(n(n-1)/2) * res(f, f') / lc(f)`
    pub fn discriminant(&self) -> Result<BigInt, PolyError> {
        let n = self.degree().filter(|&d| d >= 1).ok_or(PolyError::DegreeTooSmall(1))?;
        if n == 1 {
            return Ok(BigInt::one());
        }
        let res = self.resultant(&self.derivative());
        let d = res / self.leading();
        Ok(if (n * (n - 1) / 2) % 2 == 1 { -d } else { d })
    }

    /// Integer translate of a monic polynomial whose `x^(n-1)` coefficient
    /// lies in `[0, n-1]`.
    pub fn standardize(&self) -> Result<ShiftResult, PolyError> {
        let n = self.degree().filter(|&d| d >= 1).ok_or(PolyError::DegreeTooSmall(1))?;
        if !self.is_monic() {
            return Err(PolyError::NotMonic);
        }
        // f(x+a) has x^(n-1) coefficient c + n*a.
        let c = &self.coeffs[n - 1];
        let nn = BigInt::from(n);
        let r = c.mod_floor(&nn);
        let shift = (r - c) / &nn;
        Ok(ShiftResult { standard: self.shift(&shift), shift })
    }

    /// Make the leading coefficient 1 by substituting `x -> x / lc` and
    /// clearing denominators: `lc^(n-1) f(x / lc)`. Roots are scaled by `lc`,
    /// so the splitting field is unchanged.
    pub fn monic_associate(&self) -> IntPoly {
        let lc = self.leading();
        if lc.is_one() || self.is_zero() {
            return self.clone();
        }
        let n = self.deg();
        let mut coeffs = Vec::with_capacity(n + 1);
        let mut pw = BigInt::one();
        for i in (0..n).rev() {
            coeffs.push((i, &self.coeffs[i] * &pw));
            pw *= &lc;
        }
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, c) in coeffs {
            out[i] = c;
        }
        out[n] = BigInt::one();
        IntPoly::new(out)
    }

    /// Canonical rendering with the given variable letter.
    pub fn format_var(&self, var: char) -> String {
        text::format(self, var)
    }

    pub fn parse(s: &str) -> Result<IntPoly, ParseError> {
        text::parse(s)
    }

    /// Ordering used wherever a deterministic sort of polynomials is needed:
    /// by degree, then coefficients from the top down.
    pub fn canonical_cmp(&self, other: &IntPoly) -> Ordering {
        self.coeffs.len().cmp(&other.coeffs.len()).then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Result of [`IntPoly::standardize`]: `standard(x) = input(x + shift)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftResult {
    pub standard: IntPoly,
    pub shift: BigInt,
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::format(self, 'x'))
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({})", self)
    }
}

impl std::str::FromStr for IntPoly {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        text::parse(s)
    }
}

// JSON form: array of decimal strings, low to high.
impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v: Vec<String> = Vec::deserialize(d)?;
        let coeffs =
            v.iter().map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom)).collect::<Result<Vec<_>, _>>()?;
        Ok(IntPoly::new(coeffs))
    }
}

/// Serde adapter storing a polynomial as its canonical text, for use with
/// `#[serde(with = "...")]`.
pub mod text_serde {
    use super::IntPoly;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(p: &IntPoly, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(p)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<IntPoly, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut c = long.coeffs.clone();
        for (a, b) in c.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        IntPoly::new(c)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut c = self.coeffs.clone();
        if c.len() < rhs.coeffs.len() {
            c.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in c.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        IntPoly::new(c)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPoly::new(c)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: &IntPoly) -> IntPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Binary arithmetic selector for the `arith` entry point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub fn arith(f: &IntPoly, g: &IntPoly, op: ArithOp) -> IntPoly {
    match op {
        ArithOp::Add => f + g,
        ArithOp::Sub => f - g,
        ArithOp::Mul => f * g,
    }
}

/// Product of an iterator of polynomials.
pub fn product<'a>(it: impl IntoIterator<Item = &'a IntPoly>) -> IntPoly {
    it.into_iter().fold(IntPoly::one(), |acc, p| &acc * p)
}
