//! Factorization of integer polynomials over the rationals.
//!
//! Pipeline: content and sign, squarefree decomposition (Yun), choice of a
//! good prime, quadratic Hensel lifting past the Landau–Mignotte bound, then
//! Zassenhaus subset recombination with trial division over `Z`.

mod hensel;
pub mod modp;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::intpoly::IntPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FactorError {
    #[error("{0} is not a usable prime for this polynomial")]
    BadPrime(u64),
    #[error("cannot factor the zero polynomial")]
    Zero,
}

/// Number of candidate primes examined when picking the lifting prime.
const PRIME_CANDIDATES: usize = 20;

/// `content * ∏ factor^mult`, factors primitive and irreducible with positive
/// leading coefficient, sorted by degree then coefficients (top down).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub content: BigInt,
    pub factors: Vec<(IntPoly, usize)>,
}

impl Factorization {
    pub fn expand(&self) -> IntPoly {
        self.factors.iter().fold(IntPoly::constant(self.content.clone()), |acc, (f, m)| &acc * &f.pow(*m as u32))
    }

    /// Irreducible factors of degree at least 2.
    pub fn nonlinear(&self) -> impl Iterator<Item = &IntPoly> {
        self.factors.iter().map(|(f, _)| f).filter(|f| f.deg() >= 2)
    }

    pub fn to_json(&self) -> FactorizationJson {
        FactorizationJson {
            content: self.content.to_string(),
            factors: self.factors.iter().map(|(f, m)| FactorJson { poly: f.to_string(), mult: *m }).collect(),
        }
    }
}

impl Factorization {
    /// `content * (f1)^m1 * ...` with the given variable letter.
    pub fn format_var(&self, var: char) -> String {
        let mut parts = Vec::new();
        if !self.content.is_one() || self.factors.is_empty() {
            parts.push(self.content.to_string());
        }
        let alone = parts.is_empty() && self.factors.len() == 1;
        for (p, m) in &self.factors {
            let text = p.format_var(var);
            let sum = p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1;
            let s = if sum && !(alone && *m == 1) { format!("({text})") } else { text };
            parts.push(if *m > 1 { format!("{s}^{m}") } else { s });
        }
        parts.join(" * ")
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_var('x'))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorJson {
    pub poly: String,
    pub mult: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationJson {
    pub content: String,
    pub factors: Vec<FactorJson>,
}

/// Yun's algorithm on the primitive part of `f` (positive leading
/// coefficient). Parts are squarefree, pairwise coprime and listed by
/// increasing multiplicity.
pub fn squarefree_decomposition(f: &IntPoly) -> Vec<(IntPoly, usize)> {
    assert!(!f.is_zero(), "squarefree decomposition of zero");
    let f = f.primitive_part();
    let mut out = Vec::new();
    if f.is_constant() {
        return out;
    }
    let df = f.derivative();
    let a0 = f.gcd(&df).primitive_part();
    let mut b = f.exact_div(&a0).unwrap();
    let c = df.exact_div(&a0).unwrap();
    let mut d = &c - &b.derivative();
    let mut i = 1;
    loop {
        let a = b.gcd(&d).primitive_part();
        if !a.is_constant() {
            out.push((a.clone(), i));
        }
        b = b.exact_div(&a).unwrap();
        if b.is_constant() {
            break;
        }
        let c = d.exact_div(&a).unwrap();
        d = &c - &b.derivative();
        i += 1;
    }
    out
}

/// Factor `f` modulo the prime `p`; returns monic irreducibles with
/// multiplicity, sorted by degree then coefficients.
pub fn factor_mod_p(f: &IntPoly, p: u64) -> Result<Vec<(IntPoly, usize)>, FactorError> {
    if !modp::is_prime(p) || p >= 1 << 31 {
        return Err(FactorError::BadPrime(p));
    }
    let fp = modp::reduce(f, p);
    if f.is_zero() || fp.len() != f.coeffs().len() {
        return Err(FactorError::BadPrime(p));
    }
    let mut out: Vec<(modp::Fp, usize)> = Vec::new();
    for (part, mult) in modp::squarefree(&fp, p) {
        for g in modp::factor_squarefree(&part, p) {
            out.push((g, mult));
        }
    }
    out.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.iter().rev().cmp(b.0.iter().rev())));
    Ok(out.into_iter().map(|(g, m)| (modp::lift(&g), m)).collect())
}

/// Full factorization over `Q`; the content carries the sign.
pub fn factor(f: &IntPoly) -> Factorization {
    assert!(!f.is_zero(), "factor of the zero polynomial");
    let mut content = f.content();
    if f.leading().is_negative() {
        content = -content;
    }
    let mut factors = Vec::new();
    for (part, mult) in squarefree_decomposition(f) {
        for g in factor_squarefree(&part) {
            factors.push((g, mult));
        }
    }
    factors.sort_by(|a, b| a.0.canonical_cmp(&b.0).then(a.1.cmp(&b.1)));
    Factorization { content, factors }
}

/// Irreducibility of the primitive part of `f` over `Q`.
///
/// Tries a handful of primes first: the intersection of the sets of
/// possible factor degrees (subset sums of each modular degree pattern)
/// collapsing to `{0, n}` certifies irreducibility. Otherwise falls back to
/// the full factorization.
pub fn is_irreducible(f: &IntPoly) -> bool {
    assert!(f.deg() >= 1, "irreducibility of a constant");
    let g = f.primitive_part();
    let n = g.deg();
    if n == 1 {
        return true;
    }
    if g.coeff(0).is_zero() || !g.is_squarefree() {
        return false;
    }
    let full: u64 = if n < 63 { (1u64 << (n + 1)) - 1 } else { u64::MAX };
    let mut possible = full;
    let mut tried = 0;
    for p in modp::primes_from(3) {
        if tried == 12 {
            break;
        }
        let fp = modp::reduce(&g, p);
        if fp.len() != g.coeffs().len() {
            continue;
        }
        if modp::deg(&modp::gcd(&fp, &modp::derivative(&fp, p), p)) > 0 {
            continue;
        }
        tried += 1;
        if n >= 63 {
            break;
        }
        let mut sums: u64 = 1;
        for d in modp::degree_pattern(&fp, p) {
            sums |= sums << d;
        }
        possible &= sums;
        if possible == 1 | (1u64 << n) {
            return true;
        }
    }
    let fac = factor(&g);
    fac.factors.len() == 1 && fac.factors[0].1 == 1
}

/// Landau–Mignotte: any factor `h` of `f` in `Z[x]` has
/// `|h|_inf <= |h|_1 <= 2^deg(h) |f|_2`. Recombination compares
/// `lc(f) * (lifted product)`, so the modulus must exceed
/// `2 * |lc(f)| * 2^deg(f) * ceil(|f|_2)`.
fn coefficient_bound(f: &IntPoly) -> BigInt {
    let norm2_sq: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    let norm2 = norm2_sq.sqrt() + 1;
    BigInt::from(2) * f.leading().abs() * (BigInt::one() << f.deg()) * norm2
}

/// Pick the prime (among the first `PRIME_CANDIDATES` admissible primes
/// from 3) with the fewest modular factors.
fn choose_prime(f: &IntPoly) -> (u64, Vec<modp::Fp>) {
    let mut best: Option<(u64, Vec<modp::Fp>)> = None;
    let mut seen = 0;
    for p in modp::primes_from(3) {
        if seen == PRIME_CANDIDATES {
            break;
        }
        let fp = modp::reduce(f, p);
        if fp.len() != f.coeffs().len() {
            continue;
        }
        if modp::deg(&modp::gcd(&fp, &modp::derivative(&fp, p), p)) > 0 {
            continue;
        }
        seen += 1;
        let pattern = modp::degree_pattern(&fp, p);
        if best.as_ref().is_some_and(|(_, b)| b.len() <= pattern.len()) {
            continue;
        }
        let facs = modp::factor_squarefree(&fp, p);
        let single = facs.len() == 1;
        best = Some((p, facs));
        if single {
            break;
        }
    }
    best.expect("some prime is admissible for a squarefree polynomial")
}

fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut idx: Vec<usize> = (0..k).collect();
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = idx.clone();
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                done = true;
                break;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    })
}

/// Irreducible factors of a primitive squarefree polynomial with positive
/// leading coefficient.
fn factor_squarefree(f: &IntPoly) -> Vec<IntPoly> {
    let n = f.deg();
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![f.clone()];
    }
    let mut out = Vec::new();
    let mut f = f.clone();
    // strip the factor x, which is common and cheap
    if f.coeff(0).is_zero() {
        out.push(IntPoly::x());
        f = f.exact_div(&IntPoly::x()).unwrap();
        if f.deg() <= 1 {
            if f.deg() == 1 {
                out.push(f);
            }
            return out;
        }
    }

    let (p, modular) = choose_prime(&f);
    if modular.len() == 1 {
        out.push(f);
        return out;
    }
    let bound = coefficient_bound(&f);
    let (m, mut lifted) = hensel::lift(&f, &modular, p, &bound);

    let mut s = 1;
    while 2 * s <= lifted.len() {
        let mut found = None;
        let lc = f.leading();
        for subset in combinations(lifted.len(), s) {
            // quick test on the constant term
            let c0 = subset.iter().fold(lc.clone(), |acc, &i| {
                hensel::symmetric(&IntPoly::constant(acc * lifted[i].coeff(0)), &m).coeff(0)
            });
            if !c0.is_zero() && !(lc.clone() * f.coeff(0) % &c0).is_zero() {
                continue;
            }
            let prod =
                subset.iter().fold(IntPoly::constant(lc.clone()), |acc, &i| hensel::reduce(&(&acc * &lifted[i]), &m));
            let cand = hensel::symmetric(&prod, &m).primitive_part();
            if let Some(q) = f.checked_div(&cand) {
                found = Some((subset, cand, q));
                break;
            }
        }
        match found {
            Some((subset, cand, q)) => {
                out.push(cand);
                f = q.primitive_part();
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
            }
            None => s += 1,
        }
    }
    if f.deg() >= 1 {
        out.push(f);
    }
    out
}
