//! Galois groups of irreducible integer polynomials.
//!
//! Degrees 2 to 4 are decided exactly from the discriminant and the
//! resolvent cubic. Degrees 5 to 7 are identified from Frobenius cycle
//! types (factorization patterns modulo unramified primes, in increasing
//! order from 3) matched against the built-in transitive group tables.
//! Higher degrees only get symmetric/alternating certificates.

mod tables;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use statrs::distribution::{ChiSquared, ContinuousCDF};
use thiserror::Error;

use crate::factor::{self, modp};
use crate::intpoly::IntPoly;

pub const DEFAULT_SAMPLES: usize = 2000;

/// A candidate group is kept as plausible while the Pearson chi-square
/// p-value of the observed cycle-type counts stays above this.
pub const PLAUSIBILITY_P_VALUE: f64 = 1e-6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GaloisError {
    #[error("polynomial is not irreducible over Q")]
    NotIrreducible,
    #[error("degree {0} is outside the supported range")]
    DegreeOutOfRange(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Method {
    #[serde(rename = "exact-discriminant")]
    ExactDiscriminant,
    #[serde(rename = "exact-resolvent")]
    ExactResolvent,
    #[serde(rename = "frobenius-mc")]
    FrobeniusMc,
    #[serde(rename = "heuristic-large")]
    HeuristicLarge,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::ExactDiscriminant => "exact-discriminant",
            Method::ExactResolvent => "exact-resolvent",
            Method::FrobeniusMc => "frobenius-mc",
            Method::HeuristicLarge => "heuristic-large",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaloisResult {
    pub degree: usize,
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub order: Option<u64>,
    pub method: Method,
    pub samples: usize,
    pub ambiguous_with: Vec<String>,
}

impl GaloisResult {
    fn exact(degree: usize, name: &str, method: Method) -> Self {
        let order = table(degree).and_then(|t| t.get(name)).map(|e| e.order);
        GaloisResult { degree, name: name.to_string(), order, method, samples: 0, ambiguous_with: Vec::new() }
    }

    pub fn is_ambiguous(&self) -> bool {
        !self.ambiguous_with.is_empty()
    }
}

impl fmt::Display for GaloisResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)?;
        if let Some(o) = self.order {
            write!(f, " (order {o})")?;
        }
        write!(f, " [{}", self.method)?;
        if self.samples > 0 {
            write!(f, ", {} primes", self.samples)?;
        }
        write!(f, "]")?;
        if self.is_ambiguous() {
            write!(f, " ambiguous with {}", self.ambiguous_with.join(", "))?;
        }
        Ok(())
    }
}

/// A cycle type as a descending list of cycle lengths.
pub type Partition = Vec<usize>;

#[derive(Debug, Clone)]
pub struct TableEntry {
    pub name: &'static str,
    pub order: u64,
    pub counts: BTreeMap<Partition, u64>,
}

impl TableEntry {
    /// Every element is an even permutation.
    pub fn is_even(&self) -> bool {
        self.counts.keys().all(|t| is_even_type(t))
    }
}

#[derive(Debug, Clone)]
pub struct CycleTypeTable {
    pub degree: usize,
    pub entries: Vec<TableEntry>,
}

impl CycleTypeTable {
    pub fn get(&self, name: &str) -> Option<&TableEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

pub fn is_even_type(t: &[usize]) -> bool {
    t.iter().map(|&l| l - 1).sum::<usize>() % 2 == 0
}

/// Built-in table for transitive groups of the given degree (2 to 7).
pub fn table(degree: usize) -> Option<&'static CycleTypeTable> {
    static TABLES: OnceLock<Vec<CycleTypeTable>> = OnceLock::new();
    let all = TABLES.get_or_init(|| {
        (2..=7)
            .map(|n| CycleTypeTable {
                degree: n,
                entries: tables::GROUPS
                    .iter()
                    .filter(|g| g.degree == n)
                    .map(|g| TableEntry {
                        name: g.name,
                        order: g.order,
                        counts: g
                            .classes
                            .iter()
                            .map(|(t, c)| {
                                let mut p: Partition = t.iter().map(|&x| x as usize).collect();
                                p.sort_unstable_by(|a, b| b.cmp(a));
                                (p, *c)
                            })
                            .collect(),
                    })
                    .collect(),
            })
            .collect()
    });
    all.iter().find(|t| t.degree == degree)
}

pub fn is_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// Frobenius cycle types at the first `count` primes `p >= 3` not dividing
/// `disc(f) * lc(f)`, in increasing order of `p`. Each pattern is the
/// multiset of irreducible factor degrees of `f mod p`, sorted descending.
pub fn frobenius_samples(f: &IntPoly, count: usize) -> Vec<Partition> {
    frobenius_samples_with_primes(f, count).into_iter().map(|(_, t)| t).collect()
}

pub fn frobenius_samples_with_primes(f: &IntPoly, count: usize) -> Vec<(u64, Partition)> {
    let disc = f.discriminant().unwrap_or_default();
    let bad = &disc * f.leading();
    let mut out = Vec::with_capacity(count);
    for p in modp::primes_from(3) {
        if out.len() == count {
            break;
        }
        if bad.is_zero() || (&bad % BigInt::from(p)).is_zero() {
            if bad.is_zero() {
                break;
            }
            continue;
        }
        let fp = modp::reduce(f, p);
        out.push((p, modp::degree_pattern(&fp, p)));
    }
    out
}

/// Resolvent cubic of the monic quartic `x^4 + a x^3 + b x^2 + c x + d`,
/// with roots `r1 r2 + r3 r4` and its conjugates.
fn resolvent_cubic(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) -> IntPoly {
    IntPoly::new(vec![
        -(a * a * d - BigInt::from(4) * b * d + c * c),
        a * c - BigInt::from(4) * d,
        -b.clone(),
        BigInt::from(1),
    ])
}

/// A rational quadratic with discriminant `delta` splits over `Q(sqrt(disc))`.
fn splits_over(delta: &BigInt, disc: &BigInt) -> bool {
    delta.is_zero() || is_square(delta) || is_square(&(delta * disc))
}

/// Exact classification for irreducible polynomials of degree 2 to 4.
pub fn classify_exact_small(f: &IntPoly) -> Result<GaloisResult, GaloisError> {
    let n = f.deg();
    if !(2..=4).contains(&n) {
        return Err(GaloisError::DegreeOutOfRange(n));
    }
    if !factor::is_irreducible(f) {
        return Err(GaloisError::NotIrreducible);
    }
    Ok(classify_small_unchecked(f))
}

fn classify_small_unchecked(f: &IntPoly) -> GaloisResult {
    let n = f.deg();
    let g = f.primitive_part().monic_associate();
    let disc = g.discriminant().expect("degree >= 2");
    match n {
        2 => GaloisResult::exact(2, "C2", Method::ExactDiscriminant),
        3 => {
            let name = if is_square(&disc) { "C3" } else { "S3" };
            GaloisResult::exact(3, name, Method::ExactDiscriminant)
        }
        _ => {
            let [d, c, b, a] = [g.coeff(0), g.coeff(1), g.coeff(2), g.coeff(3)];
            let r = resolvent_cubic(&a, &b, &c, &d);
            let roots = integer_roots_monic_cubic(&r);
            let name = match roots.len() {
                0 if is_square(&disc) => "A4",
                0 => "S4",
                1 => {
                    let t = &roots[0];
                    let d1 = t * t - BigInt::from(4) * &d;
                    let d2 = &a * &a - BigInt::from(4) * (&b - t);
                    if splits_over(&d1, &disc) && splits_over(&d2, &disc) {
                        "C4"
                    } else {
                        "D4"
                    }
                }
                _ => "V4",
            };
            GaloisResult::exact(4, name, Method::ExactResolvent)
        }
    }
}

/// Distinct integer roots of a monic integer cubic (its rational roots).
fn integer_roots_monic_cubic(r: &IntPoly) -> Vec<BigInt> {
    let fac = factor::factor(r);
    let mut out: Vec<BigInt> =
        fac.factors.iter().filter(|(p, _)| p.deg() == 1).map(|(p, _)| -p.coeff(0) / p.coeff(1)).collect();
    out.sort();
    out.dedup();
    out
}

fn chi_square_p_value(entry: &TableEntry, observed: &BTreeMap<Partition, usize>, total: usize) -> f64 {
    let n = total as f64;
    let mut stat = 0.0;
    for (t, &count) in &entry.counts {
        let e = n * count as f64 / entry.order as f64;
        let o = observed.get(t).copied().unwrap_or(0) as f64;
        stat += (o - e) * (o - e) / e;
    }
    let df = (entry.counts.len() - 1).max(1) as f64;
    ChiSquared::new(df).map(|d| d.sf(stat)).unwrap_or(0.0)
}

fn classify_monte_carlo(f: &IntPoly, budget: usize) -> GaloisResult {
    let n = f.deg();
    let samples = frobenius_samples(f, budget);
    let mut observed: BTreeMap<Partition, usize> = BTreeMap::new();
    for s in &samples {
        *observed.entry(s.clone()).or_default() += 1;
    }
    let disc_square = is_square(&f.discriminant().expect("degree >= 2"));
    let tbl = table(n).expect("tables cover degrees 5 to 7");
    let candidates: Vec<&TableEntry> = tbl
        .entries
        .iter()
        .filter(|e| observed.keys().all(|t| e.counts.contains_key(t)))
        .filter(|e| e.is_even() == disc_square)
        .collect();
    if candidates.is_empty() {
        return GaloisResult {
            degree: n,
            name: "UNKNOWN".into(),
            order: None,
            method: Method::FrobeniusMc,
            samples: samples.len(),
            ambiguous_with: Vec::new(),
        };
    }
    let mut scored: Vec<(f64, &TableEntry)> =
        candidates.iter().map(|e| (chi_square_p_value(e, &observed, samples.len()), *e)).collect();
    // best fit first; ties go to the smaller group
    scored.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.order.cmp(&b.1.order)));
    let best = scored[0].1;
    let ambiguous_with = if candidates.len() == 1 {
        Vec::new()
    } else if scored[0].0 < PLAUSIBILITY_P_VALUE {
        // nothing fits; report the rest rather than silently choosing
        scored[1..].iter().map(|(_, e)| e.name.to_string()).collect()
    } else {
        scored[1..].iter().filter(|(p, _)| *p >= PLAUSIBILITY_P_VALUE).map(|(_, e)| e.name.to_string()).collect()
    };
    GaloisResult {
        degree: n,
        name: best.name.to_string(),
        order: Some(best.order),
        method: Method::FrobeniusMc,
        samples: samples.len(),
        ambiguous_with,
    }
}

fn factorial(n: usize) -> Option<u64> {
    (1..=n as u64).try_fold(1u64, |acc, k| acc.checked_mul(k))
}

fn is_prime_usize(n: usize) -> bool {
    modp::is_prime(n as u64)
}

/// Symmetric/alternating certificates for degree 8 and up.
///
/// `Sn`: an `(n-1)`-cycle type, a type containing a prime cycle length in
/// `(n/2, n-2]`, and an odd type have all been observed. `An`: the
/// discriminant is a square and a prime cycle length in `(n/2, n-3]` has
/// been observed (transitive + such a cycle forces `An` by Jordan).
fn classify_large(f: &IntPoly, budget: usize) -> GaloisResult {
    let n = f.deg();
    let samples = frobenius_samples(f, budget);
    let has_prime_cycle = |t: &Partition, hi: usize| t.iter().any(|&l| 2 * l > n && l <= hi && is_prime_usize(l));
    let long = samples.iter().any(|t| t.len() == 2 && t[0] == n - 1);
    let odd = samples.iter().any(|t| !is_even_type(t));
    let disc_square = is_square(&f.discriminant().expect("degree >= 2"));
    let (name, order) = if !disc_square && long && odd && samples.iter().any(|t| has_prime_cycle(t, n - 2)) {
        (format!("S{n}"), factorial(n))
    } else if disc_square && samples.iter().any(|t| has_prime_cycle(t, n - 3)) {
        (format!("A{n}"), factorial(n).map(|o| o / 2))
    } else {
        ("UNKNOWN".to_string(), None)
    };
    GaloisResult {
        degree: n,
        name,
        order,
        method: Method::HeuristicLarge,
        samples: samples.len(),
        ambiguous_with: Vec::new(),
    }
}

/// Galois group of an irreducible polynomial of degree at least 2.
pub fn classify(f: &IntPoly, sample_budget: usize) -> Result<GaloisResult, GaloisError> {
    let n = f.degree().unwrap_or(0);
    if n < 2 {
        return Err(GaloisError::DegreeOutOfRange(n));
    }
    if !factor::is_irreducible(f) {
        return Err(GaloisError::NotIrreducible);
    }
    Ok(classify_irreducible(f, sample_budget))
}

/// [`classify`] for callers that have already established irreducibility.
pub fn classify_irreducible(f: &IntPoly, sample_budget: usize) -> GaloisResult {
    let g = f.primitive_part();
    match g.deg() {
        2..=4 => classify_small_unchecked(&g),
        5..=7 => classify_monte_carlo(&g, sample_budget),
        _ => classify_large(&g, sample_budget),
    }
}

/// Exact integer root test used by callers outside this module.
pub fn divides(a: &BigInt, b: &BigInt) -> bool {
    !a.is_zero() && b.is_multiple_of(a)
}
