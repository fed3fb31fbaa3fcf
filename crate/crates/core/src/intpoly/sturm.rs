//! Exact real-root counting with integer Sturm chains.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{IntPoly, PolyError};

pub type Rational = BigRational;

/// Interval endpoint for [`sturm_count`].
#[derive(Debug, Clone, PartialEq)]
pub enum Bound {
    NegInfinity,
    PosInfinity,
    At(Rational),
}

impl Bound {
    pub fn int(n: i64) -> Self {
        Bound::At(Rational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Bound::At(Rational::new(BigInt::from(n), BigInt::from(d)))
    }
}

/// Sturm chain `f, f', -prem(...)`, each remainder replaced by its
/// primitive part. Pseudo-remainders use a positive multiplier so the sign
/// pattern matches the rational Sturm sequence.
fn chain(f: &IntPoly) -> Vec<IntPoly> {
    let mut seq = vec![f.clone(), f.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let r = seq[n - 2].sign_preserving_prem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        // primitive_part flips sign on negative leading coefficient; we need
        // a positive scaling of -r.
        let neg = -r;
        let c = neg.content();
        seq.push(neg.div_scalar_exact(&c));
    }
    seq
}

fn sign(v: &BigInt) -> i32 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

fn eval_homogeneous(p: &IntPoly, x: &Rational) -> BigInt {
    let (n, d) = (x.numer(), x.denom());
    let mut acc = BigInt::zero();
    let mut dpow = BigInt::one();
    let coeffs = p.coeffs();
    // sum_i c_i n^i d^(deg - i), which has the sign of p(n/d) since d > 0
    let deg = coeffs.len().saturating_sub(1);
    let mut npow = BigInt::one();
    let mut terms = Vec::with_capacity(coeffs.len());
    for c in coeffs {
        terms.push(c * &npow);
        npow *= n;
    }
    for i in (0..=deg).rev() {
        acc += &terms[i] * &dpow;
        dpow *= d;
    }
    acc
}

fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut count = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn variations_at(seq: &[IntPoly], b: &Bound) -> usize {
    match b {
        Bound::PosInfinity => variations(seq.iter().map(|p| sign(&p.leading()))),
        Bound::NegInfinity => variations(seq.iter().map(|p| {
            let s = sign(&p.leading());
            if p.deg() % 2 == 1 {
                -s
            } else {
                s
            }
        })),
        Bound::At(x) => variations(seq.iter().map(|p| sign(&eval_homogeneous(p, x)))),
    }
}

/// Number of distinct real roots of a squarefree `f` in the interval from
/// `lo` to `hi`, each end open or closed as requested. Infinite ends are
/// always open.
pub fn sturm_count(f: &IntPoly, lo: &Bound, hi: &Bound, lo_open: bool, hi_open: bool) -> Result<usize, PolyError> {
    if f.is_zero() {
        return Err(PolyError::NotSquarefree);
    }
    if !f.is_squarefree() {
        return Err(PolyError::NotSquarefree);
    }
    if f.is_constant() {
        return Ok(0);
    }
    if bound_gt(lo, hi) {
        return Ok(0);
    }
    let seq = chain(f);
    // V(lo) - V(hi) counts roots in (lo, hi].
    let mut count = variations_at(&seq, lo) as isize - variations_at(&seq, hi) as isize;
    if let Bound::At(a) = lo {
        if !lo_open && eval_homogeneous(f, a).is_zero() {
            count += 1;
        }
    }
    if let Bound::At(b) = hi {
        if hi_open && eval_homogeneous(f, b).is_zero() {
            count -= 1;
        }
    }
    Ok(count.max(0) as usize)
}

fn bound_gt(a: &Bound, b: &Bound) -> bool {
    match (a, b) {
        (Bound::PosInfinity, Bound::PosInfinity) | (Bound::NegInfinity, Bound::NegInfinity) => true,
        (Bound::PosInfinity, _) | (_, Bound::NegInfinity) => true,
        (Bound::At(x), Bound::At(y)) => x > y,
        _ => false,
    }
}
