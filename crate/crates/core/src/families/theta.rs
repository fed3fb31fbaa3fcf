//! Complete bipartite, theta and generalised theta graphs.

use num_bigint::BigInt;

use super::is_cyclotomic;
use crate::factor;
use crate::graphs::cycle_polynomial;
use crate::intpoly::{falling_factorial, stirling2, IntPoly, PolyError};

fn xpow(k: usize) -> IntPoly {
    IntPoly::monomial(1, k)
}

fn one() -> IntPoly {
    IntPoly::one()
}

/// `Σ_{k=1}^m S(m,k) (q)_k (q-k)^n`, the chromatic polynomial of `K_{m,n}`.
pub fn complete_bipartite_chromatic(m: usize, n: usize) -> IntPoly {
    (1..=m as u32).fold(IntPoly::zero(), |acc, k| {
        let term = &falling_factorial(k) * &IntPoly::linear_root(k).pow(n as u32);
        &acc + &term.scale(&stirling2(m as u32, k))
    })
}

/// `F_{m,n}(q)`: the chromatic polynomial of `K_{m,n}` divided by `q(q-1)`.
#[allow(non_snake_case)]
pub fn complete_bipartite_F(m: usize, n: usize) -> IntPoly {
    assert!(m >= 1 && n >= 1, "K_{{m,n}} needs both sides nonempty");
    complete_bipartite_chromatic(m, n).exact_div(&falling_factorial(2)).expect("K_{m,n} has an edge")
}

/// `G_{s,p}(x) = (x (x^s - 1)^p - (x^s - x)^p) / (x (x - 1)^p)`, in
/// `x = 1 - q`.
#[allow(non_snake_case)]
pub fn theta_G(s: usize, p: usize) -> Result<IntPoly, PolyError> {
    let x = xpow(1);
    let num = &(&x * &(&xpow(s) - &one()).pow(p as u32)) - &(&xpow(s) - &x).pow(p as u32);
    let den = &x * &(&x - &one()).pow(p as u32);
    num.exact_div(&den)
}

/// Colourings of a path with `s` edges whose two ends have prescribed
/// colours, equal (`same`) or different; polynomials in `q`.
fn path_counts(s: usize) -> (IntPoly, IntPoly) {
    let qm1 = IntPoly::linear_root(1).pow(s as u32);
    let sign = BigInt::from(if s.is_multiple_of(2) { 1 } else { -1 });
    let q = xpow(1);
    let same = (&qm1 + &IntPoly::linear_root(1).scale(&sign)).exact_div(&q).expect("exact");
    let diff = (&qm1 - &IntPoly::constant(sign)).exact_div(&q).expect("exact");
    (same, diff)
}

/// Chromatic polynomial of paths with the given edge counts joining two
/// common endpoints, in `q`.
fn paths_between(lengths: impl Iterator<Item = usize>) -> IntPoly {
    let (mut same, mut diff) = (one(), one());
    for l in lengths {
        let (a, b) = path_counts(l);
        same = &same * &a;
        diff = &diff * &b;
    }
    &(&xpow(1) * &same) + &(&falling_factorial(2) * &diff)
}

/// Chromatic polynomial of `Θ^{s,p}`, in `q`.
pub fn theta_chromatic(s: usize, p: usize) -> IntPoly {
    paths_between(std::iter::repeat_n(s, p))
}

/// Whether `G_{s,2}` divides `G_{s,p}`, by exact remainder.
pub fn theta_divides(s: usize, p: usize) -> Result<bool, PolyError> {
    Ok(theta_G(s, p)?.divisible_by(&theta_G(s, 2)?))
}

/// `g(x) = x^{ns} - x^{ns-1} + x^{n-1} - 1`.
pub fn gen_theta_g(s: usize, n: usize) -> IntPoly {
    let ns = n * s;
    &(&(&xpow(ns) - &xpow(ns - 1)) + &xpow(n - 1)) - &one()
}

/// `f(x) = (x^s - 1)^n - x^{n-1} (x^{s-1} - 1)^n`.
pub fn gen_theta_f(s: usize, n: usize) -> IntPoly {
    let a = (&xpow(s) - &one()).pow(n as u32);
    let b = &xpow(n - 1) * &(&xpow(s - 1) - &one()).pow(n as u32);
    &a - &b
}

/// `f(X^n) ≡ 0 (mod g(X))`: every root `α` of `g` has `α^n` a root of `f`.
pub fn gen_theta_root_power_check(s: usize, n: usize) -> bool {
    let g = gen_theta_g(s, n);
    gen_theta_f(s, n).inflate(n).divisible_by(&g)
}

/// Chromatic polynomial of the generalised theta graph, in `q`:
/// `∏_{i=ns-n+2}^{ns} P(C_i) / (q(q-1))^{n-1} · (-1)^{ns+1} x g(x)` with
/// `x = 1 - q`.
pub fn gen_theta_chromatic(s: usize, n: usize) -> Result<IntPoly, PolyError> {
    let ns = n * s;
    let cycles = ((ns - n + 2)..=ns).fold(one(), |acc, i| &acc * &cycle_polynomial(i));
    let k2 = falling_factorial(2).pow((n - 1) as u32);
    let quotient = cycles.exact_div(&k2)?;
    let x = IntPoly::from_i64s(&[1, -1]);
    let tail = &x * &gen_theta_g(s, n).one_minus();
    let signed = if (ns + 1).is_multiple_of(2) { tail } else { -tail };
    Ok(&quotient * &signed)
}

/// Irreducible factors of `g(x)` that are neither linear nor cyclotomic,
/// in `x = 1 - q`.
pub fn gen_theta_interesting_factors(s: usize, n: usize) -> Vec<IntPoly> {
    factor::factor(&gen_theta_g(s, n))
        .factors
        .into_iter()
        .map(|(f, _)| f)
        .filter(|f| f.deg() > 1 && !is_cyclotomic(f))
        .collect()
}

/// Product of [`gen_theta_interesting_factors`], in `x = 1 - q`.
pub fn gen_theta_interesting(s: usize, n: usize) -> IntPoly {
    gen_theta_interesting_factors(s, n).iter().fold(one(), |acc, f| &acc * f)
}
