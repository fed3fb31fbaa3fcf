//! Closed-form chromatic polynomials and interesting factors of the graph
//! families, plus the divisibility and scaling identities as predicates.
//!
//! Two substitutions appear: rings and cycles are written in `q` (with
//! `x = q - 1` only inside the cycle formulas), while theta and
//! generalised theta factors live in `x = 1 - q`. Every function states
//! which variable its result is in.

mod biclique;
mod theta;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::graphs::{FamilySpec, GraphError};
use crate::intpoly::{self, IntPoly, PolyError};

pub use biclique::{biclique_polynomial, set_partitions, SetPartition, MAX_BICLIQUE_SETS};
pub use theta::{
    complete_bipartite_F, complete_bipartite_chromatic, gen_theta_chromatic, gen_theta_f, gen_theta_g,
    gen_theta_interesting, gen_theta_interesting_factors, gen_theta_root_power_check, theta_G, theta_chromatic,
    theta_divides,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("biclique with {0} sets exceeds the limit of 10")]
    TooManySets(usize),
    #[error("ring has no clique of size 1; no closed form available")]
    NoUnitClique,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `(1/q) (∏ (q - a_i) - ∏ (-a_i))`, the interesting factor of
/// `R(1, a_1, ..., a_{k-1})`, in `q`. Degree `k - 2`.
pub fn ring_interesting_factor(a: &[usize]) -> Result<IntPoly, FamilyError> {
    if a.len() < 2 || a.contains(&0) {
        return Err(FamilyError::InvalidParameters("need at least two positive entries".into()));
    }
    let prod = a.iter().fold(IntPoly::one(), |acc, &ai| &acc * &IntPoly::linear_root(ai));
    let konst = a.iter().fold(BigInt::one(), |acc, &ai| acc * -BigInt::from(ai));
    let numer = &prod - &IntPoly::constant(konst);
    Ok(numer.exact_div(&IntPoly::x())?)
}

/// Interesting factor of `R(1, 1, a, b)`: `x^2 - (a+b+1) x + (ab+a+b)`.
pub fn ring_quadratic(a: u64, b: u64) -> IntPoly {
    let (a, b) = (BigInt::from(a), BigInt::from(b));
    IntPoly::new(vec![&a * &b + &a + &b, -(&a + &b + 1u32), BigInt::one()])
}

/// Rotate a ring so that a clique of size 1 comes first; returns the
/// remaining sizes `a_1, ..., a_{k-1}`.
pub fn ring_tail(sizes: &[usize]) -> Result<Vec<usize>, FamilyError> {
    let i = sizes.iter().position(|&s| s == 1).ok_or(FamilyError::NoUnitClique)?;
    Ok(sizes[i + 1..].iter().chain(&sizes[..i]).copied().collect())
}

/// `(q - 1 - b)(q - 2 - b) ... (q - b - c)`: ways to colour a `c`-clique
/// from `q - 1` colours avoiding `b` already used ones.
fn avoiding(b: usize, c: usize) -> IntPoly {
    (0..c).fold(IntPoly::one(), |acc, j| &acc * &IntPoly::linear_root(1 + b + j))
}

/// Full chromatic polynomial of `R(1, a_1, ..., a_{k-1})` in `q`.
///
/// Fix the colour of the single vertex. The cliques `2..k-2` may reuse it
/// at one vertex each, on a set `S` with no two consecutive cliques; the
/// remaining vertices form a path of cliques coloured from `q - 1` colours.
pub fn ring_chromatic(a: &[usize]) -> Result<IntPoly, FamilyError> {
    let k1 = a.len();
    if k1 < 2 || a.contains(&0) {
        return Err(FamilyError::InvalidParameters("need at least two positive entries".into()));
    }
    let inner = k1.saturating_sub(2);
    let mut total = IntPoly::zero();
    // bit j of `s` marks clique j + 1 (0-based index into `a`)
    for s in 0u64..(1u64 << inner) {
        if s & (s >> 1) != 0 {
            continue;
        }
        let chosen = |i: usize| i >= 1 && i + 1 < k1 && s >> (i - 1) & 1 == 1;
        let b: Vec<usize> = (0..k1).map(|i| if chosen(i) { a[i] - 1 } else { a[i] }).collect();
        let mut term = avoiding(0, b[0]);
        for i in 1..k1 {
            term = &term * &avoiding(b[i - 1], b[i]);
        }
        let mult: BigInt = (0..k1).filter(|&i| chosen(i)).map(|i| BigInt::from(a[i])).product();
        total = &total + &term.scale(&mult);
    }
    Ok(&IntPoly::x() * &total)
}

/// Checks that `h_{na}(q) = n^D h_a(q / n)` coefficientwise, where `h_a` is
/// the ring interesting factor of degree `D`.
pub fn scaling_identity_check(a: &[usize], n: usize) -> Result<bool, FamilyError> {
    let h = ring_interesting_factor(a)?;
    let scaled: Vec<usize> = a.iter().map(|&x| x * n).collect();
    let hn = ring_interesting_factor(&scaled)?;
    let d = h.deg();
    if hn.deg() != d {
        return Ok(false);
    }
    let nb = BigInt::from(n);
    Ok((0..=d).all(|i| hn.coeff(i) == nb.pow((d - i) as u32) * h.coeff(i)))
}

/// `((q-1)^{k-1} - (-1)^{k-1}) / q`, the interesting factor of the
/// `k`-cycle, in `q`.
pub fn cycle_interesting_factor(k: usize) -> Result<IntPoly, FamilyError> {
    if k < 3 {
        return Err(FamilyError::InvalidParameters("a cycle needs k >= 3".into()));
    }
    ring_interesting_factor(&vec![1; k - 1])
}

/// `f` is (up to sign) a cyclotomic polynomial.
pub fn is_cyclotomic(f: &IntPoly) -> bool {
    let g = f.primitive_part();
    let Some(d) = g.degree() else { return false };
    if d == 0 || !g.is_monic() {
        return false;
    }
    // phi(k) >= sqrt(k / 2)
    let bound = (2 * d * d).max(6) as u32;
    (1..=bound).any(|k| euler_phi(k) as usize == d && intpoly::cyclotomic(k) == g)
}

fn euler_phi(mut n: u32) -> u32 {
    let mut r = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            r -= r / p;
        }
        p += 1;
    }
    if n > 1 {
        r -= r / n;
    }
    r
}

/// Closed-form chromatic polynomial of a family instance, in `q`.
pub fn full_chromatic(spec: &FamilySpec) -> Result<IntPoly, FamilyError> {
    spec.validate()?;
    match spec {
        FamilySpec::Ring(sizes) => ring_chromatic(&ring_tail(sizes)?),
        FamilySpec::Biclique { n, sets } => Ok(biclique_polynomial(*n, sets)?.0),
        FamilySpec::CompleteBipartite { m, n } => Ok(complete_bipartite_chromatic(*m, *n)),
        FamilySpec::Theta { s, p } => Ok(theta_chromatic(*s, *p)),
        FamilySpec::GenTheta { s, n } => Ok(gen_theta_chromatic(*s, *n)?),
    }
}

/// The family's interesting factor, in `q`, with positive leading
/// coefficient. For theta graphs this is `G_{s,p}(1 - q)` up to sign, and for
/// generalised theta graphs the product of the non-cyclotomic nonlinear
/// factors of `g(1 - q)`.
pub fn interesting_factor(spec: &FamilySpec) -> Result<IntPoly, FamilyError> {
    spec.validate()?;
    let f = match spec {
        FamilySpec::Ring(sizes) => ring_interesting_factor(&ring_tail(sizes)?)?,
        FamilySpec::Biclique { n, sets } => biclique_polynomial(*n, sets)?.1,
        FamilySpec::CompleteBipartite { m, n } => complete_bipartite_F(*m, *n),
        FamilySpec::Theta { s, p } => theta_G(*s, *p)?.one_minus(),
        FamilySpec::GenTheta { s, n } => gen_theta_interesting(*s, *n).one_minus(),
    };
    Ok(if f.leading() < BigInt::zero() { -f } else { f })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::chromatic_polynomial;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn ring_examples() {
        assert_eq!(ring_interesting_factor(&[1, 1, 5]).unwrap(), p(&[11, -7, 1]));
        assert_eq!(ring_interesting_factor(&[1, 1, 6]).unwrap(), p(&[13, -8, 1]));
        assert_eq!(ring_interesting_factor(&[1, 1, 1, 1]).unwrap(), p(&[-4, 6, -4, 1]));
        assert_eq!(ring_quadratic(1, 5), p(&[11, -7, 1]));
        assert_eq!(ring_quadratic(2, 7), p(&[23, -10, 1]));
        assert_eq!(ring_quadratic(2, 7).discriminant().unwrap(), BigInt::from(8));
        assert_eq!(ring_quadratic(1, 1), p(&[3, -3, 1]));
        for a in 1..6 {
            for b in 1..6 {
                assert_eq!(ring_quadratic(a, b), ring_interesting_factor(&[1, a as usize, b as usize]).unwrap());
            }
        }
    }

    #[test]
    fn ring_full_matches_engine() {
        for a in [vec![1, 1, 5], vec![2, 3, 1], vec![1, 2, 2, 1], vec![3, 1, 2, 2], vec![2, 2]] {
            let mut sizes = vec![1];
            sizes.extend(&a);
            let g = FamilySpec::Ring(sizes).build().unwrap();
            assert_eq!(ring_chromatic(&a).unwrap(), chromatic_polynomial(&g).unwrap(), "{a:?}");
        }
    }

    #[test]
    fn rotation() {
        assert_eq!(ring_tail(&[2, 3, 1, 4]).unwrap(), vec![4, 2, 3]);
        assert_eq!(ring_tail(&[2, 3, 4]), Err(FamilyError::NoUnitClique));
    }

    #[test]
    fn scaling() {
        assert!(scaling_identity_check(&[1, 1, 5], 2).unwrap());
        assert!(scaling_identity_check(&[2, 3], 3).unwrap());
        assert!(scaling_identity_check(&[4, 1, 7, 2], 1).unwrap());
    }

    #[test]
    fn cycles() {
        let phi14 = intpoly::cyclotomic(14).shift_i64(-1);
        assert_eq!(cycle_interesting_factor(8).unwrap(), phi14);
        assert_eq!(cycle_interesting_factor(4).unwrap(), p(&[3, -3, 1]));
        assert_eq!(cycle_interesting_factor(6).unwrap(), intpoly::cyclotomic(10).shift_i64(-1));
    }

    #[test]
    fn cyclotomic_detection() {
        assert!(is_cyclotomic(&intpoly::cyclotomic(1)));
        assert!(is_cyclotomic(&intpoly::cyclotomic(30)));
        assert!(is_cyclotomic(&-intpoly::cyclotomic(5)));
        assert!(!is_cyclotomic(&p(&[-1, -1, 1])));
        assert!(!is_cyclotomic(&p(&[2, 1])));
        assert_eq!(euler_phi(12), 4);
    }

    #[test]
    fn interesting_dispatch() {
        let f = interesting_factor(&"ring:5,1,1,1".parse().unwrap()).unwrap();
        assert_eq!(f, p(&[11, -7, 1]));
        assert!(matches!(interesting_factor(&"ring:2,2,2".parse().unwrap()), Err(FamilyError::NoUnitClique)));
    }
}
