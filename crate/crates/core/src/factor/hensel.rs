//! Quadratic Hensel lifting of a modular factorization to `p^(2^k)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::modp::{self, Fp};
use crate::intpoly::IntPoly;

/// Reduce every coefficient into `[0, m)`.
pub(crate) fn reduce(f: &IntPoly, m: &BigInt) -> IntPoly {
    IntPoly::new(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

/// Symmetric representative in `(-m/2, m/2]`.
pub(crate) fn symmetric(f: &IntPoly, m: &BigInt) -> IntPoly {
    let half = m >> 1;
    IntPoly::new(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn mulmod(a: &IntPoly, b: &IntPoly, m: &BigInt) -> IntPoly {
    reduce(&(a * b), m)
}

/// Division by a monic `b` modulo `m`.
fn divrem_monic(a: &IntPoly, b: &IntPoly, m: &BigInt) -> (IntPoly, IntPoly) {
    debug_assert!(b.is_monic());
    let db = b.deg();
    if a.is_zero() || a.deg() < db {
        return (IntPoly::zero(), reduce(a, m));
    }
    let mut r: Vec<BigInt> = a.coeffs().to_vec();
    let mut q = vec![BigInt::zero(); a.deg() - db + 1];
    for k in (0..q.len()).rev() {
        let t = r[k + db].mod_floor(m);
        if !t.is_zero() {
            for (j, bj) in b.coeffs().iter().enumerate() {
                r[k + j] -= &t * bj;
            }
        }
        q[k] = t;
    }
    r.truncate(db);
    (reduce(&IntPoly::new(q), m), reduce(&IntPoly::new(r), m))
}

/// One quadratic step: from `f = g h`, `s g + t h = 1` (mod `m`) to the
/// same relations mod `m^2`. `h` must be monic.
fn step(f: &IntPoly, g: &IntPoly, h: &IntPoly, s: &IntPoly, t: &IntPoly, m2: &BigInt) -> [IntPoly; 4] {
    let e = reduce(&(f - &(g * h)), m2);
    let (q, r) = divrem_monic(&mulmod(s, &e, m2), h, m2);
    let g1 = reduce(&(&(g + &(t * &e)) + &(&q * g)), m2);
    let h1 = reduce(&(h + &r), m2);
    let b = reduce(&(&(&(s * &g1) + &(t * &h1)) - &IntPoly::one()), m2);
    let (c, d) = divrem_monic(&mulmod(s, &b, m2), &h1, m2);
    let s1 = reduce(&(s - &d), m2);
    let t1 = reduce(&(&(t - &(t * &b)) - &(&c * &g1)), m2);
    [g1, h1, s1, t1]
}

/// Lift `f ≡ lc(f) * ∏ factors (mod p)` to modulus `p^(2^k) > bound`.
/// `factors` are monic and pairwise coprime mod p. Returns the modulus and
/// the lifted monic factors in the same order.
pub(crate) fn lift(f: &IntPoly, factors: &[Fp], p: u64, bound: &BigInt) -> (BigInt, Vec<IntPoly>) {
    let pb = BigInt::from(p);
    let mut m = pb.clone();
    let mut steps = 0u32;
    while &m <= bound {
        m = &m * &m;
        steps += 1;
    }
    if factors.len() == 1 {
        let lc = f.leading();
        let inv = lc.modinv(&m).expect("leading coefficient is a unit");
        return (m.clone(), vec![reduce(&f.scale(&inv), &m)]);
    }
    let mut out = Vec::with_capacity(factors.len());
    let mut current = f.clone();
    for (i, gfac) in factors.iter().enumerate() {
        if i + 1 == factors.len() {
            // current is monic (i > 0) and already lifted
            out.push(reduce(&current, &m));
            break;
        }
        // current ≡ lc * gfac * rest with rest monic
        let rest_fp = factors[i + 1..].iter().fold(vec![1u64], |acc, x| modp::mul(&acc, x, p));
        let lc = current.leading();
        let lc_p = lc.mod_floor(&pb);
        let g0_fp = modp::scale(gfac, num_traits::ToPrimitive::to_u64(&lc_p).unwrap(), p);
        let (_, s_fp, t_fp) = modp::xgcd(&g0_fp, &rest_fp, p);
        let mut g = modp::lift(&g0_fp);
        let mut h = modp::lift(&rest_fp);
        let mut s = modp::lift(&s_fp);
        let mut t = modp::lift(&t_fp);
        let mut mm = pb.clone();
        for _ in 0..steps {
            mm = &mm * &mm;
            [g, h, s, t] = step(&current, &g, &h, &s, &t, &mm);
        }
        // g = lc * (monic factor); normalise
        let inv = lc.modinv(&m).expect("leading coefficient is a unit");
        out.push(reduce(&g.scale(&inv), &m));
        current = h;
    }
    (m, out)
}
