//! Polynomials over a prime field `GF(p)` with `p < 2^31`.
//!
//! Coefficients are `u64` residues, low to high, with no trailing zeros.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::intpoly::IntPoly;

pub type Fp = Vec<u64>;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Primes in increasing order starting from `from`.
pub fn primes_from(from: u64) -> impl Iterator<Item = u64> {
    (from.max(2)..).filter(|&n| is_prime(n))
}

fn trim(mut a: Fp) -> Fp {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn reduce(f: &IntPoly, p: u64) -> Fp {
    let pb = BigInt::from(p);
    trim(f.coeffs().iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect())
}

pub fn lift(a: &Fp) -> IntPoly {
    IntPoly::new(a.iter().map(|&c| BigInt::from(c)).collect())
}

pub fn inv(a: u64, p: u64) -> u64 {
    pow_u(a, p - 2, p)
}

fn pow_u(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

pub fn deg(a: &Fp) -> usize {
    a.len().saturating_sub(1)
}

pub fn add(a: &Fp, b: &Fp, p: u64) -> Fp {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p).collect())
}

pub fn sub(a: &Fp, b: &Fp, p: u64) -> Fp {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p).collect())
}

pub fn mul(a: &Fp, b: &Fp, p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut c = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            c[i + j] = (c[i + j] + x * y) % p;
        }
    }
    trim(c)
}

pub fn scale(a: &Fp, s: u64, p: u64) -> Fp {
    trim(a.iter().map(|&x| x * s % p).collect())
}

pub fn monic(a: &Fp, p: u64) -> Fp {
    match a.last() {
        None => Vec::new(),
        Some(&lc) => scale(a, inv(lc, p), p),
    }
}

pub fn divrem(a: &Fp, b: &Fp, p: u64) -> (Fp, Fp) {
    assert!(!b.is_empty(), "division by zero polynomial mod p");
    if a.len() < b.len() {
        return (Vec::new(), a.clone());
    }
    let m = b.len() - 1;
    let lc_inv = inv(b[m], p);
    let mut r = a.clone();
    let mut q = vec![0u64; a.len() - m];
    for k in (0..q.len()).rev() {
        let t = r[k + m] * lc_inv % p;
        q[k] = t;
        if t == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            r[k + j] = (r[k + j] + p - t * bj % p) % p;
        }
    }
    r.truncate(m);
    (trim(q), trim(r))
}

pub fn rem(a: &Fp, b: &Fp, p: u64) -> Fp {
    divrem(a, b, p).1
}

pub fn gcd(a: &Fp, b: &Fp, p: u64) -> Fp {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

/// Extended gcd: returns `(g, s, t)` with `s a + t b = g`, `g` monic.
pub fn xgcd(a: &Fp, b: &Fp, p: u64) -> (Fp, Fp, Fp) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1): (Fp, Fp) = (vec![1], Vec::new());
    let (mut t0, mut t1): (Fp, Fp) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, p);
        let s2 = sub(&s0, &mul(&q, &s1, p), p);
        let t2 = sub(&t0, &mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let li = inv(*r0.last().unwrap_or(&1), p);
    (scale(&r0, li, p), scale(&s0, li, p), scale(&t0, li, p))
}

pub fn derivative(a: &Fp, p: u64) -> Fp {
    trim(a.iter().enumerate().skip(1).map(|(i, &c)| (i as u64 % p) * c % p).collect())
}

pub fn mulmod(a: &Fp, b: &Fp, m: &Fp, p: u64) -> Fp {
    rem(&mul(a, b, p), m, p)
}

/// `a^e mod m` for a big exponent.
pub fn powmod(a: &Fp, e: &BigUint, m: &Fp, p: u64) -> Fp {
    let mut acc: Fp = rem(&vec![1], m, p);
    let base = rem(a, m, p);
    for i in (0..e.bits()).rev() {
        acc = mulmod(&acc, &acc, m, p);
        if e.bit(i) {
            acc = mulmod(&acc, &base, m, p);
        }
    }
    acc
}

/// Squarefree decomposition of a monic polynomial over `GF(p)`.
pub fn squarefree(f: &Fp, p: u64) -> Vec<(Fp, usize)> {
    let mut out = Vec::new();
    if deg(f) == 0 {
        return out;
    }
    let f = monic(f, p);
    let mut c = gcd(&f, &derivative(&f, p), p);
    let mut w = divrem(&f, &c, p).0;
    let mut i = 1;
    while deg(&w) > 0 {
        let y = gcd(&w, &c, p);
        let fac = divrem(&w, &y, p).0;
        if deg(&fac) > 0 {
            out.push((fac, i));
        }
        w = y;
        c = divrem(&c, &w, p).0;
        i += 1;
    }
    if deg(&c) > 0 {
        // c is a p-th power; in a prime field a^(1/p) = a
        let root: Fp = c.iter().step_by(p as usize).copied().collect();
        for (g, m) in squarefree(&root, p) {
            out.push((g, m * p as usize));
        }
    }
    out
}

/// Distinct-degree factorization of a squarefree monic polynomial:
/// pairs `(product of all irreducible factors of degree d, d)`.
pub fn distinct_degree(f: &Fp, p: u64) -> Vec<(Fp, usize)> {
    let mut out = Vec::new();
    let mut f = monic(f, p);
    let x: Fp = vec![0, 1];
    let pe = BigUint::from(p);
    let mut h = rem(&x, &f, p);
    let mut d = 0;
    while deg(&f) >= 2 * (d + 1) {
        d += 1;
        h = powmod(&h, &pe, &f, p);
        let g = gcd(&sub(&h, &x, p), &f, p);
        if deg(&g) > 0 {
            f = divrem(&f, &g, p).0;
            h = rem(&h, &f, p);
            out.push((g, d));
        }
    }
    if deg(&f) > 0 {
        let df = deg(&f);
        out.push((f, df));
    }
    out
}

/// Degree pattern of a squarefree polynomial mod p (sorted descending).
pub fn degree_pattern(f: &Fp, p: u64) -> Vec<usize> {
    let mut pat = Vec::new();
    for (g, d) in distinct_degree(f, p) {
        for _ in 0..deg(&g) / d {
            pat.push(d);
        }
    }
    pat.sort_unstable_by(|a, b| b.cmp(a));
    pat
}

/// Split a product of distinct monic irreducibles of degree `d`.
pub fn equal_degree(f: &Fp, d: usize, p: u64, rng: &mut ChaCha8Rng) -> Vec<Fp> {
    let n = deg(f);
    if n == d {
        return vec![monic(f, p)];
    }
    loop {
        let a: Fp = trim((0..n).map(|_| rng.gen_range(0..p)).collect());
        if deg(&a) == 0 {
            continue;
        }
        let b = if p == 2 {
            // trace map a + a^2 + ... + a^(2^(d-1))
            let mut t = a.clone();
            let mut acc = a.clone();
            for _ in 1..d {
                t = mulmod(&t, &t, f, p);
                acc = add(&acc, &t, p);
            }
            acc
        } else {
            let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
            sub(&powmod(&a, &e, f, p), &vec![1], p)
        };
        let g = gcd(&b, f, p);
        if deg(&g) > 0 && deg(&g) < n {
            let h = divrem(f, &g, p).0;
            let mut out = equal_degree(&g, d, p, rng);
            out.extend(equal_degree(&h, d, p, rng));
            return out;
        }
    }
}

/// Complete factorization of a squarefree monic polynomial into monic
/// irreducibles, sorted by degree then coefficients. Deterministic.
pub fn factor_squarefree(f: &Fp, p: u64) -> Vec<Fp> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ p);
    let mut out = Vec::new();
    for (g, d) in distinct_degree(f, p) {
        out.extend(equal_degree(&g, d, p, &mut rng));
    }
    sort_fp(&mut out);
    out
}

pub fn sort_fp(v: &mut [Fp]) {
    v.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.iter().rev().cmp(b.iter().rev())));
}

pub fn is_zero(a: &Fp) -> bool {
    a.is_empty() || a.iter().all(|c| c.is_zero())
}
