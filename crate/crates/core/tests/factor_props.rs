use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use proptest::prelude::*;

use chromroots::factor::{factor, factor_mod_p, is_irreducible, squarefree_decomposition};
use chromroots::intpoly::{numeric_roots, IntPoly};

fn nonconstant(max_deg: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    (1..=max_deg, proptest::collection::vec(-bound..=bound, max_deg + 1)).prop_map(|(d, mut c)| {
        c.truncate(d + 1);
        if c[d] == 0 {
            c[d] = 1;
        }
        IntPoly::from_i64s(&c)
    })
}

fn primes_up_to(n: u64) -> Vec<u64> {
    let mut sieve = vec![true; n as usize + 1];
    let mut out = Vec::new();
    for p in 2..=n as usize {
        if sieve[p] {
            out.push(p as u64);
            for m in (p * p..=n as usize).step_by(p) {
                sieve[m] = false;
            }
        }
    }
    out
}

/// Independent irreducibility evidence for a primitive `g`: a prime where
/// `g` stays irreducible, else a numeric check that no product of a proper
/// subset of its complex roots, scaled by a divisor of the leading
/// coefficient, rounds to an exact integer divisor.
fn certified_irreducible(g: &IntPoly) -> bool {
    let n = g.deg();
    if n <= 1 {
        return true;
    }
    let lc = g.leading();
    for p in primes_up_to(200) {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let f = factor_mod_p(g, p).unwrap();
        if f.len() == 1 && f[0].1 == 1 && f[0].0.deg() == n {
            return true;
        }
    }
    let roots = numeric_roots(g, 1e-14).unwrap();
    let a = lc.abs().to_i64().unwrap();
    for mask in 1u32..(1 << n) - 1 {
        let k = mask.count_ones() as usize;
        if 2 * k > n {
            continue;
        }
        let mut re = vec![1.0f64];
        let mut im = vec![0.0f64];
        for (i, r) in roots.iter().enumerate() {
            if mask >> i & 1 == 0 {
                continue;
            }
            // multiply by (x - r)
            let mut nre = vec![0.0; re.len() + 1];
            let mut nim = vec![0.0; re.len() + 1];
            for j in 0..re.len() {
                nre[j + 1] += re[j];
                nim[j + 1] += im[j];
                nre[j] -= re[j] * r.re - im[j] * r.im;
                nim[j] -= re[j] * r.im + im[j] * r.re;
            }
            re = nre;
            im = nim;
        }
        for b in (1..=a).filter(|b| a % b == 0) {
            if im.iter().any(|x| (x * b as f64).abs() > 1e-6) {
                continue;
            }
            let cand = IntPoly::from_i64s(&re.iter().map(|x| (x * b as f64).round() as i64).collect::<Vec<_>>());
            if cand.deg() == k && g.divisible_by(&cand) {
                return false;
            }
        }
    }
    true
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn factor_round_trip(parts in proptest::collection::vec(nonconstant(6, 20), 1..=4)) {
        let f = parts.iter().fold(IntPoly::one(), |acc, p| &acc * p);
        let fz = factor(&f);
        prop_assert_eq!(fz.expand(), f.clone());
        let degs: usize = fz.factors.iter().map(|(g, m)| g.deg() * m).sum();
        prop_assert_eq!(degs, f.deg());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn reported_factors_are_irreducible(parts in proptest::collection::vec(nonconstant(5, 12), 1..=3)) {
        let f = parts.iter().fold(IntPoly::one(), |acc, p| &acc * p);
        for (g, _) in factor(&f).factors {
            prop_assert!(g.leading() > BigInt::zero());
            prop_assert_eq!(g.content(), BigInt::from(1));
            prop_assert!(certified_irreducible(&g), "{} is reducible", g);
        }
    }

    #[test]
    fn irreducible_iff_single_factor(f in nonconstant(7, 15)) {
        let fz = factor(&f);
        let single = fz.factors.len() == 1 && fz.factors[0].1 == 1 && fz.factors[0].0.deg() == f.deg();
        prop_assert_eq!(is_irreducible(&f), single);
    }

    #[test]
    fn factor_is_deterministic(f in nonconstant(8, 30)) {
        prop_assert_eq!(factor(&f), factor(&f));
    }

    #[test]
    fn squarefree_parts_recombine(parts in proptest::collection::vec(nonconstant(3, 5), 1..=4)) {
        let f = parts.iter().fold(IntPoly::one(), |acc, p| &acc * p);
        let dec = squarefree_decomposition(&f);
        let back = dec.iter().fold(IntPoly::one(), |acc, (g, m)| &acc * &g.pow(*m as u32));
        let pp = f.primitive_part();
        let pp = if pp.leading() < BigInt::zero() { -pp } else { pp };
        prop_assert_eq!(back, pp);
        for (g, _) in &dec {
            prop_assert!(g.is_squarefree());
        }
    }
}

#[test]
fn swinnerton_dyer_style_cases() {
    // reducible modulo every prime, yet irreducible over Q
    for f in [IntPoly::from_i64s(&[1, 0, 0, 0, 1]), IntPoly::from_i64s(&[1, 0, -10, 0, 1])] {
        assert!(is_irreducible(&f));
        assert!(certified_irreducible(&f));
    }
    let f = IntPoly::from_i64s(&[4, 0, 0, 0, 1]); // (x^2 - 2x + 2)(x^2 + 2x + 2)
    assert!(!is_irreducible(&f));
    assert_eq!(factor(&f).factors.len(), 2);
}
