//! Helpers shared by integration test targets.
#![allow(dead_code)]

use chromroots::graphs::FamilySpec;

/// Closed-form/engine comparison instances, all with at most 14 vertices.
/// Rings contain a clique of size 1 (the closed form is written relative
/// to it); up to rotation and reflection any such ring is one of these.
pub fn engine_grid() -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for k in 3..=5usize {
        let tails = (0..3usize.pow(k as u32 - 1)).map(|mut code| {
            let mut t = vec![1usize];
            for _ in 1..k {
                t.push(code % 3 + 1);
                code /= 3;
            }
            t
        });
        out.extend(tails.map(FamilySpec::Ring));
    }
    for n in 1..=5usize {
        let subsets: Vec<Vec<usize>> = (0..1u32 << n).map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect()).collect();
        for m in 1..=3u32 {
            let total = subsets.len().pow(m);
            for mut code in 0..total {
                let mut sets = Vec::new();
                for _ in 0..m {
                    sets.push(subsets[code % subsets.len()].clone());
                    code /= subsets.len();
                }
                out.push(FamilySpec::Biclique { n, sets });
            }
        }
    }
    for m in 1..=3 {
        for n in 1..=4 {
            out.push(FamilySpec::CompleteBipartite { m, n });
        }
    }
    for s in 2..=4 {
        for p in 2..=4 {
            out.push(FamilySpec::Theta { s, p });
        }
    }
    out.push(FamilySpec::GenTheta { s: 2, n: 2 });
    out.push(FamilySpec::GenTheta { s: 2, n: 3 });
    out.retain(|s| s.vertex_count() <= 14);
    out
}

pub fn mobius(mut n: u64) -> i64 {
    let mut r = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            r = -r;
        }
        p += 1;
    }
    if n > 1 {
        r = -r;
    }
    r
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Non-decreasing `n`-tuples over `1..=l` with gcd 1:
/// `Σ_d μ(d) C(⌊l/d⌋ + n - 1, n)`.
pub fn tuple_count(n: u64, l: u64) -> u128 {
    (1..=l).map(|d| mobius(d) as i128 * binomial(l / d + n - 1, n) as i128).sum::<i128>() as u128
}
