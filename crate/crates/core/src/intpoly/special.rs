use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntPoly;

/// The `n`-th cyclotomic polynomial: `x^n - 1` divided by `Φ_d` for every
/// proper divisor `d` of `n`.
pub fn cyclotomic(n: u32) -> IntPoly {
    assert!(n >= 1, "cyclotomic index must be positive");
    let mut p = &IntPoly::monomial(1, n as usize) - &IntPoly::one();
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        p = p.exact_div(&cyclotomic(d)).expect("cyclotomic factors divide x^n - 1");
    }
    p
}

/// `q (q-1) ... (q-k+1)`; `k = 0` gives 1.
pub fn falling_factorial(k: u32) -> IntPoly {
    (0..k).fold(IntPoly::one(), |acc, i| &acc * &IntPoly::linear_root(i))
}

/// Stirling number of the second kind.
pub fn stirling2(m: u32, k: u32) -> BigInt {
    if k > m {
        return BigInt::zero();
    }
    // row[j] = S(i, j)
    let mut row = vec![BigInt::zero(); k as usize + 1];
    row[0] = BigInt::one();
    for _ in 1..=m {
        for j in (1..=k as usize).rev() {
            row[j] = BigInt::from(j) * &row[j] + &row[j - 1];
        }
        row[0] = BigInt::zero();
    }
    row[k as usize].clone()
}
