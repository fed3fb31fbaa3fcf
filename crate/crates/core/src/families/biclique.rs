use num_bigint::BigInt;
use num_traits::One;

use super::FamilyError;
use crate::intpoly::{falling_factorial, IntPoly};

pub const MAX_BICLIQUE_SETS: usize = 10;

/// A partition of `{0, ..., m-1}` into nonempty blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetPartition {
    pub blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    fn from_growth(rgs: &[usize]) -> Self {
        let k = rgs.iter().max().map_or(0, |&b| b + 1);
        let mut blocks = vec![Vec::new(); k];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i);
        }
        SetPartition { blocks }
    }

    /// `μ(0̂, π) = ∏_B (-1)^{|B|-1} (|B|-1)!` in the partition lattice.
    pub fn mobius(&self) -> BigInt {
        let mut mu = BigInt::one();
        for b in &self.blocks {
            let k = b.len() - 1;
            for j in 1..=k {
                mu *= j;
            }
            if k % 2 == 1 {
                mu = -mu;
            }
        }
        mu
    }
}

/// All set partitions of an `m`-set, via restricted growth strings in
/// lexicographic order.
pub fn set_partitions(m: usize) -> impl Iterator<Item = SetPartition> {
    let mut rgs: Option<Vec<usize>> = Some(vec![0; m]);
    std::iter::from_fn(move || {
        let cur = rgs.take()?;
        let out = SetPartition::from_growth(&cur);
        // successor: increment the last position that can grow
        let mut next = cur;
        let mut i = m;
        while i > 1 {
            i -= 1;
            let limit = next[..i].iter().max().copied().unwrap_or(0) + 1;
            if next[i] < limit {
                next[i] += 1;
                for x in &mut next[i + 1..] {
                    *x = 0;
                }
                rgs = Some(next);
                break;
            }
        }
        Some(out)
    })
}

/// Chromatic polynomial of the biclique with clique `C = {0..n-1}` and one
/// vertex `w_i` per set `F_i ⊆ C`, all `w_i` pairwise adjacent.
///
/// Returns `(full, interesting)` where
/// `interesting = Σ_π μ(0̂,π) ∏_{B ∈ π} (q - |∪_{i∈B} F_i|)` and
/// `full = (q)_n · interesting`, both in `q`.
pub fn biclique_polynomial(n: usize, sets: &[Vec<usize>]) -> Result<(IntPoly, IntPoly), FamilyError> {
    let m = sets.len();
    if m > MAX_BICLIQUE_SETS {
        return Err(FamilyError::TooManySets(m));
    }
    if sets.iter().flatten().any(|&c| c >= n) {
        return Err(FamilyError::InvalidParameters(format!("set element not below n = {n}")));
    }
    let wide = n > 128;
    let masks: Vec<u128> =
        if wide { Vec::new() } else { sets.iter().map(|s| s.iter().fold(0u128, |acc, &c| acc | 1 << c)).collect() };
    let mut interesting = IntPoly::zero();
    for pi in set_partitions(m) {
        let mut term = IntPoly::constant(pi.mobius());
        for b in &pi.blocks {
            let size = if wide {
                let mut u: Vec<usize> = b.iter().flat_map(|&i| sets[i].iter().copied()).collect();
                u.sort_unstable();
                u.dedup();
                u.len()
            } else {
                b.iter().fold(0u128, |acc, &i| acc | masks[i]).count_ones() as usize
            };
            term = &term * &IntPoly::linear_root(size);
        }
        interesting = &interesting + &term;
    }
    let full = &falling_factorial(n as u32) * &interesting;
    Ok((full, interesting))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::ring_quadratic;
    use crate::graphs::{chromatic_polynomial, FamilySpec};
    use num_traits::Zero;

    fn bell(m: usize) -> BigInt {
        let mut row = vec![BigInt::one()];
        for _ in 0..m {
            let mut next = vec![row.last().cloned().unwrap_or_else(BigInt::zero)];
            for x in &row {
                let v = next.last().unwrap() + x;
                next.push(v);
            }
            row = next;
        }
        row[0].clone()
    }

    #[test]
    fn partition_counts_are_bell_numbers() {
        for m in 0..=8 {
            assert_eq!(BigInt::from(set_partitions(m).count()), bell(m), "m = {m}");
        }
        assert_eq!(bell(10), BigInt::from(115975));
    }

    #[test]
    fn mobius_sums_vanish() {
        // Σ_π μ(0̂, π) = 0 for m >= 2
        for m in 2..=7 {
            let s: BigInt = set_partitions(m).map(|p| p.mobius()).sum();
            assert!(s.is_zero());
        }
    }

    #[test]
    fn two_disjoint_sets_give_ring_quadratic() {
        for (a, b) in [(1, 1), (2, 3), (4, 1)] {
            let sets = vec![(0..a).collect(), (a..a + b).collect()];
            let (_, h) = biclique_polynomial(a + b, &sets).unwrap();
            assert_eq!(h, ring_quadratic(a as u64, b as u64));
        }
    }

    #[test]
    fn dominating_vertex() {
        let (full, _) = biclique_polynomial(4, &[vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(full, falling_factorial(5));
    }

    #[test]
    fn singletons_match_engine() {
        let sets = vec![vec![0], vec![1], vec![2]];
        let (full, _) = biclique_polynomial(3, &sets).unwrap();
        let g = FamilySpec::Biclique { n: 3, sets }.build().unwrap();
        assert_eq!(full, chromatic_polynomial(&g).unwrap());
    }

    #[test]
    fn too_many_sets() {
        let sets = vec![vec![0]; 11];
        assert_eq!(biclique_polynomial(1, &sets), Err(FamilyError::TooManySets(11)));
    }
}
