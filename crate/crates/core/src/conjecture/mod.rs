//! Searching for integer translates `α + n` of an algebraic integer that are
//! chromatic roots.
//!
//! Matching is exact: two monic irreducibles have integer-translate roots
//! iff their standard forms coincide, and the translate is the difference
//! of the standardizing shifts.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::factor;
use crate::families::{self, FamilyError};
use crate::galois::is_square;
use crate::graphs::FamilySpec;
use crate::intpoly::{sturm_count, Bound, IntPoly, PolyError, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConjectureError {
    #[error("target polynomial must be monic")]
    NotMonic,
    #[error("target polynomial must be irreducible of degree at least 1")]
    NotIrreducible,
    #[error("discriminant {0} is a square or not 0 or 1 mod 4")]
    BadDiscriminant(BigInt),
    #[error("target must be quadratic")]
    NotQuadratic,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// An algebraic integer, given by its minimal polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraicTarget {
    minpoly: IntPoly,
}

impl AlgebraicTarget {
    pub fn new(minpoly: IntPoly) -> Result<Self, ConjectureError> {
        if minpoly.degree().unwrap_or(0) == 0 || !factor::is_irreducible(&minpoly) {
            return Err(ConjectureError::NotIrreducible);
        }
        if !minpoly.is_monic() {
            return Err(ConjectureError::NotMonic);
        }
        Ok(AlgebraicTarget { minpoly })
    }

    /// The standard quadratic of discriminant `d`: `x^2 - d/4` or
    /// `x^2 + x - (d-1)/4`.
    pub fn quadratic_with_discriminant(d: &BigInt) -> Result<Self, ConjectureError> {
        check_discriminant(d)?;
        let four = BigInt::from(4);
        let f = if d.mod_floor(&four).is_zero() {
            IntPoly::new(vec![-(d / &four), BigInt::zero(), BigInt::from(1)])
        } else {
            IntPoly::new(vec![-((d - 1u32) / &four), BigInt::from(1), BigInt::from(1)])
        };
        AlgebraicTarget::new(f)
    }

    pub fn minpoly(&self) -> &IntPoly {
        &self.minpoly
    }

    pub fn degree(&self) -> usize {
        self.minpoly.deg()
    }

    /// Minimal polynomial of `α + t`.
    pub fn translate(&self, t: i64) -> IntPoly {
        self.minpoly.shift_i64(-t)
    }
}

fn check_discriminant(d: &BigInt) -> Result<(), ConjectureError> {
    let r = d.mod_floor(&BigInt::from(4));
    if is_square(d) || !(r.is_zero() || r == BigInt::from(1)) {
        return Err(ConjectureError::BadDiscriminant(d.clone()));
    }
    Ok(())
}

/// A family instance one of whose chromatic roots is `α + shift`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationResult {
    pub family: FamilySpec,
    #[serde(with = "crate::intpoly::text_serde")]
    pub factor: IntPoly,
    pub shift: u64,
    #[serde(rename = "vertices")]
    pub vertex_count: usize,
}

impl RealizationResult {
    /// Independent check: the minimal polynomial of `α + shift` divides the
    /// family's closed-form chromatic polynomial.
    pub fn verify(&self, target: &AlgebraicTarget) -> Result<bool, ConjectureError> {
        let full = families::full_chromatic(&self.family)?;
        Ok(full.divisible_by(&target.translate(self.shift as i64)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Exclusion {
    /// Shifts `t` for which some conjugate of `α + t` is in a root-free
    /// region, so `α + t` is not a chromatic root.
    pub excluded: Vec<u64>,
    /// Least shift in range not excluded. Not excluded does not mean
    /// realized: the test is only a necessary condition.
    pub min_candidate: Option<u64>,
}

/// Real chromatic roots avoid `(-∞, 0)`, `(0, 1)` and `(1, 32/27]`. For
/// each `t` in `0..=max_shift`, exclude `t` when a conjugate of `α + t`
/// falls there. Conjugates of an irrational algebraic integer are never 0
/// or 1, so for degree at least 2 this is a Sturm count on `(-∞, 32/27]`;
/// integer targets are excluded exactly when negative.
pub fn exclusion_min_shift(target: &AlgebraicTarget, max_shift: u64) -> Result<Exclusion, ConjectureError> {
    let mut excluded = Vec::new();
    let mut min_candidate = None;
    let hi = Bound::At(Rational::new(BigInt::from(32), BigInt::from(27)));
    for t in 0..=max_shift {
        let f = target.translate(t as i64);
        let bad = if f.deg() == 1 {
            // x - r with r = α + t
            (-f.coeff(0)).is_negative()
        } else {
            sturm_count(&f.squarefree_part(), &Bound::NegInfinity, &hi, true, false)? > 0
        };
        if bad {
            excluded.push(t);
        } else if min_candidate.is_none() {
            min_candidate = Some(t);
        }
    }
    Ok(Exclusion { excluded, min_candidate })
}

/// The parameters `(a, b)`, `a <= b`, of `R(1, 1, a, b)` built from the least
/// admissible `m` at or after `m_start`.
fn quadratic_parameters(d: &BigInt, m_start: u64) -> (BigInt, BigInt, u64) {
    let four = BigInt::from(4);
    let mut m = m_start.max(1);
    loop {
        let mb = BigInt::from(m);
        let (l, a, b);
        if d.mod_floor(&four).is_zero() {
            l = &mb * &mb + &mb - d / &four;
            a = &l + &mb + 1;
            b = &l - &mb;
        } else {
            l = &mb * &mb - (d - 1u32) / &four;
            a = &l + &mb;
            b = &l - &mb;
        }
        if l > mb {
            return if a <= b { (a, b, m) } else { (b, a, m) };
        }
        m += 1;
    }
}

/// Build a ring `R(1, 1, a, b)` whose quadratic factor has discriminant
/// exactly `disc(target)`, and report the translate.
///
/// `m` starts at the least value making `a, b >= 1` and increases until the
/// translate is non-negative.
pub fn realize_quadratic(target: &AlgebraicTarget) -> Result<RealizationResult, ConjectureError> {
    if target.degree() != 2 {
        return Err(ConjectureError::NotQuadratic);
    }
    let d = target.minpoly().discriminant()?;
    check_discriminant(&d)?;
    let target_shift = target.minpoly().standardize()?.shift;
    let mut m = 1;
    loop {
        let (a, b, used) = quadratic_parameters(&d, m);
        let (a, b) = (a.to_u64().expect("small"), b.to_u64().expect("small"));
        let factor = families::ring_quadratic(a, b);
        let shift = factor.standardize()?.shift - &target_shift;
        if !shift.is_negative() {
            return Ok(RealizationResult {
                family: FamilySpec::Ring(vec![1, 1, a as usize, b as usize]),
                factor,
                shift: shift.to_u64().expect("shift fits in u64"),
                vertex_count: 2 + (a + b) as usize,
            });
        }
        m = used + 1;
    }
}

pub fn realize_discriminant(d: &BigInt) -> Result<RealizationResult, ConjectureError> {
    realize_quadratic(&AlgebraicTarget::quadratic_with_discriminant(d)?)
}

/// Which families [`search_alpha_n`] enumerates.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchBounds {
    /// Rings `R(1, a_1, ..., a_{D+1})` with entries up to this bound.
    pub ring_max_entry: Option<usize>,
    /// Bicliques with `D` sets over a clique of at most this size.
    pub biclique_max_n: Option<usize>,
    /// Cycles of length `3..=k`.
    pub cycles_max_k: Option<usize>,
}

/// Ring tails of length `len` with entries in `1..=max`, one per reversal
/// class.
/// Whether `R(1, tail)` is the least of its rotations and reflections, so
/// each ring is enumerated once however many unit cliques it has.
fn is_canonical_ring(tail: &[usize]) -> bool {
    let mut ring = vec![1];
    ring.extend_from_slice(tail);
    let k = ring.len();
    (0..k).all(|r| {
        let rot = (0..k).map(|i| ring[(i + r) % k]);
        let refl = (0..k).map(|i| ring[(r + k - i) % k]);
        ring.iter().copied().le(rot) && ring.iter().copied().le(refl)
    })
}

fn ring_tails(len: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![1; len];
    loop {
        if is_canonical_ring(&cur) {
            out.push(cur.clone());
        }
        let mut i = len;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < max {
                cur[i] += 1;
                for x in &mut cur[i + 1..] {
                    *x = 1;
                }
                break;
            }
        }
    }
}

/// Multisets of `m` nonempty subsets of `{0..n-1}` whose union is
/// everything and whose common intersection is empty.
fn biclique_families(n: usize, m: usize) -> Vec<Vec<Vec<usize>>> {
    let full: u32 = (1 << n) - 1;
    let mut out = Vec::new();
    let mut idx = vec![1u32; m];
    if m == 0 || n == 0 {
        return out;
    }
    loop {
        let union = idx.iter().fold(0, |a, &s| a | s);
        let inter = idx.iter().fold(full, |a, &s| a & s);
        if union == full && inter == 0 {
            out.push(idx.iter().map(|&s| (0..n).filter(|&i| s >> i & 1 == 1).collect()).collect());
        }
        // next non-decreasing sequence
        let mut i = m;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] < full {
                idx[i] += 1;
                let v = idx[i];
                for x in &mut idx[i + 1..] {
                    *x = v;
                }
                break;
            }
        }
    }
}

fn candidates(degree: usize, bounds: &SearchBounds) -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    if let Some(e) = bounds.ring_max_entry {
        for tail in ring_tails(degree + 1, e) {
            let mut sizes = vec![1];
            sizes.extend(tail);
            specs.push(FamilySpec::Ring(sizes));
        }
    }
    if let Some(nmax) = bounds.biclique_max_n {
        for n in 1..=nmax.min(16) {
            for sets in biclique_families(n, degree) {
                specs.push(FamilySpec::Biclique { n, sets });
            }
        }
    }
    if let Some(k) = bounds.cycles_max_k {
        for k in 3..=k {
            specs.push(FamilySpec::Ring(vec![1; k]));
        }
    }
    specs
}

/// Enumerate family instances within `bounds`, and report every
/// irreducible factor of an interesting factor whose roots are `α + n`
/// with `0 <= n <= max_shift`. Sorted by shift, then vertex count.
/// An empty result means only "not found within these bounds".
pub fn search_alpha_n(
    target: &AlgebraicTarget,
    bounds: &SearchBounds,
    max_shift: u64,
) -> Result<Vec<RealizationResult>, ConjectureError> {
    let std_target = target.minpoly().standardize()?;
    let deg = target.degree();
    let specs = candidates(deg, bounds);
    let found: Result<Vec<Vec<RealizationResult>>, ConjectureError> = specs
        .par_iter()
        .map(|spec| {
            let mut hits = Vec::new();
            let h = families::interesting_factor(spec)?;
            if h.degree().unwrap_or(0) < deg {
                return Ok(hits);
            }
            for (g, _) in factor::factor(&h).factors {
                if g.deg() != deg || !g.is_monic() {
                    continue;
                }
                let s = g.standardize()?;
                if s.standard != std_target.standard {
                    continue;
                }
                let shift = &s.shift - &std_target.shift;
                if shift.is_negative() || shift > BigInt::from(max_shift) {
                    continue;
                }
                hits.push(RealizationResult {
                    family: spec.clone(),
                    factor: g,
                    shift: shift.to_u64().expect("bounded by max_shift"),
                    vertex_count: spec.vertex_count(),
                });
            }
            Ok(hits)
        })
        .collect();
    let mut all: Vec<RealizationResult> = found?.into_iter().flatten().collect();
    all.sort_by(|a, b| {
        (a.shift, a.vertex_count)
            .cmp(&(b.shift, b.vertex_count))
            .then_with(|| a.family.to_string().cmp(&b.family.to_string()))
    });
    all.dedup();
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn target(c: &[i64]) -> AlgebraicTarget {
        AlgebraicTarget::new(IntPoly::from_i64s(c)).unwrap()
    }

    #[test]
    fn exclusion_examples() {
        let e = exclusion_min_shift(&target(&[-1, 1, 1]), 5).unwrap();
        assert_eq!(e.excluded, vec![0, 1, 2]);
        assert_eq!(e.min_candidate, Some(3));
        let e = exclusion_min_shift(&target(&[1, 0, 1]), 2).unwrap();
        assert!(e.excluded.is_empty());
        assert_eq!(e.min_candidate, Some(0));
        let e = exclusion_min_shift(&target(&[-3, 1]), 0).unwrap();
        assert_eq!(e.min_candidate, Some(0));
        let e = exclusion_min_shift(&target(&[3, 1]), 5).unwrap();
        assert_eq!(e.excluded, vec![0, 1, 2]);
        assert_eq!(e.min_candidate, Some(3));
    }

    #[test]
    fn quadratic_constructions() {
        let r = realize_discriminant(&BigInt::from(5)).unwrap();
        assert_eq!(r.family, FamilySpec::Ring(vec![1, 1, 1, 5]));
        assert_eq!(r.factor, IntPoly::from_i64s(&[11, -7, 1]));
        assert_eq!((r.shift, r.vertex_count), (4, 8));
        let r = realize_discriminant(&BigInt::from(8)).unwrap();
        assert_eq!(r.family, FamilySpec::Ring(vec![1, 1, 2, 7]));
        assert_eq!(r.factor, IntPoly::from_i64s(&[23, -10, 1]));
        let r = realize_discriminant(&BigInt::from(-4)).unwrap();
        assert_eq!(r.factor, IntPoly::from_i64s(&[17, -8, 1]));
        assert!(matches!(realize_discriminant(&BigInt::from(9)), Err(ConjectureError::BadDiscriminant(_))));
        assert!(matches!(realize_discriminant(&BigInt::from(7)), Err(ConjectureError::BadDiscriminant(_))));
    }

    #[test]
    fn far_translates_still_realized() {
        // α + 100 for the golden ratio α
        let t = AlgebraicTarget::new(IntPoly::from_i64s(&[-1, 1, 1]).shift_i64(-100)).unwrap();
        let r = realize_quadratic(&t).unwrap();
        assert!(r.verify(&t).unwrap());
        assert_eq!(r.factor.discriminant().unwrap(), BigInt::from(5));
    }

    #[test]
    fn golden_ratio_search() {
        let t = target(&[-1, 1, 1]);
        let bounds = SearchBounds { ring_max_entry: Some(8), ..Default::default() };
        let hits = search_alpha_n(&t, &bounds, 10).unwrap();
        let first = &hits[0];
        assert_eq!(first.family.to_string(), "ring:1,1,1,5");
        assert_eq!((first.shift, first.vertex_count), (4, 8));
        assert!(hits.iter().all(|h| h.shift > 2 && h.verify(&t).unwrap()));
    }

    #[test]
    fn json_shape() {
        let r = realize_discriminant(&BigInt::from(5)).unwrap();
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"family":"ring:1,1,1,5","factor":"x^2 - 7x + 11","shift":4,"vertices":8}"#
        );
    }

    #[test]
    fn enumerators() {
        assert_eq!(ring_tails(2, 2), vec![vec![1, 1], vec![1, 2], vec![2, 2]]);
        // {0},{1} and {0,1},{0}? intersection nonempty -> excluded
        let fams = biclique_families(2, 2);
        assert!(fams.contains(&vec![vec![0], vec![1]]));
        assert!(fams.iter().all(|f| f.len() == 2));
    }
}
