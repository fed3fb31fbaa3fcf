use num_bigint::BigInt;
use proptest::prelude::*;

use chromroots::intpoly::{cyclotomic, numeric_roots, sturm_count, Bound, DivMode, IntPoly};

fn poly(max_deg: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    proptest::collection::vec(-bound..=bound, 1..=max_deg + 1).prop_map(|c| IntPoly::from_i64s(&c))
}

fn monic(max_deg: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    proptest::collection::vec(-bound..=bound, 1..=max_deg).prop_map(|mut c| {
        c.push(1);
        IntPoly::from_i64s(&c)
    })
}

/// Real roots among numerically computed ones.
fn numeric_real_count(f: &IntPoly) -> usize {
    let roots = numeric_roots(f, 1e-13).unwrap();
    roots.iter().filter(|z| z.im.abs() <= 1e-6 * z.norm().max(1.0)).count()
}

proptest! {
    #[test]
    fn pseudo_division_recombines(f in poly(10, 100), g in poly(10, 100)) {
        prop_assume!(!g.is_zero());
        let (q, r) = f.divrem(&g, DivMode::Pseudo).unwrap();
        let k = (f.degree().unwrap_or(0) + 1).saturating_sub(g.deg()) as u32;
        let lhs = f.scale(&g.leading().pow(k));
        prop_assert_eq!(lhs, &(&q * &g) + &r);
        prop_assert!(r.is_zero() || r.deg() < g.deg());
    }

    #[test]
    fn exact_division_of_products(f in poly(8, 100), g in poly(6, 100)) {
        prop_assume!(!g.is_zero());
        let prod = &f * &g;
        let (q, r) = prod.divrem(&g, DivMode::Exact).unwrap();
        prop_assert!(r.is_zero());
        prop_assert_eq!(q, f);
    }

    #[test]
    fn shift_inverts(f in poly(10, 100), a in -50i64..50) {
        prop_assert_eq!(f.shift_i64(a).shift_i64(-a), f);
    }

    #[test]
    fn standardize_is_idempotent(f in monic(8, 100)) {
        prop_assume!(f.deg() >= 1);
        let s = f.standardize().unwrap();
        let n = BigInt::from(f.deg());
        let c = s.standard.coeff(f.deg() - 1);
        prop_assert!(c >= BigInt::from(0) && c < n);
        prop_assert_eq!(f.shift(&s.shift), s.standard.clone());
        let again = s.standard.standardize().unwrap();
        prop_assert_eq!(again.shift, BigInt::from(0));
        prop_assert_eq!(again.standard, s.standard);
    }

    #[test]
    fn quadratic_discriminant(b in -1000i64..1000, c in -1000i64..1000) {
        let d = IntPoly::from_i64s(&[c, b, 1]).discriminant().unwrap();
        prop_assert_eq!(d, BigInt::from(b * b - 4 * c));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn sturm_agrees_with_numeric_roots(f in poly(8, 20), split in -30i64..30) {
        prop_assume!(f.degree().unwrap_or(0) >= 1 && f.is_squarefree());
        let all = sturm_count(&f, &Bound::NegInfinity, &Bound::PosInfinity, true, true).unwrap();
        prop_assert_eq!(all, numeric_real_count(&f));
        let c = Bound::ratio(split, 7);
        let left = sturm_count(&f, &Bound::NegInfinity, &c, true, false).unwrap();
        let right = sturm_count(&f, &c, &Bound::PosInfinity, true, true).unwrap();
        prop_assert_eq!(left + right, all);
    }
}

#[test]
fn cyclotomic_products() {
    for n in 1..=50u32 {
        let prod = (1..=n).filter(|d| n % d == 0).fold(IntPoly::one(), |acc, d| &acc * &cyclotomic(d));
        assert_eq!(prod, &IntPoly::monomial(1, n as usize) - &IntPoly::one(), "n={n}");
    }
}

#[test]
fn sturm_counts_known_roots() {
    // (x - 1)(x - 2)(x - 3)(x^2 + 1)
    let f = IntPoly::from_i64s(&[-6, 11, -6, 1]);
    let f = &f * &IntPoly::from_i64s(&[1, 0, 1]);
    let count = |lo: Bound, hi: Bound, lo_open, hi_open| sturm_count(&f, &lo, &hi, lo_open, hi_open).unwrap();
    assert_eq!(count(Bound::NegInfinity, Bound::PosInfinity, true, true), 3);
    assert_eq!(count(Bound::int(1), Bound::int(3), true, true), 1);
    assert_eq!(count(Bound::int(1), Bound::int(3), false, false), 3);
    assert_eq!(count(Bound::int(1), Bound::int(3), false, true), 2);
    assert_eq!(count(Bound::ratio(3, 2), Bound::ratio(5, 2), true, true), 1);
}
