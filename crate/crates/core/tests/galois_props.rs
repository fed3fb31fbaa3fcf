use proptest::prelude::*;

use chromroots::families::ring_interesting_factor;
use chromroots::galois::{self, classify, frobenius_samples, is_square, Method};
use chromroots::intpoly::IntPoly;
use chromroots::is_irreducible;

fn p(c: &[i64]) -> IntPoly {
    IntPoly::from_i64s(c)
}

/// Quartics with classically known groups; translates keep the group.
fn known_quartics() -> Vec<(IntPoly, &'static str)> {
    let bases = [
        (p(&[1, 1, 1, 1, 1]), "C4"),   // fifth cyclotomic
        (p(&[2, 0, -4, 0, 1]), "C4"),  // Q(sqrt(2 + sqrt 2))
        (p(&[1, 0, 0, 0, 1]), "V4"),   // eighth cyclotomic
        (p(&[1, 0, -1, 0, 1]), "V4"),  // twelfth cyclotomic
        (p(&[1, 0, -10, 0, 1]), "V4"), // sqrt 2 + sqrt 3
        (p(&[-2, 0, 0, 0, 1]), "D4"),
        (p(&[-3, 0, 0, 0, 1]), "D4"),
        (p(&[12, 8, 0, 0, 1]), "A4"),
        (p(&[-1, -1, 0, 0, 1]), "S4"),
        (p(&[1, 1, 0, 0, 1]), "S4"),
    ];
    bases.iter().flat_map(|(f, g)| (-2..=2).map(move |k| (f.shift_i64(k), *g))).collect()
}

#[test]
fn constructed_quartics_match_known_groups() {
    let cases = known_quartics();
    assert_eq!(cases.len(), 50);
    for (f, expect) in cases {
        let r = classify(&f, 0).unwrap();
        assert_eq!(r.name, expect, "{f}");
        assert_eq!(r.method, Method::ExactResolvent);
        assert!(!r.is_ambiguous());
    }
}

fn known_higher() -> Vec<(IntPoly, &'static str)> {
    vec![
        (ring_interesting_factor(&[4, 4, 9, 9, 9, 25]).unwrap(), "D5"),
        (p(&[1, 3, -3, -4, 1, 1]), "C5"), // 2 cos(2 pi / 11)
        (p(&[-2, 0, 0, 0, 0, 1]), "F5"),
        (p(&[16, 20, 0, 0, 0, 1]), "A5"),
        (p(&[-1, -1, 0, 0, 0, 1]), "S5"),
        (p(&[1, 1, 1, 1, 1, 1, 1]), "C6"), // seventh cyclotomic
        (p(&[-2, 0, 0, 0, 0, 0, 1]), "D6"),
        (p(&[-2, 0, 0, 0, 0, 0, 0, 1]), "F42"),
        (p(&[3, -7, 0, 0, 0, 0, 0, 1]), "PSL(3,2)"),
        (p(&[-1, -1, 0, 0, 0, 0, 0, 1]), "S7"),
    ]
}

#[test]
fn sampled_groups_are_sound() {
    for (f, expect) in known_higher() {
        assert!(is_irreducible(&f), "{f}");
        let r = classify(&f, galois::DEFAULT_SAMPLES).unwrap();
        assert_eq!(r.name, expect, "{f}: {r}");
        assert!(!r.is_ambiguous(), "{f}: {r}");
        // every observed cycle type must occur in the reported group
        let table = galois::table(f.deg()).unwrap().get(&r.name).unwrap();
        for t in frobenius_samples(&f, r.samples) {
            assert!(table.counts.contains_key(&t), "{f}: {t:?} not in {}", r.name);
        }
    }
}

#[test]
fn parity_matches_discriminant() {
    let mut cases: Vec<IntPoly> = known_quartics().into_iter().map(|(f, _)| f).collect();
    cases.extend(known_higher().into_iter().map(|(f, _)| f));
    cases.push(p(&[-1, -3, 0, 1])); // C3
    cases.push(p(&[-2, 0, 0, 1])); // S3
    for f in cases {
        let r = classify(&f, galois::DEFAULT_SAMPLES).unwrap();
        let even = galois::table(f.deg()).unwrap().get(&r.name).unwrap().is_even();
        assert_eq!(even, is_square(&f.discriminant().unwrap()), "{f}: {r}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn random_irreducibles_are_coherent(
        c in proptest::collection::vec(-9i64..=9, 3..=6),
    ) {
        let mut c = c;
        c.push(1);
        let f = p(&c);
        prop_assume!(is_irreducible(&f));
        let budget = 400;
        let r = classify(&f, budget).unwrap();
        prop_assert_eq!(&r, &classify(&f, budget).unwrap());
        if let Some(entry) = galois::table(f.deg()).unwrap().get(&r.name) {
            prop_assert_eq!(entry.is_even(), is_square(&f.discriminant().unwrap()));
            prop_assert_eq!(Some(entry.order), r.order);
            if r.method == Method::FrobeniusMc {
                for t in frobenius_samples(&f, r.samples) {
                    prop_assert!(entry.counts.contains_key(&t));
                }
            }
        } else {
            prop_assert!(r.is_ambiguous());
        }
    }
}
