//! Regenerate every built-in cycle-type table by closing generators under
//! composition, and compare against the tables the classifier uses.

use std::collections::{BTreeMap, HashSet};

use chromroots::galois::{self, Partition};

type Perm = Vec<usize>;

/// `"(1,2,3)(4,5)"`, 1-based.
fn parse(n: usize, s: &str) -> Perm {
    let mut p: Perm = (0..n).collect();
    for cyc in s.trim_matches(|c| c == '(' || c == ')').split(")(") {
        let pts: Vec<usize> = cyc.split(',').map(|x| x.parse::<usize>().unwrap() - 1).collect();
        for i in 0..pts.len() {
            p[pts[i]] = pts[(i + 1) % pts.len()];
        }
    }
    p
}

fn close(n: usize, gens: &[Perm]) -> HashSet<Perm> {
    let id: Perm = (0..n).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for g in &frontier {
            for h in gens {
                let k: Perm = g.iter().map(|&i| h[i]).collect();
                if seen.insert(k.clone()) {
                    next.push(k);
                }
            }
        }
        frontier = next;
    }
    seen
}

fn cycle_type(p: &Perm) -> Partition {
    let mut seen = vec![false; p.len()];
    let mut t = Vec::new();
    for i in 0..p.len() {
        let mut len = 0;
        let mut j = i;
        while !seen[j] {
            seen[j] = true;
            j = p[j];
            len += 1;
        }
        if len > 0 {
            t.push(len);
        }
    }
    t.sort_unstable_by(|a, b| b.cmp(a));
    t
}

fn all_perms(n: usize) -> Vec<Perm> {
    let gens = vec![
        parse(n, "(1,2)"),
        parse(n, &format!("({})", (1..=n).map(|i| i.to_string()).collect::<Vec<_>>().join(","))),
    ];
    close(n, &gens).into_iter().collect()
}

fn sign_even(p: &Perm) -> bool {
    galois::is_even_type(&cycle_type(p))
}

/// S4 acting on the six 2-subsets of {0,1,2,3}.
fn on_pairs(even_only: bool) -> HashSet<Perm> {
    let pairs: Vec<(usize, usize)> = (0..4).flat_map(|a| (a + 1..4).map(move |b| (a, b))).collect();
    all_perms(4)
        .into_iter()
        .filter(|s| !even_only || sign_even(s))
        .map(|s| {
            pairs
                .iter()
                .map(|&(a, b)| {
                    let img = (s[a].min(s[b]), s[a].max(s[b]));
                    pairs.iter().position(|&q| q == img).unwrap()
                })
                .collect()
        })
        .collect()
}

/// Collineations of the Fano plane with lines {i, i+1, i+3} mod 7.
fn fano() -> HashSet<Perm> {
    let lines: HashSet<Vec<usize>> = (0..7)
        .map(|i| {
            let mut l = vec![i % 7, (i + 1) % 7, (i + 3) % 7];
            l.sort_unstable();
            l
        })
        .collect();
    all_perms(7)
        .into_iter()
        .filter(|p| {
            lines.iter().all(|l| {
                let mut img: Vec<usize> = l.iter().map(|&x| p[x]).collect();
                img.sort_unstable();
                lines.contains(&img)
            })
        })
        .collect()
}

fn groups() -> Vec<(usize, &'static str, HashSet<Perm>)> {
    let gen = |n: usize, name: &'static str, gens: &[&str]| {
        (n, name, close(n, &gens.iter().map(|g| parse(n, g)).collect::<Vec<_>>()))
    };
    vec![
        gen(2, "C2", &["(1,2)"]),
        gen(3, "C3", &["(1,2,3)"]),
        gen(3, "S3", &["(1,2,3)", "(1,2)"]),
        gen(4, "C4", &["(1,2,3,4)"]),
        gen(4, "V4", &["(1,2)(3,4)", "(1,3)(2,4)"]),
        gen(4, "D4", &["(1,2,3,4)", "(1,3)"]),
        gen(4, "A4", &["(1,2,3)", "(2,3,4)"]),
        gen(4, "S4", &["(1,2,3,4)", "(1,2)"]),
        gen(5, "C5", &["(1,2,3,4,5)"]),
        gen(5, "D5", &["(1,2,3,4,5)", "(2,5)(3,4)"]),
        gen(5, "F5", &["(1,2,3,4,5)", "(2,3,5,4)"]),
        gen(5, "A5", &["(1,2,3,4,5)", "(1,2,3)"]),
        gen(5, "S5", &["(1,2,3,4,5)", "(1,2)"]),
        gen(6, "C6", &["(1,2,3,4,5,6)"]),
        gen(6, "S3(6)", &["(1,3,5)(2,4,6)", "(1,4)(2,3)(5,6)"]),
        gen(6, "D6", &["(1,2,3,4,5,6)", "(1,6)(2,5)(3,4)"]),
        (6, "A4(6)", on_pairs(true)),
        gen(6, "F18", &["(1,2,3)", "(1,4)(2,5)(3,6)"]),
        gen(6, "2A4", &["(1,3,5)(2,4,6)", "(1,2)"]),
        (6, "S4(6d)", on_pairs(false)),
        gen(6, "S4(6c)", &["(1,3,2,4)", "(1,3,5)(2,4,6)"]),
        gen(6, "S3xS3", &["(1,2,3)", "(4,5,6)", "(1,4)(2,5)(3,6)", "(2,3)(5,6)"]),
        gen(6, "F36", &["(1,2,3)", "(4,5,6)", "(1,4,2,6)(3,5)"]),
        gen(6, "S2wrS3", &["(1,3,5)(2,4,6)", "(1,2)", "(1,3)(2,4)"]),
        gen(6, "PSL(2,5)", &["(1,2,3,4,5)", "(1,6)(2,5)"]),
        gen(6, "S3wrS2", &["(1,2,3)", "(1,2)", "(1,4)(2,5)(3,6)"]),
        gen(6, "PGL(2,5)", &["(1,2,3,4,5)", "(1,6)(2,5)", "(2,3,5,4)"]),
        gen(6, "A6", &["(1,2,3)", "(2,3,4,5,6)"]),
        gen(6, "S6", &["(1,2)", "(1,2,3,4,5,6)"]),
        gen(7, "C7", &["(1,2,3,4,5,6,7)"]),
        gen(7, "D7", &["(1,2,3,4,5,6,7)", "(2,7)(3,6)(4,5)"]),
        gen(7, "F21", &["(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"]),
        gen(7, "F42", &["(1,2,3,4,5,6,7)", "(2,4,3,7,5,6)"]),
        (7, "PSL(3,2)", fano()),
        gen(7, "A7", &["(1,2,3)", "(1,2,3,4,5,6,7)"]),
        gen(7, "S7", &["(1,2)", "(1,2,3,4,5,6,7)"]),
    ]
}

/// Number of transitive groups of degree 2..=7, up to conjugacy.
const TRANSITIVE_COUNTS: [(usize, usize); 6] = [(2, 1), (3, 2), (4, 5), (5, 5), (6, 16), (7, 7)];

#[test]
fn tables_match_regenerated_groups() {
    let regenerated = groups();
    for (n, count) in TRANSITIVE_COUNTS {
        let table = galois::table(n).expect("table exists");
        assert_eq!(table.entries.len(), count, "degree {n}");
        assert_eq!(regenerated.iter().filter(|g| g.0 == n).count(), count);
    }
    for (n, name, elems) in &regenerated {
        let orbit: HashSet<usize> = elems.iter().map(|p| p[0]).collect();
        assert_eq!(orbit.len(), *n, "{name} is not transitive");
        let mut counts: BTreeMap<Partition, u64> = BTreeMap::new();
        for p in elems {
            *counts.entry(cycle_type(p)).or_default() += 1;
        }
        let entry = galois::table(*n).unwrap().get(name).unwrap_or_else(|| panic!("{name} missing"));
        assert_eq!(entry.order, elems.len() as u64, "{name} order");
        assert_eq!(entry.counts, counts, "{name} cycle types");
        assert_eq!(entry.counts.values().sum::<u64>(), entry.order);
        assert_eq!(entry.counts[&vec![1; *n]], 1, "{name} identity");
    }
}

#[test]
fn groups_within_a_degree_are_pairwise_distinct() {
    // distinct cycle-type statistics, so Frobenius sampling can tell them apart
    for n in 2..=7 {
        let t = galois::table(n).unwrap();
        for (i, a) in t.entries.iter().enumerate() {
            for b in &t.entries[i + 1..] {
                assert_ne!(a.counts, b.counts, "{} and {} coincide", a.name, b.name);
            }
        }
    }
}
