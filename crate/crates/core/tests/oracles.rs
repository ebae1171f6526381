//! Cross-checks against computations that share no code with the library:
//! Euclidean realizations, closed-form counts and brute-force sampling.

use std::collections::BTreeSet;

use relroots::borel::cores_definitional;
use relroots::rootsys::{chain_in, enumerate_positive_systems};
use relroots::{
    build_root_system, catalog, catalog_entry, enumerate_borel_subsets,
    RelativeRootSystem, RootSet, Series, Strategy,
};

/// Roots of the classical series in the usual coordinates of ℝ^n.
fn euclidean(series: Series, n: usize) -> BTreeSet<Vec<i64>> {
    let mut out = BTreeSet::new();
    let dim = if series == Series::A { n + 1 } else { n };
    let e = |i: usize, s: i64| {
        let mut v = vec![0; dim];
        v[i] = s;
        v
    };
    let add = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<_>>();
    for i in 0..dim {
        for j in 0..dim {
            if i == j {
                continue;
            }
            if series == Series::A {
                out.insert(add(&e(i, 1), &e(j, -1)));
                continue;
            }
            for s in [1, -1] {
                for t in [1, -1] {
                    out.insert(add(&e(i, s), &e(j, t)));
                }
            }
        }
        for s in [1, -1] {
            match series {
                Series::B => {
                    out.insert(e(i, s));
                }
                Series::C => {
                    out.insert(e(i, 2 * s));
                }
                Series::BC => {
                    out.insert(e(i, s));
                    out.insert(e(i, 2 * s));
                }
                _ => {}
            }
        }
    }
    out
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

#[test]
fn root_counts_match_euclidean_models() {
    for (s, ranks) in [(Series::A, 1..=6), (Series::B, 2..=5), (Series::C, 2..=5), (Series::D, 3..=6), (Series::BC, 1..=4)] {
        for n in ranks {
            let sys = build_root_system(s, n).unwrap();
            assert_eq!(sys.len(), euclidean(s, n).len(), "{s:?}{n}");
            assert_eq!(sys.positive_roots().count() * 2, sys.len());
        }
    }
    for (s, n, count) in [(Series::G, 2, 12), (Series::F, 4, 48), (Series::E, 6, 72), (Series::E, 7, 126)] {
        assert_eq!(build_root_system(s, n).unwrap().len(), count);
    }
}

#[test]
fn highest_root_heights_are_coxeter_numbers_minus_one() {
    let cases = [
        (Series::A, 4, 4),
        (Series::B, 3, 5),
        (Series::C, 4, 7),
        (Series::D, 5, 7),
        (Series::G, 2, 5),
        (Series::F, 4, 11),
        (Series::E, 6, 11),
    ];
    for (s, n, h) in cases {
        let sys = build_root_system(s, n).unwrap();
        assert_eq!(sys.roots().iter().map(|r| r.height()).max(), Some(h), "{s:?}{n}");
    }
}

#[test]
fn chamber_counts_are_weyl_group_orders() {
    let cases = [
        (Series::A, 3, factorial(4)),
        (Series::B, 3, 8 * factorial(3)),
        (Series::C, 3, 8 * factorial(3)),
        (Series::D, 4, 8 * factorial(4)),
        (Series::G, 2, 12),
    ];
    for (s, n, w) in cases {
        let sys = build_root_system(s, n).unwrap();
        assert_eq!(enumerate_positive_systems(&sys).unwrap().len(), w, "{s:?}{n}");
    }
}

#[test]
fn folded_root_counts() {
    // |BC_m| = 2m(m+1), |C_m| = 2m², |B_3| = 18, |G_2| = 12, |F_4| = 48.
    let cases = [
        ("BC-from-A2", 4),
        ("C-from-A3", 8),
        ("BC-from-A4", 12),
        ("C-from-A5", 18),
        ("BC-from-A6", 24),
        ("B-from-D4", 18),
        ("G-from-D4", 12),
        ("F-from-E6", 48),
    ];
    for (name, count) in cases {
        let rel = catalog_entry(name).unwrap().resolve().unwrap();
        assert_eq!(rel.len(), count, "{name}");
    }
}

/// Distinct `Φ_f` over all generic integer functionals in a box.
fn sampled_borel_sets(rel: &RelativeRootSystem, bound: i64) -> BTreeSet<Vec<usize>> {
    let r = rel.rank();
    let mut out = BTreeSet::new();
    let mut f = vec![-bound; r];
    loop {
        let vals: Vec<i64> = rel.roots().iter().map(|a| a.coords().iter().zip(&f).map(|(x, y)| x * y).sum()).collect();
        if vals.iter().all(|&v| v != 0) {
            out.insert((0..vals.len()).filter(|&i| vals[i] > 0).collect());
        }
        let mut k = 0;
        while k < r && f[k] == bound {
            f[k] = -bound;
            k += 1;
        }
        if k == r {
            return out;
        }
        f[k] += 1;
    }
}

#[test]
fn borel_families_match_sampling_and_weyl_orders() {
    let cases = [
        ("A2", 6),
        ("B2", 8),
        ("G2", 12),
        ("A3", 24),
        ("B3", 48),
        ("C3", 48),
        ("BC-from-A2", 2),
        ("C-from-A3", 8),
        ("BC-from-A4", 8),
        ("BC-from-A6", 48),
        ("B-from-D4", 48),
        ("G-from-D4", 12),
    ];
    for (name, w) in cases {
        let rel = catalog_entry(name).unwrap().resolve().unwrap();
        let sampled = sampled_borel_sets(&rel, 12);
        let fam = enumerate_borel_subsets(&rel, Strategy::Projection).unwrap();
        let listed: BTreeSet<Vec<usize>> = fam.iter().map(|b| b.positive.iter().collect()).collect();
        assert_eq!(fam.len(), w, "{name}");
        assert_eq!(listed, sampled, "{name}");
    }
}

/// Roots of `Φ_f` that are not the sum of two roots of `Φ_f`.
fn indecomposable(rel: &RelativeRootSystem, set: &RootSet) -> Vec<usize> {
    set.iter()
        .filter(|&a| {
            !set.iter().any(|b| {
                let d = rel.root(a).sub(rel.root(b));
                rel.index_of(&d).is_some_and(|c| set.contains(c))
            })
        })
        .collect()
}

#[test]
fn cores_are_the_roots_off_simple_lines() {
    for name in ["B2", "G2", "B3", "C-from-A3", "BC-from-A4", "BC-from-A6", "B-from-D4"] {
        let rel = catalog_entry(name).unwrap().resolve().unwrap();
        let fam = enumerate_borel_subsets(&rel, Strategy::Projection).unwrap();
        let cores = cores_definitional(&rel, &fam).unwrap();
        for (b, c) in fam.iter().zip(&cores) {
            let simple = indecomposable(&rel, &b.positive);
            assert_eq!(simple.len(), rel.rank(), "{name}");
            let want: Vec<usize> = b
                .positive
                .iter()
                .filter(|&a| !simple.iter().any(|&s| rel.root(a).is_collinear(rel.root(s))))
                .collect();
            assert_eq!(c.members.iter().collect::<Vec<_>>(), want, "{name}");
        }
    }
}

#[test]
fn chains_of_simple_roots_are_valid_everywhere() {
    for e in catalog().into_iter().filter(|e| e.j.is_none()) {
        let sys = build_root_system(e.series, e.rank).unwrap();
        let positive = RootSet::from_indices(sys.len(), sys.positive_roots());
        let simple = sys.simple_system().to_vec();
        for x in sys.positive_roots() {
            let chain = chain_in(&sys, &simple, &positive, x).unwrap();
            let mut acc = vec![0; sys.rank()];
            for &y in &chain {
                assert!(simple.contains(&y));
                for (a, c) in acc.iter_mut().zip(sys.root(y).coords()) {
                    *a += c;
                }
                let r = relroots::Root::new(acc.clone());
                assert!(sys.index_of(&r).is_some_and(|i| positive.contains(i)), "{}: prefix {r}", e.name);
            }
            assert_eq!(acc.as_slice(), sys.root(x).coords());
        }
    }
}
