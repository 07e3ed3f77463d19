mod common;

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sharpdeg::constructions::{faran_cubics, whitney};
use sharpdeg::diagram::{NewtonDiagram, Point, Sign, Support};
use sharpdeg::enumeration::{
    decomposability_oracle, enumerate_supports, exhaustive_bound_verify, min_nodes_over_signs, support_split,
    Constraint, Decomposition, SearchSpec, Theorem,
};
use sharpdeg::poly::{divide_by_s, homogenize_and_flip, Rat};
use sharpdeg::{Error, MultiIndex, Polynomial, VarStyle};

fn sets(supports: &[Support]) -> BTreeSet<BTreeSet<Point>> {
    supports.iter().map(|k| k.points().clone()).collect()
}

fn support(n: usize, pts: &[&[i32]]) -> Support {
    Support::new(n, pts.iter().map(|p| p.to_vec()))
}

#[test]
fn small_enumerations() {
    let spec = SearchSpec::new(2, 2, &[Constraint::Connected, Constraint::ContainsOrigin]);
    let got = sets(&enumerate_supports(&spec).unwrap());
    let want: BTreeSet<BTreeSet<Point>> = [
        vec![vec![0, 0]],
        vec![vec![0, 0], vec![1, 0]],
        vec![vec![0, 0], vec![0, 1]],
        vec![vec![0, 0], vec![1, 0], vec![0, 1]],
    ]
    .into_iter()
    .map(|v| v.into_iter().collect())
    .collect();
    assert_eq!(got, want);

    let one = enumerate_supports(&SearchSpec::new(2, 1, &[])).unwrap();
    assert_eq!(sets(&one), BTreeSet::from([BTreeSet::from([vec![0, 0]])]));
}

/// Direct filtering of all subsets of the simplex.
#[test]
fn no_overhang_count_matches_direct_filter() {
    for d in 1..=3u32 {
        let pts = common::tuples(3, 0)
            .into_iter()
            .chain((1..d).flat_map(|l| common::tuples(3, l)))
            .map(|t| t.iter().map(|&x| x as i32).collect::<Point>())
            .collect::<Vec<_>>();
        let mut want = BTreeSet::new();
        for mask in 1u32..(1 << pts.len()) {
            let sub: BTreeSet<Point> = pts.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, p)| p.clone()).collect();
            let normalized = (0..3).all(|j| sub.iter().any(|p| p[j] == 0));
            if normalized && Support::new(3, sub.iter().cloned()).has_overhang().unwrap().is_none() {
                want.insert(sub);
            }
        }
        let got = sets(&enumerate_supports(&SearchSpec::new(3, d, &[Constraint::NoOverhang])).unwrap());
        assert_eq!(got, want, "d = {d}");
    }
}

fn brute_min(k: &Support) -> usize {
    let pts: Vec<Point> = k.points().iter().cloned().collect();
    let d = pts.iter().map(|p| p.iter().sum::<i32>()).max().unwrap() as u32 + 1;
    (0u32..1 << pts.len())
        .map(|mask| {
            let diag = NewtonDiagram::from_signs(
                k.n(),
                d,
                pts.iter().enumerate().map(|(i, p)| (p.clone(), if mask >> i & 1 == 1 { Sign::N } else { Sign::P })),
            )
            .unwrap();
            common::node_count(&diag)
        })
        .min()
        .unwrap()
}

#[test]
fn min_nodes_examples_and_oracle() {
    assert_eq!(min_nodes_over_signs(&support(2, &[&[0, 0], &[1, 0]])).unwrap().0, 4);
    let tri = support(2, &[&[0, 0], &[1, 0], &[0, 1], &[2, 0], &[1, 1], &[0, 2]]);
    assert_eq!(min_nodes_over_signs(&tri).unwrap().0, 4);
    assert_eq!(min_nodes_over_signs(&support(2, &[&[0, 0]])).unwrap().0, 3);

    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..40 {
        let n = rng.gen_range(2..=3);
        let diag = common::random_diagram(n, rng.gen_range(1..=4), 0.4, &mut rng);
        let k = diag.support();
        if k.is_empty() || k.len() > 9 {
            continue;
        }
        let (best, witness) = min_nodes_over_signs(&k).unwrap();
        assert_eq!(best, brute_min(&k));
        assert_eq!(common::node_count(&witness), best);
        assert_eq!(witness.support(), k);
    }
}

#[test]
fn sweeps_meet_the_bounds() {
    let c = exhaustive_bound_verify(Theorem::T34, 4, false).unwrap();
    let mins: Vec<usize> = c.levels.iter().map(|l| l.min_nodes).collect();
    assert_eq!(mins, vec![3, 4, 4, 5]);
    assert!(c.holds());
    let c = exhaustive_bound_verify(Theorem::T52, 2, false).unwrap();
    let mins: Vec<usize> = c.levels.iter().map(|l| l.min_nodes).collect();
    assert_eq!(mins, vec![4, 6]);
    assert!(matches!(exhaustive_bound_verify(Theorem::T52, 4, false), Err(Error::CapExceeded { .. })));
    assert_eq!("T3.4".parse::<Theorem>().unwrap(), Theorem::T34);
    assert!("T9.9".parse::<Theorem>().is_err());
}

#[test]
fn certificates_are_reproducible() {
    let a = serde_json::to_string(&exhaustive_bound_verify(Theorem::T34, 3, false).unwrap()).unwrap();
    let b = serde_json::to_string(&exhaustive_bound_verify(Theorem::T34, 3, false).unwrap()).unwrap();
    assert_eq!(a, b);
}

/// Brute force over monomial subsets with the test-side divisibility check.
fn brute_decomposable(p: &Polynomial) -> bool {
    let terms: Vec<(MultiIndex, Rat)> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    let len = terms.len();
    (1u32..(1 << (len - 1))).any(|mask| {
        let part = Polynomial::from_terms(p.n_vars(), VarStyle::Projective, terms.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, t)| t.clone()));
        common::divisible_by_variable_sum(&part)
    })
}

fn check_split(p: &Polynomial, parts: &[Polynomial]) {
    let mut seen = BTreeSet::new();
    let mut total = Polynomial::zero(p.n_vars(), VarStyle::Projective);
    for part in parts {
        assert!(common::divisible_by_variable_sum(part));
        for (m, _) in part.terms() {
            assert!(seen.insert(m.clone()), "monomial shared between parts");
        }
        total = &total + part;
    }
    assert_eq!(&total, p);
}

#[test]
fn oracle_examples() {
    let p = sharpdeg::cli::parse_polynomial("X0^3 + X1^3 + X2^3 - 3 X0 X1 X2").unwrap();
    assert_eq!(decomposability_oracle(&p).unwrap(), Decomposition::Indecomposable);

    let s = Polynomial::hyperplane(2);
    let x = |i| Polynomial::var(3, VarStyle::Projective, i);
    let a = &(&(&x(0) * &x(0)) * &x(0)) * &s;
    let b = &(&(&x(1) * &x(1)) * &x(2)) * &s;
    let p = &a + &b;
    match decomposability_oracle(&p).unwrap() {
        Decomposition::Split(parts) => check_split(&p, &parts),
        other => panic!("{other:?}"),
    }
    let p = &(&x(0) + &x(1)) * &s;
    assert_eq!(decomposability_oracle(&p).unwrap().is_decomposable(), brute_decomposable(&p));
}

#[test]
fn oracle_agrees_with_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut checked = 0;
    while checked < 80 {
        let n = rng.gen_range(2..=3);
        let diag = common::random_diagram(n, rng.gen_range(1..=3), 0.5, &mut rng);
        if diag.is_empty() {
            continue;
        }
        let q = Polynomial::from_terms(
            n + 1,
            VarStyle::Projective,
            diag.signs().iter().map(|(m, s)| {
                let mut e = vec![(diag.d() as i32 - 1 - m.iter().sum::<i32>()) as u32];
                e.extend(m.iter().map(|&v| v as u32));
                let mag = Rat::from_integer(rng.gen_range(1i64..=4).into());
                (MultiIndex(e), if *s == Sign::P { mag } else { -mag })
            }),
        );
        let p = &q * &Polynomial::hyperplane(n);
        if p.term_count() > 14 || p.term_count() < 2 {
            continue;
        }
        let verdict = decomposability_oracle(&p).unwrap();
        assert_eq!(verdict.is_decomposable(), brute_decomposable(&p), "{p}");
        if let Decomposition::Split(parts) = &verdict {
            check_split(&p, parts);
        }
        // a disconnected quotient support always splits
        if !diag.support().is_connected() {
            assert!(verdict.is_decomposable(), "{p}");
            let split = support_split(&p).unwrap().expect("support split");
            check_split(&p, &split);
        }
        checked += 1;
    }
}

#[test]
fn sharp_families_are_indecomposable() {
    let (f2, f3) = faran_cubics();
    for p in [f2, f3, whitney(3, 4, None).unwrap(), whitney(4, 3, None).unwrap()] {
        let big = homogenize_and_flip(&p).unwrap();
        divide_by_s(&big).unwrap();
        assert_eq!(decomposability_oracle(&big).unwrap(), Decomposition::Indecomposable, "{p}");
    }
    let big = homogenize_and_flip(&whitney(6, 4, None).unwrap()).unwrap();
    assert!(matches!(decomposability_oracle(&big), Err(Error::CapExceeded { .. })));
}
