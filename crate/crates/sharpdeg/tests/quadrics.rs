mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sharpdeg::cli::{parse_map, parse_polynomial};
use sharpdeg::constructions::{dkr_sharp_2d, faran_cubics, whitney};
use sharpdeg::enumeration::decomposability_oracle;
use sharpdeg::poly::{ratio, Rat};
use sharpdeg::quadrics::{
    degree_report, flipped_real_polynomial, map_of_positive_polynomial, monomial_decomposability,
    positive_polynomial_of_map, real_polynomial_of_map, reducible_map_example, verify_quadric_map,
    HyperquadricSignature, MapDecomposition, MonomialMap, Slot,
};
use sharpdeg::Polynomial;

fn sphere_map(p: &Polynomial) -> MonomialMap {
    map_of_positive_polynomial(p).unwrap()
}

#[test]
fn real_polynomial_examples() {
    let w = whitney(3, 2, None).unwrap();
    let f = sphere_map(&w);
    assert_eq!(f.components.len(), 6);
    assert_eq!(f.target, HyperquadricSignature::sphere(5));
    let real = real_polynomial_of_map(&f);
    let positive: Vec<_> = real.terms().filter(|(_, c)| **c > Rat::from_integer(0.into())).collect();
    assert_eq!(positive.len(), 5);
    assert_eq!(positive_polynomial_of_map(&f).unwrap(), w);

    let id = MonomialMap::identity(HyperquadricSignature::new(2, 1).unwrap());
    assert_eq!(real_polynomial_of_map(&id), parse_polynomial("X0 + X1 - X2 - X3").unwrap());
    assert!(verify_quadric_map(&id));

    let r2 = reducible_map_example(2).unwrap();
    assert_eq!(
        real_polynomial_of_map(&r2),
        parse_polynomial("X2 X0 + X2 X1 + X0^2 + X0 X1 - X2^2 - X0 X2").unwrap()
    );
}

#[test]
fn verification_detects_perturbation() {
    for d in 1..=5 {
        let f = reducible_map_example(d).unwrap();
        assert!(verify_quadric_map(&f));
        let mut g = f.clone();
        g.components[0].weight = ratio(3, 2);
        assert!(!verify_quadric_map(&g), "d = {d}");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(51);
    for _ in 0..40 {
        let (p, _) = common::random_whitney(rng.gen_range(2..=4), rng.gen_range(1..=4), &mut rng);
        let mut f = sphere_map(&p);
        assert!(verify_quadric_map(&f));
        let k = rng.gen_range(0..f.components.len());
        f.components[k].weight += ratio(1, 7);
        assert!(!verify_quadric_map(&f));
    }
}

#[test]
fn positive_round_trip_is_exact() {
    let mut rng = ChaCha8Rng::seed_from_u64(52);
    let (f2, f3) = faran_cubics();
    let mut inputs = vec![f2, f3, parse_polynomial("x1 + x2 + x3").unwrap()];
    inputs.extend((1..=11).step_by(2).map(|d| dkr_sharp_2d(d).unwrap()));
    inputs.extend((0..40).map(|_| common::random_whitney(rng.gen_range(2..=5), rng.gen_range(1..=5), &mut rng).0));
    for p in inputs {
        let f = sphere_map(&p);
        assert!(f.has_independent_components());
        assert_eq!(f.degree(), p.degree().unwrap());
        assert_eq!(real_polynomial_of_map(&f).degree(), Some(f.degree()));
        assert_eq!(positive_polynomial_of_map(&f).unwrap(), p);
        let text = f.to_string();
        assert_eq!(parse_map(&text).unwrap(), f, "{text}");
    }
    assert!(map_of_positive_polynomial(&parse_polynomial("x1^2 + 2 x1 x2 - x2 + 2 x2^2").unwrap()).is_err());
}

#[test]
fn repeated_exponents_can_lose_degree() {
    let f = parse_map("map source=Q(1,0) target=Q(1,0) [ z0 z1 : +1 ; z0 z1 : -1 ]").unwrap();
    assert!(!f.has_independent_components());
    assert_eq!(f.degree(), 2);
    assert_eq!(real_polynomial_of_map(&f).degree(), None);
}

#[test]
fn map_grammar_errors() {
    for (text, offset) in [
        ("map source=Q(2,0) target=Q(1,0) [ z5 : +1 ; z0 : -1 ]", 34),
        ("map source=Q(2,0) target=Q(1,0) [ z0 +1 ]", 37),
        ("map source=Q(2,0) target=Q(1,0) [ z0 : +1 ; z2 : -1 ] x", 54),
        ("mop", 0),
    ] {
        match parse_map(text) {
            Err(sharpdeg::Error::Syntax { offset: o, .. }) => assert_eq!(o, offset, "{text}"),
            other => panic!("{text}: {other:?}"),
        }
    }
    // slot counts that do not match the target
    assert!(matches!(parse_map("map source=Q(2,0) target=Q(2,0) [ z0 : +1 ; z2 : -1 ]"), Err(sharpdeg::Error::Input(_))));
}

#[test]
fn decomposability_examples() {
    for d in 1..=5 {
        assert!(monomial_decomposability(&reducible_map_example(d).unwrap()).unwrap().is_decomposable(), "d = {d}");
    }
    assert_eq!(monomial_decomposability(&sphere_map(&whitney(3, 2, None).unwrap())).unwrap(), MapDecomposition::Indecomposable);
    let id = MonomialMap::identity(HyperquadricSignature::sphere(3));
    assert_eq!(monomial_decomposability(&id).unwrap(), MapDecomposition::Indecomposable);
}

#[test]
fn degree_report_examples() {
    let (_, f3) = faran_cubics();
    let r = degree_report(&sphere_map(&f3)).unwrap();
    let c = r.get("T1.3ii").unwrap();
    assert!(c.sharp && c.bound.value == ratio(3, 1));

    let r = degree_report(&sphere_map(&dkr_sharp_2d(5).unwrap())).unwrap();
    let c = r.get("T1.3i").unwrap();
    assert!(c.sharp && c.bound.value == ratio(5, 1));

    let r = degree_report(&reducible_map_example(3).unwrap()).unwrap();
    assert!(r.get("T1.3i").is_none() && r.get("T1.3ii").is_none());
    assert!(!r.notes.is_empty());
}

#[test]
fn map_and_polynomial_oracles_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(53);
    for f in common::agreement_instances(&mut rng) {
        assert!(f.components.len() <= 12);
        assert!(f.has_independent_components());
        assert!(verify_quadric_map(&f));
        let map_side = monomial_decomposability(&f).unwrap();
        assert_ne!(map_side, MapDecomposition::Indeterminate, "{f}");
        let poly_side = decomposability_oracle(&flipped_real_polynomial(&f)).unwrap();
        assert_eq!(map_side.is_decomposable(), poly_side.is_decomposable(), "{f}");
        if let MapDecomposition::Decomposable(a, b) = &map_side {
            for group in [a, b] {
                let sub = f.restrict(group).unwrap();
                assert!(verify_quadric_map(&sub));
            }
        }
    }
}

#[test]
fn slots_follow_signs() {
    let f = sphere_map(&whitney(2, 3, None).unwrap());
    let neg: Vec<_> = f.components.iter().filter(|c| c.slot == Slot::Negative).collect();
    assert_eq!(neg.len(), 1);
    assert_eq!(neg[0].exponent, vec![0, 0, 3]);
}
