mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sharpdeg::constructions::faran_cubics;
use sharpdeg::diagram::{surface_count_3d, NewtonDiagram, Sign, Support};
use sharpdeg::poly::{divide_by_s, homogenize_and_flip, rat, ratio, Rat};
use sharpdeg::{MultiIndex, Polynomial, VarStyle};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn node_count_matches_definition(n in 2usize..=3, d in 1u32..=5, fill in 0.2f64..1.0, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let diag = common::random_diagram(n, d, fill, &mut rng);
        prop_assert_eq!(diag.node_count(), common::node_count(&diag));
        if n == 2 {
            prop_assert_eq!(diag.weighted_surface_count_2d().unwrap(), common::sc(&diag));
        }
    }

    #[test]
    fn global_flip_keeps_counts(n in 2usize..=3, d in 1u32..=5, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let diag = common::random_diagram(n, d, 0.6, &mut rng);
        let flipped = diag.flipped();
        prop_assert_eq!(diag.node_count(), flipped.node_count());
        if n == 2 {
            prop_assert_eq!(diag.weighted_surface_count_2d().unwrap(), flipped.weighted_surface_count_2d().unwrap());
        }
    }

    /// Every node forces a nonzero coefficient of `Q S`, whatever the magnitudes.
    #[test]
    fn nodes_are_terms_of_the_product(n in 2usize..=3, d in 1u32..=5, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let diag = common::random_diagram(n, d, 0.7, &mut rng);
        let q = Polynomial::from_terms(
            n + 1,
            VarStyle::Projective,
            diag.signs().iter().map(|(m, s)| {
                let mut e = vec![(d as i32 - 1 - m.iter().sum::<i32>()) as u32];
                e.extend(m.iter().map(|&x| x as u32));
                let mag = Rat::new(rng.gen_range(1i64..=30).into(), rng.gen_range(1i64..=7).into());
                (MultiIndex(e), if *s == Sign::P { mag } else { -mag })
            }),
        );
        let p = common::mul(&q, &Polynomial::hyperplane(n));
        for site in diag.nodes() {
            prop_assert!(p.contains_key(&site.alpha), "node {:?} missing from P", site.alpha);
        }
    }

    #[test]
    fn json_round_trip(n in 2usize..=3, d in 1u32..=5, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let diag = common::random_diagram(n, d, 0.5, &mut rng);
        let back = NewtonDiagram::from_json(&diag.to_json()).unwrap();
        prop_assert_eq!(back, diag);
    }

    /// The face-wise count never exceeds the node count of any diagram on the support.
    #[test]
    fn surface_count_is_a_lower_bound(d in 1u32..=4, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let diag = common::random_diagram(3, d, 0.5, &mut rng);
        let k = diag.support();
        prop_assume!(!k.is_empty() && k.is_connected() && k.len() <= 12);
        if let Ok(sc) = surface_count_3d(&k) {
            prop_assert!(sc <= rat(diag.node_count() as i64));
        }
    }
}

#[test]
fn faran2_diagram_is_figure_one() {
    let (p2, _) = faran_cubics();
    let q = divide_by_s(&homogenize_and_flip(&p2).unwrap()).unwrap();
    let diag = NewtonDiagram::of(&q, 3).unwrap();
    use Sign::{N, P};
    let want = NewtonDiagram::from_signs(
        2,
        3,
        [(vec![0, 0], P), (vec![1, 0], N), (vec![0, 1], N), (vec![2, 0], P), (vec![1, 1], N), (vec![0, 2], P)],
    )
    .unwrap();
    assert_eq!(diag, want);
    assert_eq!(diag.node_count(), 4);
    assert_eq!(common::node_count(&diag), 4);
    assert_eq!(diag.weighted_surface_count_2d().unwrap(), rat(2));
    assert_eq!(diag.bottom_node_count(), 1);
}

#[test]
fn support_size_and_connectivity() {
    let k = Support::new(2, [vec![0, 0], vec![1, 0], vec![0, 2]]);
    assert_eq!(k.size().unwrap(), 3);
    assert!(!k.is_connected());
    let k = Support::new(2, [vec![0, 0], vec![1, 0], vec![0, 1]]);
    assert_eq!(k.size().unwrap(), 2);
    assert!(k.is_connected());
    let k = Support::new(3, [vec![0, 0, 0], vec![0, 0, 1], vec![0, 0, 2]]);
    assert_eq!(k.size().unwrap(), 3);
    assert_eq!(k.has_overhang().unwrap(), None);
}

#[test]
fn single_point_diagram() {
    let diag = NewtonDiagram::from_signs(2, 1, [(vec![0, 0], Sign::P)]).unwrap();
    assert_eq!(diag.node_count(), 3);
    assert_eq!(diag.weighted_surface_count_2d().unwrap(), ratio(1, 1));
    assert_eq!(common::sc(&diag), ratio(1, 1));
}
