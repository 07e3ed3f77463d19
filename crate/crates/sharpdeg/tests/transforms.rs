mod common;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sharpdeg::diagram::{NewtonDiagram, Sign};
use sharpdeg::poly::{rat, ratio, Rat};
use sharpdeg::transforms::{
    fill_level_2d, prescribed_minimal_2d, reduce_3d_step, slice_column_2d, triangle_glue_2d, Metric, ReduceStep,
    TransformReceipt,
};

/// Re-derive both metric values with the oracle and check the inequality.
fn audit(r: &TransformReceipt, bound: Rat) {
    let before = common::sc(&r.before);
    let after = common::sc(&r.after);
    assert_eq!(before, r.metric_before, "{}", r.op);
    assert_eq!(after, r.metric_after, "{}", r.op);
    assert_eq!(r.delta_bound, bound, "{}", r.op);
    assert!(&after - &before <= bound, "{}: {before} -> {after}", r.op);
}

#[test]
fn fill_level_never_raises_sc() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let (diag, k) = common::fill_input(&mut rng);
        let r = fill_level_2d(&diag, k, Metric::Sc).unwrap();
        audit(&r, rat(0));
        // the filled level is full and untouched points keep their sign
        for b in 0..=k as i32 {
            assert!(r.after.get(&[k as i32 - b, b]).is_some());
        }
        for (m, s) in diag.signs() {
            assert_eq!(r.after.get(m), Some(*s));
        }
    }
}

#[test]
fn fill_level_by_node_count() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..300 {
        let (diag, k) = common::fill_input(&mut rng);
        let r = fill_level_2d(&diag, k, Metric::NodeCount).unwrap();
        assert!(common::node_count(&r.after) <= common::node_count(&diag));
    }
}

#[test]
fn slice_column_drops_half() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..300 {
        let (diag, k) = common::slice_input(&mut rng);
        let r = slice_column_2d(&diag, k).unwrap();
        audit(&r, ratio(-1, 2));
        assert_eq!(r.after.d(), diag.d() - 1);
    }
}

#[test]
fn triangle_glue_costs_at_most_half_k() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..300 {
        let (diag, k) = common::glue_input(&mut rng);
        let r = triangle_glue_2d(&diag, k).unwrap();
        audit(&r, ratio(k as i64, 2));
        for l in 0..k as i32 {
            for b in 0..=l {
                assert!(r.after.get(&[l - b, b]).is_some());
            }
        }
    }
}

#[test]
fn prescribed_triangles_are_minimal() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for d in 1..=12u32 {
        let rows: Vec<Vec<Sign>> = if d <= 8 {
            (0..1u32 << d).map(|bits| (0..d).map(|i| if bits >> i & 1 == 1 { Sign::N } else { Sign::P }).collect()).collect()
        } else {
            (0..64).map(|_| (0..d).map(|_| common::random_sign(&mut rng)).collect()).collect()
        };
        for row in rows {
            let diag = prescribed_minimal_2d(&row, d).unwrap();
            assert_eq!(common::sc(&diag), ratio(d as i64 + 1, 2), "d = {d}");
        }
    }
}

#[test]
fn preconditions_are_reported() {
    let diag = NewtonDiagram::from_signs(2, 3, [(vec![1, 1], Sign::P)]).unwrap();
    assert!(matches!(fill_level_2d(&diag, 2, Metric::Sc), Err(sharpdeg::Error::Precondition(_))));
    assert!(matches!(triangle_glue_2d(&diag, 3), Err(sharpdeg::Error::Precondition(_))));
    let d3 = NewtonDiagram::new(3, 2);
    assert!(matches!(fill_level_2d(&d3, 0, Metric::Sc), Err(sharpdeg::Error::Dimension(3))));
}

#[test]
fn reduction_terminates_with_receipts() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for _ in 0..60 {
        let (p, _) = common::random_whitney(3, rand::Rng::gen_range(&mut rng, 2..=5), &mut rng);
        let q = sharpdeg::poly::divide_by_s(&sharpdeg::poly::homogenize_and_flip(&p).unwrap()).unwrap();
        let mut diag = NewtonDiagram::of(&q, p.degree().unwrap()).unwrap();
        for _ in 0..100 {
            match reduce_3d_step(&diag).unwrap() {
                ReduceStep::SliceOffFace { receipt, .. } | ReduceStep::FillLevel { receipt, .. } => {
                    assert!(receipt.holds());
                    diag = receipt.after;
                }
                ReduceStep::Terminal => break,
            }
        }
    }
}
