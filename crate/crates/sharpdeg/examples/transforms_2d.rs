// Two-dimensional diagram surgery with receipts.

use sharpdeg::diagram::{NewtonDiagram, Sign};
use sharpdeg::transforms::{fill_level_2d, prescribed_minimal_2d, slice_column_2d, triangle_glue_2d, Metric};

pub fn run_example() {
    use Sign::{N, P};
    // a full bottom level with a gap above it
    let diag = NewtonDiagram::from_signs(2, 4, [(vec![0, 0], P), (vec![1, 0], N), (vec![1, 1], P), (vec![0, 2], N)]).unwrap();
    let r = fill_level_2d(&diag, 1, Metric::Sc).unwrap();
    println!("{}: SC {} -> {} (bound {})", r.op, r.metric_before, r.metric_after, r.delta_bound);
    assert!(r.holds());

    let tall = prescribed_minimal_2d(&[P, N, P, N, P], 5).unwrap();
    println!("prescribed d=5: SC {}", tall.weighted_surface_count_2d().unwrap());

    // slicing needs the columns a = 0 and a = 1 empty above level k
    let col = NewtonDiagram::from_signs(2, 4, [(vec![0, 0], P), (vec![2, 0], N), (vec![2, 1], P), (vec![3, 0], N)]).unwrap();
    let r = slice_column_2d(&col, 1).unwrap();
    println!("{}: SC {} -> {}", r.op, r.metric_before, r.metric_after);

    // glue a minimal triangle under a diagram that starts at level 2
    let high = NewtonDiagram::from_signs(2, 4, [(vec![2, 0], P), (vec![1, 1], N), (vec![1, 2], P)]).unwrap();
    let r = triangle_glue_2d(&high, 2).unwrap();
    println!("{}: SC {} -> {} (bound {})", r.op, r.metric_before, r.metric_after, r.delta_bound);
    assert!(r.holds());
}

#[allow(dead_code)]
fn main() {
    run_example();
}
