// Reduce a three-variable diagram step by step until nothing applies.

use sharpdeg::constructions::whitney;
use sharpdeg::diagram::NewtonDiagram;
use sharpdeg::poly::{divide_by_s, homogenize_and_flip};
use sharpdeg::transforms::{reduce_3d_step, view_diagrams_3d, ReduceStep};

pub fn run_example() {
    let p = whitney(3, 4, None).unwrap();
    let q = divide_by_s(&homogenize_and_flip(&p).unwrap()).unwrap();
    let mut diag = NewtonDiagram::of(&q, 4).unwrap();
    let (a, b) = view_diagrams_3d(&diag).unwrap();
    println!("view diagrams: {} and {} points", a.len(), b.len());
    loop {
        match reduce_3d_step(&diag).unwrap() {
            ReduceStep::SliceOffFace { axis, level, receipt } => {
                println!("slice axis {axis} level {level}: {} -> {}", receipt.metric_before, receipt.metric_after);
                diag = receipt.after;
            }
            ReduceStep::FillLevel { level, receipt } => {
                println!("fill level {level}: {} -> {}", receipt.metric_before, receipt.metric_after);
                diag = receipt.after;
            }
            ReduceStep::Terminal => break,
        }
    }
    println!("terminal diagram: {} points", diag.len());
}

#[allow(dead_code)]
fn main() {
    run_example();
}
