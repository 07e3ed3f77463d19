// Faces of a three-variable support and its face-wise surface count.

use sharpdeg::constructions::whitney;
use sharpdeg::diagram::{faces_3d, face_sc_min, surface_count_3d, NewtonDiagram};
use sharpdeg::poly::{divide_by_s, homogenize_and_flip};

pub fn run_example() {
    let p = whitney(3, 3, None).unwrap();
    let q = divide_by_s(&homogenize_and_flip(&p).unwrap()).unwrap();
    let diag = NewtonDiagram::of(&q, 3).unwrap();
    let k = diag.support();
    println!("support {:?}", k.points());
    for face in faces_3d(&k).unwrap() {
        println!("{:?}: {} points, min SC {}", face.kind, face.points.len(), face_sc_min(&face, &k).unwrap());
    }
    let sc = surface_count_3d(&k).unwrap();
    println!("surface count {sc}, nodes {}", diag.node_count());
    assert!(sc <= sharpdeg::poly::rat(diag.node_count() as i64));
    assert_eq!(k.has_overhang().unwrap(), None);
}

#[allow(dead_code)]
fn main() {
    run_example();
}
