// The Newton diagram of the two-variable Faran cubic: signs, nodes, SC.

use sharpdeg::constructions::faran_cubics;
use sharpdeg::diagram::NewtonDiagram;
use sharpdeg::poly::{divide_by_s, homogenize_and_flip, ratio};

pub fn run_example() {
    let (p2, _) = faran_cubics();
    let q = divide_by_s(&homogenize_and_flip(&p2).unwrap()).unwrap();
    let diag = NewtonDiagram::of(&q, 3).unwrap();
    for (m, s) in diag.sorted_points() {
        println!("{m:?} {s:?}");
    }
    for site in diag.nodes() {
        println!("node at alpha = {:?} ({:?})", site.alpha, site.kind);
    }
    println!("#(D) = {}, SC(D) = {}", diag.node_count(), diag.weighted_surface_count_2d().unwrap());
    assert_eq!(diag.node_count(), 4);
    assert_eq!(diag.weighted_surface_count_2d().unwrap(), ratio(2, 1));

    let k = diag.support();
    println!("support size {}, connected {}", k.size().unwrap(), k.is_connected());
}

#[allow(dead_code)]
fn main() {
    run_example();
}
