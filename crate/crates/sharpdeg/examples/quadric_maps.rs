// Monomial maps between hyperquadrics and their real polynomials.

use sharpdeg::cli::parse_map;
use sharpdeg::constructions::faran_cubics;
use sharpdeg::quadrics::{
    degree_report, map_of_positive_polynomial, monomial_decomposability, positive_polynomial_of_map,
    real_polynomial_of_map, reducible_map_example, verify_quadric_map,
};

pub fn run_example() {
    let (_, faran3) = faran_cubics();
    let f = map_of_positive_polynomial(&faran3).unwrap();
    println!("{f}");
    assert!(verify_quadric_map(&f));
    assert_eq!(positive_polynomial_of_map(&f).unwrap(), faran3);
    let r = degree_report(&f).unwrap();
    for c in &r.checks {
        println!("  {} {}: {}", c.bound.tag, c.bound.value, c.satisfied);
    }

    let g = parse_map("map source=Q(1,1) target=Q(1,2) [ z0^2 : +1 ; z1^2 : -1 ; z1 z2 : -2 ; z2^2 : -1 ]").unwrap();
    println!("{g}\n  real polynomial {}\n  maps into the target: {}", real_polynomial_of_map(&g), verify_quadric_map(&g));

    let red = reducible_map_example(3).unwrap();
    println!("{red}\n  {:?}", monomial_decomposability(&red).unwrap());
}

#[allow(dead_code)]
fn main() {
    run_example();
}
