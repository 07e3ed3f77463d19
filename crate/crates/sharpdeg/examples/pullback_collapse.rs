// Pull a homogeneous polynomial back by the odd two-variable family, and
// collapse it to three variables.

use sharpdeg::bounds::{collapse_to_two_vars, pullback_compose};
use sharpdeg::constructions::whitney;
use sharpdeg::poly::homogenize_and_flip;

pub fn run_example() {
    let big_p = homogenize_and_flip(&whitney(3, 2, None).unwrap()).unwrap();
    println!("P = {big_p}");
    let pb = pullback_compose(&big_p).unwrap();
    let a = &pb.accounting;
    println!("pullback: {}", pb.composed);
    println!("  D = {}, c = {:?}, p-degree {} >= {}, N {} -> {}", a.big_d, a.c.iter().map(|c| c.to_string()).collect::<Vec<_>>(), a.composed_p_degree, a.degree_lower_bound, a.input_terms, a.composed_terms);
    println!("  degree bound {}", a.bound);

    let col = collapse_to_two_vars(&big_p).unwrap();
    println!("collapse with X' = {:?}: {}", col.x_prime.iter().map(|c| c.to_string()).collect::<Vec<_>>(), col.collapsed);
    println!("  p-degree {} -> {}, bound {}", col.p_degree, col.collapsed_p_degree, col.bound);
}

#[allow(dead_code)]
fn main() {
    run_example();
}
