// Exhaustive check of the node-count lower bounds on small supports.

use sharpdeg::enumeration::{enumerate_supports, exhaustive_bound_verify, min_nodes_over_signs, Constraint, SearchSpec, Theorem};

pub fn run_example() {
    let spec = SearchSpec::new(2, 3, &[Constraint::Connected, Constraint::ExactSize]);
    let supports = enumerate_supports(&spec).unwrap();
    println!("{} connected supports of size 3 in two variables", supports.len());
    let (best, witness) = min_nodes_over_signs(&supports[0]).unwrap();
    println!("first one: {:?}, min nodes {best} ({} points)", supports[0].points(), witness.len());

    for (th, dmax) in [(Theorem::T34, 4), (Theorem::T52, 2)] {
        let cert = exhaustive_bound_verify(th, dmax, false).unwrap();
        for l in &cert.levels {
            println!("{} d = {}: {} supports, min {} >= {}", th.tag(), l.d, l.support_count, l.min_nodes, l.bound);
        }
        assert!(cert.holds());
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
