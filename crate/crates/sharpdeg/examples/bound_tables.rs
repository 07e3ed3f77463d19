// Evaluate every applicable degree bound for a few polynomials.

use sharpdeg::bounds::{bound_table, verify_bound, BoundClass, BoundObject};
use sharpdeg::constructions::{dkr_sharp_2d, faran_cubics, whitney};

pub fn run_example() {
    for e in bound_table(3, 7, BoundClass::Positive3d).unwrap() {
        println!("{:<8} {:<24} {}", e.tag, e.formula, e.value);
    }
    let (_, faran3) = faran_cubics();
    for p in [dkr_sharp_2d(9).unwrap(), faran3, whitney(4, 3, None).unwrap()] {
        let r = verify_bound(&BoundObject::Polynomial(p.clone())).unwrap();
        println!("\n{p}");
        for c in &r.checks {
            println!("  {} <= {}: {} ({:?}{})", r.actual_degree, c.bound.value, c.satisfied, c.licence, if c.sharp { ", sharp" } else { "" });
        }
        assert!(r.all_satisfied());
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
