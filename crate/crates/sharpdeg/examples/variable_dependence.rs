// Count how many terms of a positive polynomial involve each variable.

use sharpdeg::bounds::variable_dependence_check;
use sharpdeg::constructions::{faran_cubics, whitney};

pub fn run_example() {
    let (_, faran3) = faran_cubics();
    for p in [faran3, whitney(3, 5, None).unwrap(), whitney(4, 3, None).unwrap()] {
        let rep = variable_dependence_check(&p).unwrap();
        println!("d = {}: terms per variable {:?}", rep.degree, rep.counts);
        if let Some(c) = &rep.corollary {
            println!("  d <= {}", c.checks[0].bound.value);
        }
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
