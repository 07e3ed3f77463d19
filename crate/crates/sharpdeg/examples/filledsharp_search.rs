// Search for sharp three-variable polynomials with maximal support.

use sharpdeg::constructions::filledsharp_search;

pub fn run_example() {
    for d in 1..=4 {
        let out = filledsharp_search(d, false).unwrap();
        println!(
            "d = {d}: {} result(s), {} subsets, {} systems",
            out.results.len(),
            out.stats.subsets_visited,
            out.stats.systems_solved
        );
        for p in &out.results {
            println!("  {p}");
        }
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
