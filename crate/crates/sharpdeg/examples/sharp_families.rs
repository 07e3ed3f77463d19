// The sharp families: Whitney, Faran, the odd two-variable family, extensions.

use sharpdeg::constructions::{dkr_sharp_2d, faran_cubics, rebuild, sharp_extend, undoing_decomposition, whitney, Extender};
use sharpdeg::MultiIndex;

pub fn run_example() {
    let w = whitney(3, 3, Some(&[MultiIndex(vec![1, 0, 0]), MultiIndex(vec![1, 1, 0])])).unwrap();
    println!("whitney(3,3) via x1, x1 x2: {w}");

    let (p2, p3) = faran_cubics();
    println!("faran2 = {p2}\nfaran3 = {p3}");

    for d in [1, 3, 5, 7] {
        let p = dkr_sharp_2d(d).unwrap();
        println!("d = {d}: N = {}  {p}", p.term_count());
        assert_eq!(2 * p.term_count() - 3, d as usize);
    }

    let ext = sharp_extend(&p3, &MultiIndex(vec![3, 0, 0]), Extender::S).unwrap();
    println!("faran3 with x1^3 -> x1^3 s: degree {:?}, N = {}", ext.degree(), ext.term_count());

    let steps = undoing_decomposition(&w).unwrap();
    println!("undo: {} steps", steps.len());
    assert_eq!(rebuild(3, 3, &steps), w);
}

#[allow(dead_code)]
fn main() {
    run_example();
}
