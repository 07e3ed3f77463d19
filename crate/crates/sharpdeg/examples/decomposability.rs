// Split a polynomial into pieces that vanish on S = 0 separately.

use sharpdeg::bounds::{indecomposability, Indecomposability};
use sharpdeg::constructions::whitney;
use sharpdeg::enumeration::{decomposability_oracle, Decomposition};
use sharpdeg::poly::homogenize_and_flip;

pub fn run_example() {
    let a = homogenize_and_flip(&whitney(2, 3, None).unwrap()).unwrap();
    println!("P = {a}: {:?}", decomposability_oracle(&a).unwrap());
    assert_eq!(indecomposability(&a).unwrap(), Indecomposability::Indecomposable);

    // the sum of two multiples of S on disjoint monomials
    let s = sharpdeg::Polynomial::hyperplane(2);
    let x0 = sharpdeg::Polynomial::var(3, sharpdeg::VarStyle::Projective, 0);
    let x1 = sharpdeg::Polynomial::var(3, sharpdeg::VarStyle::Projective, 1);
    let b = &(&(&x0 * &x0) * &s) + &(&(&x1 * &x1) * &s);
    match decomposability_oracle(&b).unwrap() {
        Decomposition::Split(parts) => {
            for p in parts {
                println!("  piece {p}");
            }
        }
        Decomposition::Indecomposable => unreachable!(),
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
