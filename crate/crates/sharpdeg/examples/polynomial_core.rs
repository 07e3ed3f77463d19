// Parse a polynomial, homogenize it and divide by the hyperplane form.

use sharpdeg::cli::parse_polynomial;
use sharpdeg::poly::{class_membership, divide_by_s, homogenize_and_flip};

pub fn run_example() {
    let p = parse_polynomial("x1^3 + 3 x1 x2 + x2^3").unwrap();
    println!("p = {p}");
    let rep = class_membership(&p, 2);
    println!("degree {}, N(p) = {}, positive class {}", rep.degree, rep.monomial_count, rep.in_h);
    assert!(rep.in_h);

    let big_p = homogenize_and_flip(&p).unwrap();
    println!("P = {big_p}");
    let q = divide_by_s(&big_p).unwrap();
    println!("Q = P / S = {q}");
    assert_eq!(q.degree(), Some(2));

    // a polynomial that is not 1 on s = 1 has no exact quotient
    let bad = parse_polynomial("x1^2 + x2").unwrap();
    let err = divide_by_s(&homogenize_and_flip(&bad).unwrap()).unwrap_err();
    println!("x1^2 + x2: {err}");
}

#[allow(dead_code)]
fn main() {
    run_example();
}
