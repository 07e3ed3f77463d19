// Full-simplex diagrams in four variables need more nodes than Whitney ones.

use sharpdeg::bounds::filled_observation_check;

pub fn run_example() {
    for d in 2..=3 {
        let v = filled_observation_check(4, d).unwrap();
        println!(
            "d = {d}: face minimum {}, certified >= {}, brute force {:?}, whitney {}",
            v.face_minimum, v.certified_lower_bound, v.brute_force_minimum, v.whitney_nodes
        );
        assert!(v.certified);
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
