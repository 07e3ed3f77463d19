// Drive the command line front end from code.

pub fn run_example() {
    let runs: &[&[&str]] = &[
        &["sharpdeg", "generate", "dkr", "5"],
        &["sharpdeg", "analyze", "x1^3 + 3 x1 x2 + x2^3"],
        &["sharpdeg", "--json", "verify-bounds", "x1 + x2 + x3"],
        &["sharpdeg", "convert", "x1^2 + 2 x1 x2 + x2^2"],
        &["sharpdeg", "analyze", "x1 + + x2"],
    ];
    for args in runs {
        println!("$ {}", args[1..].join(" "));
        let code = sharpdeg::cli::run(args.iter().copied());
        println!("exit {code}");
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
