fn main() {
    std::process::exit(sharpdeg::cli::run(std::env::args_os()));
}
