fn main() {
    std::process::exit(pairforge::cli::run());
}
