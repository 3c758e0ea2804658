fn main() {
    std::process::exit(tribq::cli::run());
}
