fn main() {
    std::process::exit(reglab::cli::run());
}
