fn main() {
    std::process::exit(liecomb::cli::run());
}
