fn main() {
    std::process::exit(opcalc::cli::run());
}
