fn main() {
    std::process::exit(chardeg::cli::run());
}
