fn main() {
    std::process::exit(liesec::cli::run());
}
