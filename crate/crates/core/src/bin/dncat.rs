fn main() {
    std::process::exit(dncat::cli::run());
}
