fn main() {
    std::process::exit(ncc::cli::run_from_env());
}
