fn main() {
    std::process::exit(cauchy_semiaxis_cli::run(std::env::args().collect()));
}
