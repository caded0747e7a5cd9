fn main() {
    std::process::exit(grunbaum::cli::run(std::env::args()));
}
