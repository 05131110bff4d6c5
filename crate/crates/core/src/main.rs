fn main() {
    std::process::exit(geodesic_bounds::cli::run());
}
