fn main() {
    std::process::exit(freebert::cli::run());
}
