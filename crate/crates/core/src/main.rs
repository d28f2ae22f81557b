fn main() {
    std::process::exit(planarlab::cli::main());
}
