fn main() {
    std::process::exit(holefree::cli::main());
}
