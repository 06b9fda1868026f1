fn main() {
    std::process::exit(saa::cli::main());
}
