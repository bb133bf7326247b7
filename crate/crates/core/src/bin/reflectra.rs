fn main() {
    std::process::exit(reflectra::cli::main());
}
