fn main() {
    std::process::exit(kcomb::cli::main());
}
