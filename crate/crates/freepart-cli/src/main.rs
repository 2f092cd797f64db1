fn main() {
    std::process::exit(freepart_cli::run());
}
