fn main() {
    std::process::exit(linf_snake_cli::run(std::env::args().skip(1)));
}
