fn main() {
    std::process::exit(multiloop_cli::run(std::env::args().skip(1).collect()));
}
