fn main() {
    std::process::exit(u2conic::cli::run(std::env::args_os()));
}
