fn main() {
    std::process::exit(momentforge::cli::run(std::env::args_os()));
}
