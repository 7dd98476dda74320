fn main() {
    std::process::exit(spincord::cli::run(std::env::args_os()));
}
