fn main() {
    std::process::exit(forestcx::cli::run(std::env::args_os()));
}
