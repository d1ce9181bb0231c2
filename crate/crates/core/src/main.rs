fn main() {
    std::process::exit(ffmzv::cli::run(std::env::args_os()));
}
