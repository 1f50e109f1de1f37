fn main() {
    std::process::exit(valuix::cli::run(std::env::args_os()));
}
