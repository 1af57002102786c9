fn main() {
    std::process::exit(tailix::cli::run(std::env::args_os()));
}
