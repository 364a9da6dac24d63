fn main() {
    std::process::exit(toric_stci::cli::run(std::env::args_os()));
}
