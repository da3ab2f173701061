fn main() {
    std::process::exit(qrg::cli::run_from_args(std::env::args_os()));
}
