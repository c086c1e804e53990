fn main() {
    std::process::exit(eph_core::cli::main_with_args(std::env::args_os()));
}
