fn main() {
    std::process::exit(cmwild::cli::main_with_args(std::env::args_os()));
}
