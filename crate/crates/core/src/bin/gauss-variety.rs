fn main() {
    std::process::exit(gauss_variety::cli::main_with_args(std::env::args_os()));
}
