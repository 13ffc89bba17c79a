fn main() {
    std::process::exit(anf::cli::main_with_args(std::env::args_os()));
}
