fn main() {
    std::process::exit(grover_phase::cli::main_with_args(std::env::args_os()));
}
