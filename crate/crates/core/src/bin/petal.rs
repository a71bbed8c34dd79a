fn main() {
    std::process::exit(petal_radius::cli::main_with_args(std::env::args_os()));
}
