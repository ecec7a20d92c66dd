fn main() {
    std::process::exit(liejordan_cli::main_with_args(std::env::args_os()));
}
